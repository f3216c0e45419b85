// Copyright 2026 The combsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMBSEL_CORE_CSV_HPP_
#define COMBSEL_CORE_CSV_HPP_

#include <iosfwd>
#include <string>

#include "core/embedding.hpp"

namespace combsel {

// Embedding CSV: header `f0,...,f{d-1}[,label][,objectness]`, one row per
// item. Lines starting with '#' are comments and are skipped on read.
EmbeddingSet ReadEmbeddingsCsv(std::istream& in);
EmbeddingSet ReadEmbeddingsCsv(const std::string& path);

// `comment`, when non-empty, is written as a single leading `# ...` line.
void WriteEmbeddingsCsv(std::ostream& out, const EmbeddingSet& embeddings,
                        const std::string& comment = {});
void WriteEmbeddingsCsv(const std::string& path, const EmbeddingSet& embeddings,
                        const std::string& comment = {});

// Shortest round-trip decimal form, locale independent.
std::string FormatDouble(double value);

}  // namespace combsel

#endif  // COMBSEL_CORE_CSV_HPP_
