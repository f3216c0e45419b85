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

#include "core/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace combsel {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) {
      f.remove_suffix(1);
    }
  }
  return fields;
}

double ParseDouble(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("line " + std::to_string(line_no) +
                          ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

int ParseInt(std::string_view text, std::size_t line_no) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("line " + std::to_string(line_no) +
                          ": cannot parse integer label '" + std::string(text) +
                          "'");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

EmbeddingSet ReadEmbeddingsCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  std::string header_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    header_line = line;
    break;
  }
  if (header_line.empty()) throw InvalidArgument("embedding CSV has no header");
  header = SplitFields(header_line);

  std::size_t d = 0;
  while (d < header.size() && header[d] == "f" + std::to_string(d)) ++d;
  if (d == 0) throw InvalidArgument("embedding CSV header must start with f0");
  int label_col = -1;
  int objectness_col = -1;
  for (std::size_t c = d; c < header.size(); ++c) {
    if (header[c] == "label" && label_col < 0 && objectness_col < 0) {
      label_col = static_cast<int>(c);
    } else if (header[c] == "objectness" && objectness_col < 0) {
      objectness_col = static_cast<int>(c);
    } else {
      throw InvalidArgument("unexpected CSV column '" + std::string(header[c]) +
                            "'");
    }
  }

  std::vector<double> data;
  std::vector<int> labels;
  std::vector<double> objectness;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < d; ++c) data.push_back(ParseDouble(fields[c], line_no));
    if (label_col >= 0) labels.push_back(ParseInt(fields[label_col], line_no));
    if (objectness_col >= 0) {
      objectness.push_back(ParseDouble(fields[objectness_col], line_no));
    }
    ++rows;
  }
  std::optional<std::vector<int>> opt_labels;
  std::optional<std::vector<double>> opt_objectness;
  if (label_col >= 0) opt_labels = std::move(labels);
  if (objectness_col >= 0) opt_objectness = std::move(objectness);
  return EmbeddingSet(rows, d, std::move(data), std::move(opt_labels),
                      std::move(opt_objectness));
}

EmbeddingSet ReadEmbeddingsCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return ReadEmbeddingsCsv(in);
}

void WriteEmbeddingsCsv(std::ostream& out, const EmbeddingSet& embeddings,
                        const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const std::size_t d = embeddings.cols();
  for (std::size_t c = 0; c < d; ++c) {
    if (c) out << ',';
    out << 'f' << c;
  }
  if (embeddings.has_labels()) out << ",label";
  if (embeddings.has_objectness()) out << ",objectness";
  out << '\n';
  for (std::size_t i = 0; i < embeddings.rows(); ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      if (c) out << ',';
      out << FormatDouble(embeddings.at(i, c));
    }
    if (embeddings.has_labels()) out << ',' << embeddings.labels()[i];
    if (embeddings.has_objectness()) {
      out << ',' << FormatDouble(embeddings.objectness()[i]);
    }
    out << '\n';
  }
}

void WriteEmbeddingsCsv(const std::string& path, const EmbeddingSet& embeddings,
                        const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  WriteEmbeddingsCsv(out, embeddings, comment);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace combsel
