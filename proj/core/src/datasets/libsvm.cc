//
// Copyright 2026 The dpnewton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#include "dpnewton/datasets/libsvm.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "absl/strings/str_cat.h"

namespace dpnewton {
namespace {

bool ParseDouble(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseInt(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

absl::Status LineError(int line_no, std::string_view what,
                       std::string_view token) {
  return absl::InvalidArgumentError(absl::StrCat(
      "libsvm line ", line_no, ": ", std::string(what), " '",
      std::string(token), "'"));
}

}  // namespace

absl::StatusOr<LibsvmData> ParseLibsvm(std::istream& in) {
  LibsvmData data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string_view> tokens = Tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    RawRecord record;
    if (!ParseDouble(tokens[0], record.label)) {
      return LineError(line_no, "malformed label", tokens[0]);
    }
    int last_index = 0;
    for (size_t k = 1; k < tokens.size(); ++k) {
      const std::string_view tok = tokens[k];
      const size_t colon = tok.find(':');
      int index = 0;
      double value = 0.0;
      if (colon == std::string_view::npos ||
          !ParseInt(tok.substr(0, colon), index) ||
          !ParseDouble(tok.substr(colon + 1), value)) {
        return LineError(line_no, "malformed feature", tok);
      }
      if (index < 1) return LineError(line_no, "index must be >= 1", tok);
      if (index <= last_index) {
        return LineError(line_no, "indices must be strictly increasing", tok);
      }
      last_index = index;
      record.features.emplace_back(index, value);
    }
    data.dim = std::max(data.dim, last_index);
    data.records.push_back(std::move(record));
  }
  return data;
}

absl::StatusOr<LibsvmData> ParseLibsvmString(const std::string& text) {
  std::istringstream in(text);
  return ParseLibsvm(in);
}

absl::StatusOr<LibsvmData> ReadLibsvmFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ParseLibsvm(in);
}

std::string FormatLibsvm(const std::vector<RawRecord>& records) {
  std::string out;
  char buf[64];
  for (const RawRecord& r : records) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.label);
    out += buf;
    for (const auto& [index, value] : r.features) {
      std::snprintf(buf, sizeof(buf), " %d:%.17g", index, value);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace dpnewton
