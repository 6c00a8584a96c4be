// Copyright 2026 The verbpattern Authors.
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

// Line-oriented TSV helpers shared by the loaders.

#ifndef VERBPATTERN_SRC_TSV_H_
#define VERBPATTERN_SRC_TSV_H_

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace verbpattern::internal {

std::vector<std::string_view> SplitTabs(std::string_view line);

// Strict positive integer parse. Returns false on anything else, including
// zero, signs, and trailing garbage.
bool ParsePositiveCount(std::string_view field, std::uint64_t *out);

// Calls `row(fields, line_number)` for each non-blank, non-comment line.
// Strips a trailing '\r' so CRLF files load.
void ForEachRow(std::istream &in,
                const std::function<void(const std::vector<std::string_view> &,
                                         std::size_t)> &row);

// Opens `path` for reading or throws LoadError with line 0.
std::ifstream OpenInput(const std::string &path);

}  // namespace verbpattern::internal

#endif  // VERBPATTERN_SRC_TSV_H_
