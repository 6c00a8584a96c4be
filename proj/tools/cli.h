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

// Batch front end: extract | stats | eval | conceptualize.

#ifndef VERBPATTERN_TOOLS_CLI_H_
#define VERBPATTERN_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace verbpattern::cli {

// `args` excludes the program name. Returns the process exit status.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

// Hex SHA-256 of a file's bytes. Throws LoadError if unreadable.
std::string FileSha256(const std::string &path);

}  // namespace verbpattern::cli

#endif  // VERBPATTERN_TOOLS_CLI_H_
