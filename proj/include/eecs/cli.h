// Copyright 2026 The EECS Authors.
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

#ifndef EECS_CLI_H_
#define EECS_CLI_H_

#include <map>
#include <string>
#include <vector>

namespace eecs {

// Entry point of the command-line tool. Returns the process exit code: 0 on
// success, 1 for invalid input (flags, files, formats), 2 for runtime
// failures.
int RunCli(int argc, const char *const *argv);

// Reads "key = value" lines; blank lines and lines starting with '#' are
// ignored. Throws ParseError on a line without '='.
std::map<std::string, std::string> ReadConfigFile(const std::string &path);

// Appends "--key=value" for every config entry whose flag is not already
// present in `args` (args[0] is the subcommand path). Flags win.
std::vector<std::string> MergeConfig(const std::vector<std::string> &args,
                                     const std::map<std::string, std::string> &config);

}  // namespace eecs

#endif  // EECS_CLI_H_
