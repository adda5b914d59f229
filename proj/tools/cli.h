// Copyright 2026 The storyuml Authors.
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

#ifndef STORYUML_TOOLS_CLI_H_
#define STORYUML_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace storyuml::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

// Runs one command line. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

// Splits an interactive edit line into words. Double quotes group words and
// a backslash escapes the next character. Throws std::invalid_argument on an
// unterminated quote.
std::vector<std::string> SplitWords(const std::string& line);

}  // namespace storyuml::cli

#endif  // STORYUML_TOOLS_CLI_H_
