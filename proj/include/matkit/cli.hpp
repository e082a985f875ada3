// Copyright 2026 The Authors.
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
//
// Command-line surface, separated from main() so tests can drive it with
// in-memory streams.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matkit {

// Runs one CLI invocation.  args excludes the program name.  FILE operands
// equal to "-" read the construction document from `in`.  Returns 0 on
// success (for `verify`, when nothing failed), 1 on a data or verification
// error, and 2 on a malformed invocation.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace matkit
