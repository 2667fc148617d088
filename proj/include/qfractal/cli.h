// Copyright 2026 The qfractal Authors
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

#ifndef QFRACTAL_CLI_H
#define QFRACTAL_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qfractal {

constexpr int EXIT_OK = 0;
constexpr int EXIT_NEGATIVE = 1;  // check ran and failed (invalid step, no match, failed roundtrip)
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_GUARD = 3;

/// Runs the `qfractal` command line. `args` excludes the program name.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qfractal

#endif
