// Copyright 2026 The cpg Authors
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

#ifndef CPG_TOOLS_CLI_HPP_
#define CPG_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cpg::cli {

// Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
// 3 numerical failure, 4 theorem violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cpg::cli

#endif  // CPG_TOOLS_CLI_HPP_
