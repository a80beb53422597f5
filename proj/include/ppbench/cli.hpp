// Copyright 2026 The ppbench Authors
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

#ifndef PPBENCH_CLI_HPP_
#define PPBENCH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ppbench::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitIntegrity = 4;

// Entry point of the ppbench tool; args exclude the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ppbench::cli

#endif  // PPBENCH_CLI_HPP_
