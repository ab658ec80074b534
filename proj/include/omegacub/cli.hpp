/*
   Copyright 2026 The omegacub Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OMEGACUB_CLI_HPP
#define OMEGACUB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace omegacub::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNotFound = 3, kInternalError = 4 };

enum class Format { Json, Text };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string order = "deglex";  // or a path to a monomial list
    Format format = Format::Json;
    std::size_t mc_samples = 100000;
    bool mc = false;
    std::uint64_t seed = 20260101;
    double tol = 1e-10;
};

/// Runs one command; args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegacub::cli

#endif
