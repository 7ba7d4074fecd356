/*
   Copyright 2026 The tcc Authors

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

/**
 * @file cli.hpp
 * @brief Batch command implementations behind the tcc executable.
 *
 * Every command returns a RunReport carrying the result payload, wall
 * time, and named verification flags.  Flags are tri-state (passed /
 * failed / skipped) and never silently absent; the process exit code
 * is 0 exactly when every flag is passed or skipped.
 */

#ifndef TCC_CLI_HPP
#define TCC_CLI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcc/io.hpp"
#include "tcc/verify.hpp"

namespace tcc {

enum class CheckState { Passed, Failed, Skipped };

const char* check_state_name(CheckState s);

struct RunReport {
    std::string command;
    Json inputs;
    Json result;
    double elapsed_ms = 0.0;
    std::vector<std::pair<std::string, CheckState>> checks;
    std::string text;  // human-readable rendering of the result

    /// True when every check is passed or skipped.
    bool ok() const;
    Json to_json() const;
};

RunReport cmd_dim(const ProblemFile& p);
RunReport cmd_basis(const ProblemFile& p);
RunReport cmd_decompose(const ProblemFile& p);
/// Requires p.X (the candidate codeword).
RunReport cmd_check(const ProblemFile& p);
RunReport cmd_oracle(const ProblemFile& p, bool unsafe_large);
RunReport cmd_params(const ProblemFile& p, bool distance, uint64_t max_enum);
RunReport cmd_random_verify(const SweepConfig& cfg);

/// Parse a prime power q into a field (GF(p^k) with the default
/// modulus); throws ParseError when q is not a prime power.
Field field_from_q(uint64_t q);

}  // namespace tcc

#endif  // TCC_CLI_HPP
