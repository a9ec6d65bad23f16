// Copyright 2026 The rbraid Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rbraid/cartan.hpp"
#include "rbraid/fusion.hpp"

namespace rbraid {

enum class OutputFormat { Text, Structured };

/// One batch job. With a module file the Lie data comes from the file and
/// the weight is ignored.
struct JobConfig {
  LieType lie_type = LieType::A;
  int rank = 1;
  std::vector<long> weight{1};
  int strands = 3;
  std::string word;
  std::string module_file;
  int order = 2;
  std::size_t cap = kDefaultDimensionCap;
  OutputFormat format = OutputFormat::Text;
};

/// Bad flags or flag combinations; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitVerification = 3 };

struct JobResult {
  int status = kExitOk;
  std::string output;
};

/// Validates the config against the Cartan data; throws UsageError.
void validate(const JobConfig& config);

JobResult cmd_twist(const JobConfig& config);
JobResult cmd_fuse(const JobConfig& config);
JobResult cmd_rmatrix(const JobConfig& config);
JobResult cmd_braid(const JobConfig& config);
/// Status kExitVerification when any named identity fails.
JobResult cmd_verify(const JobConfig& config);
/// Module file text for the configured module.
JobResult cmd_module(const JobConfig& config);

/// Dispatches by name and maps exceptions to exit codes, with the message
/// as output on failure.
JobResult run_command(std::string_view name, const JobConfig& config);

}  // namespace rbraid
