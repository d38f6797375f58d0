// Copyright 2026 The fqcount Authors
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

#ifndef FQCOUNT_TOOLS_CLI_H_
#define FQCOUNT_TOOLS_CLI_H_

#include <map>
#include <string>
#include <vector>

#include "fqcount/oracle.h"

namespace fqcount::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBudget = 2,
  kMismatch = 3,
};

enum class OutputFormat { kJson, kCsv, kPlain };

struct RunConfig {
  oracle::EnumerationBudget budget;
  OutputFormat output_format = OutputFormat::kJson;
  // 0 = one worker per hardware thread.
  unsigned parallelism = 1;
  std::string config_path;
};

// Reads "key = value" lines; '#' starts a comment. Known keys: budget,
// parallelism, output_format.
void apply_config_text(const std::string& text, RunConfig& config);

// FQCOUNT_BUDGET, FQCOUNT_PARALLELISM, FQCOUNT_FORMAT.
void apply_environment(const std::map<std::string, std::string>& env,
                       RunConfig& config);

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// args excludes the program name. Precedence: defaults, config file,
// environment, flags.
CommandResult run_command(const std::vector<std::string>& args,
                          const std::map<std::string, std::string>& env = {});

// Environment entries relevant to run_command, read from the process.
std::map<std::string, std::string> process_environment();

}  // namespace fqcount::cli

#endif  // FQCOUNT_TOOLS_CLI_H_
