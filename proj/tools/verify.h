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

// Formula-versus-oracle sweeps.

#ifndef FQCOUNT_TOOLS_VERIFY_H_
#define FQCOUNT_TOOLS_VERIFY_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fqcount/exactcomb.h"
#include "fqcount/oracle.h"

namespace fqcount::verify {

enum class Suite { kGap1, kGap2, kGap3, kSubset, kMss2, kSieve, kQuadLin, kWenger };

const std::vector<Suite>& all_suites();
const char* suite_name(Suite suite);
std::optional<Suite> parse_suite(const std::string& name);

// Unset bounds fall back to per-suite defaults.
struct Limits {
  std::optional<unsigned> max_q;
  std::optional<unsigned> max_n;
  // Field for the single-field suites (gap3, mss2, sieve).
  std::optional<unsigned> p;
  std::optional<unsigned> e;
  // Random tuples per (q, n) in the quadlin suite.
  unsigned samples = 200;
  std::uint64_t seed = 20260101;
  // Test fixture: adds one to the first formula value of the sweep.
  bool inject_fault = false;
};

struct Row {
  std::string suite;
  unsigned q = 0;
  unsigned n = 0;
  std::string ell;
  std::string k;
  std::string b;
  Integer formula_value;
  Integer oracle_value;
  // Command line that recomputes the point with both methods.
  std::string command;

  bool match() const { return formula_value == oracle_value; }
};

struct Report {
  std::vector<Row> rows;

  std::size_t mismatches() const;
  const Row* first_mismatch() const;
};

Report run_suite(Suite suite, const Limits& limits,
                 const oracle::EnumerationBudget& budget);

inline constexpr const char* kCsvHeader =
    "suite,q,n,ell,k,b,formula_value,oracle_value,match";

void write_csv(std::ostream& os, const Report& report);
// Minimal reproducer for a mismatching row.
std::string reproducer(const Row& row);

}  // namespace fqcount::verify

#endif  // FQCOUNT_TOOLS_VERIFY_H_
