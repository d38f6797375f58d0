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

// Exhaustive enumeration oracles. Each oracle computes its enumeration size
// before starting and throws BudgetExceeded instead of truncating.

#ifndef FQCOUNT_ORACLE_H_
#define FQCOUNT_ORACLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fqcount/counting.h"
#include "fqcount/exactcomb.h"
#include "fqcount/ff.h"

namespace fqcount::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerationBudget {
  std::uint64_t max_items = kDefaultBudget;
  // Worker threads for range-partitioned enumeration; 0 = auto.
  unsigned workers = 1;
};

// Throws BudgetExceeded when size > budget.max_items.
void check_budget(const Integer& size, const EnumerationBudget& budget,
                  const std::string& what);

// Number of distinct roots in F_q, by evaluation at every element.
// Coefficients are low to high.
unsigned count_distinct_roots(const ff::Field& field,
                              std::span<const ff::Element> coeffs);

// Histogram over k of the number of tails a_ell..a_0 for which
// x^n + u_high + tail has exactly k distinct roots. u_high lists the fixed
// coefficients of x^{n-1} down to x^{ell+1} (n - ell - 1 entries).
std::vector<Integer> brute_nk_histogram(const ff::Field& field,
                                        std::span<const ff::Element> u_high,
                                        unsigned n, unsigned ell,
                                        const EnumerationBudget& budget = {});

counting::ExactCount brute_nk(const ff::Field& field,
                              std::span<const ff::Element> u_high, unsigned n,
                              unsigned ell, unsigned k,
                              const EnumerationBudget& budget = {});

enum class SubsetMode {
  kSumOnly,        // sum S = m1
  kPowerSums,      // sum S = m1, sum of squares = m2
  kElementary,     // e_1(S) = m1, e_2(S) = m2
  kFirstDistinct,  // (t-1)-subsets S, x_t = m1 - sum S, squares sum to m2
};

const char* subset_mode_name(SubsetMode mode);

// Counts subsets of F_q of size t_size (t_size - 1 for kFirstDistinct)
// satisfying the mode's predicate. m2 is ignored by kSumOnly.
counting::ExactCount brute_subsets_mss2(const ff::Field& field,
                                        unsigned t_size, ff::Element m1,
                                        ff::Element m2, SubsetMode mode,
                                        const EnumerationBudget& budget = {});

// Number of t-subsets of F_q with each possible element sum, indexed by the
// sum's enumeration index.
std::vector<Integer> brute_subset_sum_histogram(
    const ff::Field& field, unsigned t_size,
    const EnumerationBudget& budget = {});

// Solutions in F_q^n of sum a_i x_i^2 = a0 and sum b_i x_i = b0.
counting::ExactCount brute_quadlin(const ff::Field& field,
                                   std::span<const ff::Element> a,
                                   ff::Element a0,
                                   std::span<const ff::Element> bvec,
                                   ff::Element b0,
                                   const EnumerationBudget& budget = {});

}  // namespace fqcount::oracle

#endif  // FQCOUNT_ORACLE_H_
