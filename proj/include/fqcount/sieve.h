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

// Distinct-coordinate sieve over permutation cycle types.
//
// For a symmetric X in F_q^n, the tuples of X with pairwise distinct
// coordinates number
//
//   sum over cycle types tau of n:  (-1)^{n - l(tau)} C(tau) |X_tau|
//
// where X_tau is the part of X constant on every cycle of tau. Counters here
// supply |X_tau| from the cycle type alone.
//
// The first-(n-1) variant permutes only the first n-1 coordinates: cycle
// types are taken on n-1 points and the last coordinate stays free.

#ifndef FQCOUNT_SIEVE_H_
#define FQCOUNT_SIEVE_H_

#include <functional>

#include "fqcount/exactcomb.h"
#include "fqcount/ff.h"

namespace fqcount::sieve {

enum class Scope {
  kAllCoordinates,  // types on n points, for sieve_distinct
  kFirstNMinus1,    // types on n-1 points, for sieve_first_n_minus_1
};

struct SymmetricCounter {
  unsigned n = 0;
  Scope scope = Scope::kAllCoordinates;
  std::function<Integer(const comb::CycleType&)> count_for_type;
};

Integer sieve_distinct(const SymmetricCounter& counter,
                       unsigned max_n = comb::kDefaultMaxCycleTypeDegree);

Integer sieve_first_n_minus_1(
    const SymmetricCounter& counter,
    unsigned max_n = comb::kDefaultMaxCycleTypeDegree);

// X = F_q^n.
SymmetricCounter unconstrained_counter(const ff::Field& field, unsigned n,
                                       Scope scope = Scope::kAllCoordinates);

// X = {x : x_1 + ... + x_n = b}.
SymmetricCounter linear_sum_counter(const ff::Field& field, unsigned n,
                                    ff::Element b,
                                    Scope scope = Scope::kAllCoordinates);

// X = {x : x_1 + ... + x_n = 0, x_1^2 + ... + x_n^2 = 0}, q odd.
//
// Collapsing a cycle of length t to one variable y gives t*y and t*y^2.
// Cycles with p | t drop out of both equations and contribute a free factor
// of q each. The remaining s cycles (plus the free last coordinate, with
// coefficient 1, in the first-(n-1) scope) form the system
//   sum t_j y_j^2 = 0,  sum t_j y_j = 0,
// counted by counting::quad_lin_solution_count. With no remaining
// variables both equations vanish and |X_tau| = q^{l(tau)}.
SymmetricCounter power_sum_counter(const ff::Field& field, unsigned n,
                                   Scope scope = Scope::kAllCoordinates);

}  // namespace fqcount::sieve

#endif  // FQCOUNT_SIEVE_H_
