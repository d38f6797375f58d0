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

// Exact integer combinatorics over GMP integers: binomials, permutation
// cycle types and the counts built from them.

#ifndef FQCOUNT_EXACTCOMB_H_
#define FQCOUNT_EXACTCOMB_H_

#include <gmpxx.h>

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace fqcount {

using Integer = mpz_class;
using Rational = mpq_class;

// Returns the integer value of r, throwing IntegrityError (naming `what`)
// when the reduced denominator is not 1.
Integer require_integer(const Rational& r, std::string_view what);

Integer power(const Integer& base, unsigned long exponent);
// q^exponent for a possibly negative exponent.
Rational power_q(std::uint64_t q, long exponent);

}  // namespace fqcount

namespace fqcount::comb {

inline constexpr unsigned kDefaultMaxCycleTypeDegree = 64;

// Cycle structure (c_1, ..., c_n) of a permutation of n points: c_i cycles
// of length i, with sum of i * c_i equal to n. Stored sparsely as
// (length, multiplicity) pairs in increasing length.
class CycleType {
 public:
  // counts[i - 1] is c_i; counts.size() is n.
  explicit CycleType(std::vector<unsigned> counts);

  unsigned n() const { return n_; }
  unsigned count(unsigned length) const;
  std::vector<unsigned> counts() const;
  const std::vector<std::pair<unsigned, unsigned>>& parts() const {
    return parts_;
  }

  // l(tau): total number of cycles, fixed points included.
  unsigned cycles() const;
  // Number of cycles whose length is (not) divisible by p.
  unsigned cycles_divisible_by(unsigned p) const;
  unsigned cycles_not_divisible_by(unsigned p) const {
    return cycles() - cycles_divisible_by(p);
  }
  // C(tau): size of the conjugacy class.
  Integer class_size() const;

 private:
  unsigned n_;
  std::vector<std::pair<unsigned, unsigned>> parts_;
};

Integer factorial(unsigned long n);

// C(a, b); zero when b < 0 or b > a. Requires a >= 0.
Integer binomial(long a, long b);

// n! / prod_i (i^{c_i} c_i!).
Integer perm_type_count(const CycleType& type);

// All cycle types of n points in ascending lexicographic order of
// (c_1, ..., c_n). Throws PreconditionError when n is 0 or above max_n.
std::vector<CycleType> enumerate_cycle_types(
    unsigned n, unsigned max_n = kDefaultMaxCycleTypeDegree);

// Unsigned Stirling number of the first kind c(n, i).
Integer stirling_cycle(unsigned n, unsigned i);

// Number of permutations of n points with i cycles, every cycle length
// divisible by p.
Integer p_divisible_cycle_count(unsigned n, unsigned i, unsigned p);

}  // namespace fqcount::comb

#endif  // FQCOUNT_EXACTCOMB_H_
