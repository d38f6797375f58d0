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

#include "fqcount/exactcomb.h"

#include <functional>
#include <string>

#include "fqcount/errors.h"

namespace fqcount {

Integer require_integer(const Rational& r, std::string_view what) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw IntegrityError(std::string(what) + " evaluated to non-integer " +
                         c.get_str());
  }
  return c.get_num();
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power_q(std::uint64_t q, long exponent) {
  const Integer magnitude =
      power(Integer(static_cast<unsigned long>(q)),
            static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(magnitude);
  Rational out(Integer(1), magnitude);
  out.canonicalize();
  return out;
}

}  // namespace fqcount

namespace fqcount::comb {

CycleType::CycleType(std::vector<unsigned> counts)
    : n_(static_cast<unsigned>(counts.size())) {
  unsigned long total = 0;
  for (unsigned i = 1; i <= n_; ++i) {
    const unsigned c = counts[i - 1];
    total += static_cast<unsigned long>(i) * c;
    if (c != 0) parts_.emplace_back(i, c);
  }
  if (n_ == 0 || total != n_) {
    throw PreconditionError("cycle type must satisfy sum i*c_i == n >= 1");
  }
}

unsigned CycleType::count(unsigned length) const {
  for (const auto& [len, mult] : parts_) {
    if (len == length) return mult;
  }
  return 0;
}

std::vector<unsigned> CycleType::counts() const {
  std::vector<unsigned> dense(n_, 0);
  for (const auto& [len, mult] : parts_) dense[len - 1] = mult;
  return dense;
}

unsigned CycleType::cycles() const {
  unsigned l = 0;
  for (const auto& part : parts_) l += part.second;
  return l;
}

unsigned CycleType::cycles_divisible_by(unsigned p) const {
  unsigned r = 0;
  for (const auto& [len, mult] : parts_) {
    if (len % p == 0) r += mult;
  }
  return r;
}

Integer CycleType::class_size() const { return perm_type_count(*this); }

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long a, long b) {
  if (a < 0) {
    throw PreconditionError("binomial requires a nonnegative upper index");
  }
  if (b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

Integer perm_type_count(const CycleType& type) {
  Integer denom = 1;
  for (const auto& [len, mult] : type.parts()) {
    denom *= power(Integer(len), mult) * factorial(mult);
  }
  return factorial(type.n()) / denom;
}

std::vector<CycleType> enumerate_cycle_types(unsigned n, unsigned max_n) {
  if (n == 0 || n > max_n) {
    throw PreconditionError("cycle-type degree " + std::to_string(n) +
                            " outside [1, " + std::to_string(max_n) + "]");
  }
  std::vector<CycleType> out;
  std::vector<unsigned> counts(n, 0);
  // Choosing c_1, c_2, ... in increasing order yields lexicographic order.
  // A remainder r is completable by parts longer than i iff r == 0 or r > i.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i,
                                                     unsigned remaining) {
    if (i > n) {
      if (remaining == 0) out.emplace_back(counts);
      return;
    }
    for (unsigned c = 0; c * i <= remaining; ++c) {
      const unsigned rest = remaining - c * i;
      if (rest != 0 && rest <= i) continue;
      counts[i - 1] = c;
      rec(i + 1, rest);
    }
    counts[i - 1] = 0;
  };
  rec(1, n);
  return out;
}

Integer stirling_cycle(unsigned n, unsigned i) {
  if (i < 1 || i > n) {
    throw PreconditionError("stirling_cycle requires 1 <= i <= n");
  }
  Integer total = 0;
  for (const auto& type : enumerate_cycle_types(n)) {
    if (type.cycles() == i) total += perm_type_count(type);
  }
  return total;
}

Integer p_divisible_cycle_count(unsigned n, unsigned i, unsigned p) {
  if (i < 1 || i > n) {
    throw PreconditionError("p_divisible_cycle_count requires 1 <= i <= n");
  }
  if (n % p != 0) return 0;
  Integer total = 0;
  for (const auto& type : enumerate_cycle_types(n)) {
    if (type.cycles() == i && type.cycles_divisible_by(p) == i) {
      total += perm_type_count(type);
    }
  }
  return total;
}

}  // namespace fqcount::comb
