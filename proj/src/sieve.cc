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

#include "fqcount/sieve.h"

#include <vector>

#include "fqcount/counting.h"
#include "fqcount/errors.h"

namespace fqcount::sieve {
namespace {

Integer signed_type_sum(const SymmetricCounter& counter, unsigned points,
                        unsigned max_n) {
  Integer total = 0;
  for (const auto& type : comb::enumerate_cycle_types(points, max_n)) {
    Integer term = comb::perm_type_count(type) * counter.count_for_type(type);
    if ((points - type.cycles()) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

Integer q_power(const ff::Field& field, unsigned long exponent) {
  return power(Integer(field.q()), exponent);
}

}  // namespace

Integer sieve_distinct(const SymmetricCounter& counter, unsigned max_n) {
  if (counter.scope != Scope::kAllCoordinates) {
    throw PreconditionError("sieve_distinct needs an all-coordinates counter");
  }
  return signed_type_sum(counter, counter.n, max_n);
}

Integer sieve_first_n_minus_1(const SymmetricCounter& counter, unsigned max_n) {
  if (counter.scope != Scope::kFirstNMinus1) {
    throw PreconditionError("sieve_first_n_minus_1 needs a first-(n-1) counter");
  }
  if (counter.n < 2) throw PreconditionError("sieve_first_n_minus_1 needs n >= 2");
  return signed_type_sum(counter, counter.n - 1, max_n);
}

SymmetricCounter unconstrained_counter(const ff::Field& field, unsigned n,
                                       Scope scope) {
  const unsigned extra = scope == Scope::kFirstNMinus1 ? 1 : 0;
  return {n, scope, [field, extra](const comb::CycleType& t) {
            return q_power(field, t.cycles() + extra);
          }};
}

SymmetricCounter linear_sum_counter(const ff::Field& field, unsigned n,
                                    ff::Element b, Scope scope) {
  if (b.index >= field.q()) throw PreconditionError("b is not a field element");
  return {n, scope, [field, b, scope](const comb::CycleType& t) {
            const unsigned l = t.cycles();
            // The free last coordinate always carries coefficient 1.
            if (scope == Scope::kFirstNMinus1) return q_power(field, l);
            if (t.cycles_not_divisible_by(field.p()) > 0) {
              return q_power(field, l - 1);
            }
            return b == field.zero() ? q_power(field, l) : Integer(0);
          }};
}

SymmetricCounter power_sum_counter(const ff::Field& field, unsigned n,
                                   Scope scope) {
  if (!field.odd()) {
    throw PreconditionError("power-sum system counter requires odd q");
  }
  return {n, scope, [field, scope](const comb::CycleType& t) -> Integer {
            const unsigned p = field.p();
            std::vector<ff::Element> coeffs;
            for (const auto& [len, mult] : t.parts()) {
              if (len % p == 0) continue;
              for (unsigned i = 0; i < mult; ++i) coeffs.push_back(field.from_int(len));
            }
            if (scope == Scope::kFirstNMinus1) coeffs.push_back(field.one());
            const unsigned free_cycles = t.cycles_divisible_by(p);
            if (coeffs.empty()) return q_power(field, t.cycles());
            const auto collapsed = counting::quad_lin_solution_count(
                field, coeffs, field.zero(), coeffs, field.zero());
            return q_power(field, free_cycles) * collapsed.value;
          }};
}

}  // namespace fqcount::sieve
