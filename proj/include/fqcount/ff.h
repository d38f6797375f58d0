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

// Arithmetic in GF(p^e).
//
// A field is built from (p, e) with a canonical modulus: the smallest monic
// irreducible polynomial of degree e over F_p when coefficient vectors are
// compared lexicographically starting from the constant term. Elements are
// identified by their enumeration index, whose base-p digits are the
// coefficients of 1, x, ..., x^{e-1}. Index 0 is zero and index 1 is one.

#ifndef FQCOUNT_FF_H_
#define FQCOUNT_FF_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fqcount::ff {

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class Field {
 public:
  // Throws PreconditionError if p is not prime, e == 0, or p^e > max_order.
  Field(std::uint32_t p, std::uint32_t e,
        std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool odd() const { return p_ != 2; }

  // Coefficients c_0..c_e of the modulus, c_e == 1. Degree-1 fields use "x".
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element element(std::uint64_t index) const;
  // Image of an integer in the prime subfield.
  Element from_int(std::int64_t value) const;
  std::vector<std::uint32_t> coeffs(Element a) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  // Throws PreconditionError for a == 0.
  Element inv(Element a) const;
  // Square-and-multiply; pow(a, 0) == 1 including a == 0.
  Element pow(Element a, std::uint64_t exponent) const;

  // 0 for zero, 1 for a nonzero square, -1 otherwise. Odd characteristic only.
  int quadratic_character(Element a) const;
  // Whether the quadratic character is identically 1 on F_p^*.
  bool char_restriction_trivial() const;

  // p^{e/2} when e is even.
  std::optional<std::uint32_t> sqrt_order() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  struct Tables;

  Element add_digits(Element a, Element b) const;
  void require_member(Element a) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

inline Field make_field(std::uint32_t p, std::uint32_t e,
                        std::uint64_t max_order = kDefaultMaxOrder) {
  return Field(p, e, max_order);
}

bool is_prime(std::uint64_t n);

// Monic irreducibility over F_p, coefficients low to high.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace fqcount::ff

#endif  // FQCOUNT_FF_H_
