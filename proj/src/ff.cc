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

#include "fqcount/ff.h"

#include <algorithm>
#include <string>

#include "fqcount/errors.h"

namespace fqcount::ff {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^{p-2} is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the monic-or-not nonzero polynomial f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f,
                 std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  for (; k > 0; k >>= 1) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(f, x^{p^i} - x) == 1.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

struct Field::Tables {
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
  std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  std::vector<std::uint32_t> add;  // q*q table, only for small q
};

namespace {

constexpr std::uint32_t kAddTableMaxOrder = 256;

class DigitArithmetic {
 public:
  DigitArithmetic(std::uint32_t p, std::uint32_t e, const Poly& modulus)
      : p_(p), e_(e), modulus_(modulus) {}

  Poly digits(std::uint32_t index) const {
    Poly d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = index % p_;
      index /= p_;
    }
    return d;
  }

  std::uint32_t index(const Poly& d) const {
    std::uint32_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p_ + d[i];
    return idx;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    Poly r = poly_mulmod(digits(a), digits(b), modulus_, p_);
    r.resize(e_, 0);
    return index(r);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t result = 1;
    for (; k > 0; k >>= 1) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
    }
    return result;
  }

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  Poly modulus_;
};

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t e, std::uint64_t max_order)
    : p_(p), e_(e) {
  if (!is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not prime");
  }
  if (e == 0) throw PreconditionError("extension degree must be >= 1");
  const std::uint64_t bound =
      std::min<std::uint64_t>(max_order, std::uint64_t{1} << 31);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > bound) {
      throw PreconditionError("field order " + std::to_string(p) + "^" +
                              std::to_string(e) + " exceeds bound " +
                              std::to_string(bound));
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    // Constant term is the most significant digit of the search order.
    Poly candidate(e + 1, 0);
    candidate[e] = 1;
    for (std::uint64_t t = 0; t < q; ++t) {
      std::uint64_t rest = t;
      for (std::uint32_t j = e; j-- > 0;) {
        candidate[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_irreducible(candidate, p)) {
        modulus_ = candidate;
        break;
      }
    }
  }

  DigitArithmetic raw(p, e, modulus_);
  auto tables = std::make_shared<Tables>();
  tables->neg.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly d = raw.digits(a);
    for (auto& c : d) c = (p - c) % p;
    tables->neg[a] = raw.index(d);
  }

  const std::uint64_t group_order = q_ - 1;
  const auto factors = prime_factors(group_order);
  std::uint32_t generator = 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (raw.pow(g, group_order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  tables->exp.resize(group_order);
  tables->log.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    tables->exp[i] = x;
    tables->log[x] = static_cast<std::uint32_t>(i);
    x = raw.mul(x, generator);
  }
  tables_ = tables;

  if (q_ <= kAddTableMaxOrder) {
    tables->add.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        tables->add[std::size_t{a} * q_ + b] =
            add_digits(Element{a}, Element{b}).index;
      }
    }
  }
}

void Field::require_member(Element a) const {
  if (a.index >= q_) {
    throw PreconditionError("element index " + std::to_string(a.index) +
                            " is outside GF(" + std::to_string(q_) + ")");
  }
}

Element Field::element(std::uint64_t index) const {
  if (index >= q_) {
    throw PreconditionError("element index " + std::to_string(index) +
                            " is outside GF(" + std::to_string(q_) + ")");
  }
  return Element{static_cast<std::uint32_t>(index)};
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t r = ((value % p_) + p_) % p_;
  return Element{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(Element a) const {
  require_member(a);
  std::vector<std::uint32_t> d(e_);
  std::uint32_t idx = a.index;
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = idx % p_;
    idx /= p_;
  }
  return d;
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) {
    throw PreconditionError("element needs exactly " + std::to_string(e_) +
                            " coefficients");
  }
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) {
      throw PreconditionError("coefficient not reduced mod p");
    }
    idx = idx * p_ + coeffs[i];
  }
  return Element{idx};
}

Element Field::add_digits(Element a, Element b) const {
  std::uint32_t x = a.index, y = b.index, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Element{out};
}

Element Field::add(Element a, Element b) const {
  require_member(a);
  require_member(b);
  if (!tables_->add.empty()) {
    return Element{tables_->add[std::size_t{a.index} * q_ + b.index]};
  }
  return add_digits(a, b);
}

Element Field::neg(Element a) const {
  require_member(a);
  return Element{tables_->neg[a.index]};
}

Element Field::mul(Element a, Element b) const {
  require_member(a);
  require_member(b);
  if (a.index == 0 || b.index == 0) return zero();
  const std::uint64_t s =
      std::uint64_t{tables_->log[a.index]} + tables_->log[b.index];
  return Element{tables_->exp[s % (q_ - 1)]};
}

Element Field::inv(Element a) const {
  require_member(a);
  if (a.index == 0) throw PreconditionError("inversion of zero");
  const std::uint32_t l = tables_->log[a.index];
  return Element{tables_->exp[(q_ - 1 - l) % (q_ - 1)]};
}

Element Field::pow(Element a, std::uint64_t exponent) const {
  require_member(a);
  Element result = one();
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

int Field::quadratic_character(Element a) const {
  require_member(a);
  if (!odd()) {
    throw PreconditionError(
        "quadratic character is undefined in characteristic 2");
  }
  if (a.index == 0) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

bool Field::char_restriction_trivial() const {
  if (!odd()) {
    throw PreconditionError(
        "quadratic character is undefined in characteristic 2");
  }
  // The prime subfield is the set of indices below p.
  for (std::uint32_t g = 1; g < p_; ++g) {
    if (quadratic_character(Element{g}) != 1) return false;
  }
  return true;
}

std::optional<std::uint32_t> Field::sqrt_order() const {
  if (e_ % 2 != 0) return std::nullopt;
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < e_ / 2; ++i) r *= p_;
  return r;
}

}  // namespace fqcount::ff
