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

#include "fqcount/counting.h"

#include <sstream>
#include <string>

#include "fqcount/errors.h"

namespace fqcount::counting {
namespace {

using comb::binomial;

Integer sign(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// sum_{i=0}^{top} (-1)^i C(q-k, i) q^{-i}
Rational alternating_tail(unsigned q, unsigned k, unsigned top) {
  Rational s = 0;
  for (unsigned i = 0; i <= top; ++i) {
    s += Rational(sign(i) * binomial(long(q) - long(k), i)) * power_q(q, -long(i));
  }
  return s;
}

// q^{n-k-shift} C(q,k) sum_{i=0}^{n-k} (-1)^i C(q-k,i) q^{-i}
Rational inclusion_exclusion_term(unsigned q, unsigned n, unsigned k,
                                  long shift) {
  return power_q(q, long(n) - long(k) - shift) * Rational(binomial(q, k)) *
         alternating_tail(q, k, n - k);
}

// Number of functions F_q -> F_q with exactly k zeros, scaled by q^{extra}.
Integer uniform_residue_count(unsigned q, unsigned k, unsigned long extra) {
  return power(Integer(q), extra) * binomial(q, k) * power(Integer(q - 1), q - k);
}

std::string describe(const char* family, const ff::Field& f, unsigned n,
                     unsigned k) {
  std::ostringstream os;
  os << family << " q=" << f.q() << " n=" << n << " k=" << k;
  return os.str();
}

ExactCount closed(Integer value, std::string query, std::string note) {
  return ExactCount{std::move(value), Method::kClosedForm, std::move(query),
                    std::move(note)};
}

void require_square_odd(const ff::Field& field, const char* what) {
  if (!field.odd()) {
    throw PreconditionError(std::string(what) +
                            " requires odd characteristic");
  }
  if (field.e() % 2 != 0) {
    throw PreconditionError(std::string(what) +
                            " requires an even extension degree");
  }
}

}  // namespace

const char* method_name(Method m) {
  return m == Method::kClosedForm ? "closed-form" : "oracle";
}

void CountQuery::validate() const {
  if (n < 1 || ell >= n) {
    throw PreconditionError("count query requires 0 <= ell < n");
  }
  if (gap() < 1 || gap() > 3) {
    throw PreconditionError("closed forms exist only for gaps n-ell in {1,2,3}");
  }
  if (b.index >= field.q()) {
    throw PreconditionError("coefficient b is not an element of the field");
  }
  if (gap() != 2 && b != field.zero()) {
    throw PreconditionError("b must be zero for gaps 1 and 3 (u = x^n)");
  }
}

std::string CountQuery::describe() const {
  std::ostringstream os;
  os << "gap" << gap() << " q=" << field.q() << " n=" << n << " ell=" << ell
     << " k=" << k << " b=" << b.index;
  return os.str();
}

Integer v_of(const ff::Field& field, ff::Element b) {
  return b == field.zero() ? Integer(field.q() - 1) : Integer(-1);
}

ExactCount count_nk_gap1(const ff::Field& field, unsigned n, unsigned k) {
  const unsigned q = field.q();
  std::string query = describe("gap1", field, n, k);
  if (n < 1) throw PreconditionError("gap-1 count requires n >= 1");
  if (k > std::min(n, q)) return closed(0, query, "k > min(n, q)");
  if (n >= q) {
    return closed(uniform_residue_count(q, k, n - q), query,
                  "n >= q: reduction modulo x^q - x");
  }
  return closed(require_integer(inclusion_exclusion_term(q, n, k, 0), query),
                query, "n < q");
}

ExactCount subset_sum_count(const ff::Field& field, unsigned n,
                            ff::Element b) {
  const unsigned q = field.q(), p = field.p();
  std::ostringstream os;
  os << "subset-sum q=" << q << " n=" << n << " b=" << b.index;
  if (n > q) throw PreconditionError("subset size exceeds field order");
  if (b.index >= q) throw PreconditionError("b is not a field element");
  Rational m = frac(binomial(q, n), q);
  if (n % p == 0) {
    m += Rational(sign(n + n / p) * v_of(field, b) * binomial(q / p, n / p)) /
         Rational(q);
  }
  return closed(require_integer(m, os.str()), os.str(),
                n % p == 0 ? "p | n" : "p does not divide n");
}

ExactCount count_nk_gap2(const ff::Field& field, unsigned n, unsigned k,
                         ff::Element b) {
  const unsigned q = field.q(), p = field.p();
  std::string query = describe("gap2", field, n, k) +
                      " b=" + std::to_string(b.index);
  if (n < 2) throw PreconditionError("gap-2 count requires n >= 2");
  if (b.index >= q) throw PreconditionError("b is not a field element");
  if (k > std::min(n, q)) return closed(0, query, "k > min(n, q)");
  if (n > q) {
    return closed(uniform_residue_count(q, k, n - q - 1), query,
                  "n > q: reduction modulo x^q - x");
  }
  if (n == q && q == 2) {
    // x^2 + b x + c: the fixed x^{n-1} coefficient is the linear one.
    const bool b_zero = b == field.zero();
    const Integer v = b_zero ? Integer(k == 1 ? 2 : 0) : Integer(k == 1 ? 0 : 1);
    return closed(v, query, "n = q = 2, counted directly");
  }
  if (n == q) {
    const bool b_zero = b == field.zero();
    if (k == q) return closed(b_zero ? 1 : 0, query, "n = q table");
    Rational v;
    if (!b_zero) {
      v = frac(binomial(q, k) * (power(Integer(q - 1), q - k) - sign(q - k)),
               q);
    } else {
      if (k == q - 1) return closed(0, query, "n = q table");
      v = frac(Integer(q - 1) * binomial(q, k) *
                   (power(Integer(q - 1), q - k - 1) + sign(q - k)),
               q);
    }
    return closed(require_integer(v, query), query, "n = q table");
  }
  Rational v = inclusion_exclusion_term(q, n, k, 1);
  if (n % p == 0) {
    // The correction alternates with n - k.
    v += Rational(sign(n - k) * sign(n / p + n) * v_of(field, b) *
                  binomial(n, k) * binomial(q / p, n / p)) /
         Rational(q);
  }
  return closed(require_integer(v, query), query,
                n % p == 0 ? "n < q, p | n" : "n < q, p does not divide n");
}

QuadLinCase classify_quad_lin(const ff::Field& field,
                              std::span<const ff::Element> a, ff::Element a0,
                              std::span<const ff::Element> bvec,
                              ff::Element b0) {
  ff::Element bsum = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    bsum = field.add(bsum,
                     field.mul(field.mul(bvec[i], bvec[i]), field.inv(a[i])));
  }
  const ff::Element c = field.sub(field.mul(b0, b0), field.mul(a0, bsum));
  const bool bz = bsum == field.zero(), cz = c == field.zero();
  if (!bz) return cz ? QuadLinCase::kNonzeroBZeroC : QuadLinCase::kNonzeroBNonzeroC;
  return cz ? QuadLinCase::kZeroBZeroC : QuadLinCase::kZeroBNonzeroC;
}

ExactCount quad_lin_solution_count(const ff::Field& field,
                                   std::span<const ff::Element> a,
                                   ff::Element a0,
                                   std::span<const ff::Element> bvec,
                                   ff::Element b0) {
  if (!field.odd()) {
    throw PreconditionError("quadratic system count requires odd q");
  }
  const std::size_t n = a.size();
  if (n == 0 || bvec.size() != n) {
    throw PreconditionError("quadratic system needs len(a) == len(b) >= 1");
  }
  bool any_b = false;
  ff::Element prod_a = field.one();
  ff::Element bsum = field.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == field.zero()) {
      throw PreconditionError("quadratic coefficients must be nonzero");
    }
    any_b = any_b || bvec[i] != field.zero();
    prod_a = field.mul(prod_a, a[i]);
    bsum = field.add(bsum,
                     field.mul(field.mul(bvec[i], bvec[i]), field.inv(a[i])));
  }
  if (!any_b) {
    throw PreconditionError("linear equation must have a nonzero coefficient");
  }
  const ff::Element c = field.sub(field.mul(b0, b0), field.mul(a0, bsum));
  const unsigned q = field.q();
  const long nl = static_cast<long>(n);
  const bool even = n % 2 == 0;
  // (-1)^{floor(n/2)} as a field element.
  const ff::Element sign_elem =
      field.from_int((n / 2) % 2 == 0 ? 1 : -1);
  auto chi = [&](ff::Element x) { return field.quadratic_character(x); };
  auto chi_nonzero = [&](ff::Element x) {
    if (x == field.zero()) {
      throw IntegrityError("quadratic character evaluated at zero");
    }
    return field.quadratic_character(x);
  };

  std::ostringstream os;
  os << "quadlin q=" << q << " n=" << n;
  const std::string query = os.str();

  Rational value = power_q(q, nl - 2);
  std::string note;
  switch (classify_quad_lin(field, a, a0, bvec, b0)) {
    case QuadLinCase::kNonzeroBZeroC:
      note = "b != 0, c == 0";
      if (!even) {
        value += power_q(q, (nl - 3) / 2) * Rational(q - 1) *
                 chi_nonzero(field.mul(sign_elem, field.mul(prod_a, bsum)));
      }
      break;
    case QuadLinCase::kNonzeroBNonzeroC:
      note = "b != 0, c != 0";
      if (even) {
        value += power_q(q, (nl - 2) / 2) *
                 chi_nonzero(field.mul(sign_elem, field.mul(prod_a, c)));
      } else {
        value -= power_q(q, (nl - 3) / 2) *
                 chi_nonzero(field.mul(sign_elem, field.mul(prod_a, bsum)));
      }
      break;
    case QuadLinCase::kZeroBZeroC:
      note = "b == 0, c == 0";
      if (even) {
        value += Rational(v_of(field, a0)) * power_q(q, (nl - 2) / 2) *
                 chi_nonzero(field.mul(sign_elem, prod_a));
      } else {
        // a0 may be zero here; chi(0) = 0 leaves q^{n-2}.
        value += power_q(q, (nl - 1) / 2) *
                 chi(field.mul(sign_elem, field.mul(a0, prod_a)));
      }
      break;
    case QuadLinCase::kZeroBNonzeroC:
      note = "b == 0, c != 0";
      break;
  }
  return closed(require_integer(value, query), query, note);
}

AlphaBeta alpha_beta(const ff::Field& field, unsigned n) {
  const auto root = field.sqrt_order();
  if (!root) throw PreconditionError("alpha/beta require an even extension degree");
  const long r = *root, q = field.q(), p = field.p();
  AlphaBeta out{0, 0};
  for (long i = 0; i <= long(n); ++i) {
    if ((long(n) - i) % p != 0) continue;
    const long j = (long(n) - i) / p;
    if (i <= r) out.alpha += binomial(r, i) * binomial((q - r) / p, j);
    out.beta += sign(j) * binomial(r - 1 + i, r - 1) * binomial((q + r) / p, j);
  }
  return out;
}

SignedSums s_plus_minus_by_types(const ff::Field& field, unsigned n) {
  const auto root = field.sqrt_order();
  if (!root) throw PreconditionError("S+/S- require an even extension degree");
  const unsigned p = field.p();
  const Integer minus_q = -Integer(field.q()), minus_r = -Integer(*root);
  SignedSums out{0, 0};
  for (const auto& type : comb::enumerate_cycle_types(n)) {
    Integer term = comb::perm_type_count(type);
    for (const auto& [len, mult] : type.parts()) {
      term *= power(len % p == 0 ? minus_q : minus_r, mult);
    }
    if (type.cycles_not_divisible_by(p) % 2 == 0) {
      out.plus += term;
    } else {
      out.minus += term;
    }
  }
  return out;
}

SignedSums s_plus_minus(const ff::Field& field, unsigned n) {
  const AlphaBeta ab = alpha_beta(field, n);
  const Integer fact = comb::factorial(n);
  const Integer signed_alpha = sign(n) * ab.alpha;
  SignedSums out{
      require_integer(frac(fact * (signed_alpha + ab.beta), 2), "S+"),
      require_integer(frac(fact * (signed_alpha - ab.beta), 2), "S-")};
  if (!(out == s_plus_minus_by_types(field, n))) {
    throw IntegrityError("S+/S- closed form disagrees with cycle-type sums at n=" +
                         std::to_string(n));
  }
  return out;
}

ClosedFormTerms closed_form_terms(const ff::Field& field, unsigned n) {
  if (n < 1) throw PreconditionError("closed-form terms require n >= 1");
  const AlphaBeta cur = alpha_beta(field, n);
  const AlphaBeta prev = alpha_beta(field, n - 1);
  const SignedSums s = s_plus_minus(field, n);
  const Integer sn = sign(n), sp = sign(n - 1);
  return ClosedFormTerms{cur.alpha,
                         cur.beta,
                         s.plus,
                         s.minus,
                         prev.alpha + sp * prev.beta,
                         cur.alpha - sn * cur.beta,
                         prev.alpha - sp * prev.beta,
                         cur.alpha + sn * cur.beta};
}

ExactCount moment_subset_count(const ff::Field& field, unsigned n) {
  require_square_odd(field, "moment subset count");
  const unsigned q = field.q(), p = field.p(), r = *field.sqrt_order();
  if (n < 1 || n > q) throw PreconditionError("moment subset count requires 1 <= n <= q");
  std::ostringstream os;
  os << "mss2 q=" << q << " n=" << n;
  const AlphaBeta ab = alpha_beta(field, n);
  const Integer qi = q, sn = sign(n);
  Rational m = frac(binomial(q, n), qi * qi);
  std::string note;
  if (n % p != 0) {
    m += frac(Integer(q - 1) * (ab.alpha - sn * ab.beta),
              2 * power(Integer(r), 3));
    note = "p does not divide n";
  } else {
    m += frac(Integer(q - 1) * binomial(q / p, n / p), qi * qi);
    m += frac(Integer(q - 1) * (ab.alpha + sn * ab.beta), 2 * qi);
    note = "p | n";
  }
  return closed(require_integer(m, os.str()), os.str(), note);
}

ExactCount moment_subset_count_elementary(const ff::Field& field, unsigned n) {
  ExactCount out = moment_subset_count(field, n);
  out.query = "mss2-elementary q=" + std::to_string(field.q()) +
              " n=" + std::to_string(n);
  return out;
}

ExactCount moment_subset_count_m1(const ff::Field& field, unsigned n) {
  require_square_odd(field, "first-distinct moment count");
  const unsigned q = field.q(), p = field.p(), r = *field.sqrt_order();
  if (n < 2 || n > q + 1) {
    throw PreconditionError("first-distinct moment count requires 2 <= n <= q + 1");
  }
  std::ostringstream os;
  os << "mss2-first q=" << q << " n=" << n;
  const AlphaBeta ab = alpha_beta(field, n - 1);
  const Integer sp = sign(n - 1);
  Rational m = frac(binomial(q, n - 1), q);
  std::string note;
  if (n % p != 0) {
    m += frac(Integer(q - 1) * (ab.alpha + sp * ab.beta), 2 * Integer(q));
    note = "p does not divide n";
  } else {
    m += frac(Integer(q - 1) * (ab.alpha - sp * ab.beta), 2 * Integer(r));
    note = "p | n";
  }
  return closed(require_integer(m, os.str()), os.str(), note);
}

ExactCount count_nk_gap3(const ff::Field& field, unsigned n, unsigned k) {
  require_square_odd(field, "gap-3 closed form");
  if (n < 3) throw PreconditionError("gap-3 count requires n >= 3");
  const unsigned q = field.q(), p = field.p(), r = *field.sqrt_order();
  const std::string query = describe("gap3", field, n, k);
  if (k > std::min(n, q)) return closed(0, query, "k > min(n, q)");

  if (n > q + 1) {
    return closed(uniform_residue_count(q, k, n - q - 2), query,
                  "n > q + 1: reduction modulo x^q - x");
  }
  if (n == q + 1) {
    const std::string note = "n = q + 1 table";
    if (k == q) return closed(1, query, note);
    if (k == q - 1) return closed(0, query, note);
    const Rational v = frac(Integer(q - 1) * binomial(q, k) *
                                (power(Integer(q - 1), q - k - 1) + sign(q - k)),
                            q);
    return closed(require_integer(v, query), query, note);
  }
  if (n == q) {
    const std::string note = "n = q table";
    if (k == q) return closed(1, query, note);
    if (k + 2 >= q) return closed(0, query, note);
    const Integer qi = q;
    const Rational inner = frac(power(Integer(q - 1), q - k - 1), qi) +
                           Rational(sign(q - k - 1) * Integer(q - k)) +
                           frac(sign(q - k) * (qi + 1), qi);
    const Rational v = frac(Integer(q - 1) * binomial(q, k), qi) * inner;
    return closed(require_integer(v, query), query, note);
  }

  if (k == n) {
    ExactCount m = moment_subset_count(field, n);
    return closed(m.value, query, "k = n: moment subset count");
  }

  const AlphaBeta cur = alpha_beta(field, n), prev = alpha_beta(field, n - 1);
  const Integer sn = sign(n), sp = sign(n - 1);
  const Integer d_prev = prev.alpha + sp * prev.beta;
  const Integer d_n = cur.alpha - sn * cur.beta;
  const Integer p_prev = prev.alpha - sp * prev.beta;
  const Integer p_n = cur.alpha + sn * cur.beta;
  const Integer qi = q, ri = r;
  Rational v = inclusion_exclusion_term(q, n, k, 2);
  const Integer c_prev = binomial(n - 1, k), c_n = binomial(n, k);
  const Integer s_prev = sign(n - k - 1), s_n = sign(n - k);
  std::string note;
  if (n % p != 0) {
    v += frac(s_prev * c_prev * (qi - 1) * d_prev, 2 * qi);
    v += frac(s_n * c_n * (qi - 1) * d_n, 2 * power(ri, 3));
    note = "n < q, p does not divide n";
  } else {
    v += frac(s_n * (qi - 1) * c_n * binomial(q / p, n / p), qi * qi);
    v += frac(s_prev * c_prev * (qi - 1) * p_prev, 2 * ri);
    v += frac(s_n * c_n * (qi - 1) * p_n, 2 * qi);
    note = "n < q, p | n";
  }
  return closed(require_integer(v, query), query, note);
}

ExactCount count_nk(const CountQuery& query) {
  query.validate();
  ExactCount out;
  switch (query.gap()) {
    case 1:
      out = count_nk_gap1(query.field, query.n, query.k);
      break;
    case 2:
      out = count_nk_gap2(query.field, query.n, query.k, query.b);
      break;
    default:
      out = count_nk_gap3(query.field, query.n, query.k);
      break;
  }
  out.query = query.describe();
  return out;
}

}  // namespace fqcount::counting
