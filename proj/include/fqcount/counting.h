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

// Closed-form counts of polynomials with a prescribed number of distinct
// roots, together with the subset-sum, moment subset-sum and quadratic
// system counts they are assembled from.
//
// Notation: for a monic u of degree n with fixed coefficients above x^ell,
// N_k(u, ell) is the number of tails a_ell x^ell + ... + a_0 such that the
// sum has exactly k distinct roots in F_q. The gap is n - ell.

#ifndef FQCOUNT_COUNTING_H_
#define FQCOUNT_COUNTING_H_

#include <span>
#include <string>

#include "fqcount/exactcomb.h"
#include "fqcount/ff.h"

namespace fqcount::counting {

enum class Method { kClosedForm, kOracle };

const char* method_name(Method m);

struct ExactCount {
  Integer value;
  Method method = Method::kClosedForm;
  // Human-readable query descriptor, e.g. "gap2 q=9 n=3 k=1 b=0".
  std::string query;
  // Which branch of a closed form produced the value, when relevant.
  std::string note;
};

// A counting problem N_k(u, ell). For gap 2, u = x^n - b x^{n-1}; for gaps
// 1 and 3, u = x^n and b must be zero.
struct CountQuery {
  ff::Field field;
  unsigned n = 1;
  unsigned ell = 0;
  unsigned k = 0;
  ff::Element b;

  unsigned gap() const { return n - ell; }
  // Throws PreconditionError when the invariants above do not hold.
  void validate() const;
  std::string describe() const;
};

// v(b) = q - 1 for b == 0 and -1 otherwise.
Integer v_of(const ff::Field& field, ff::Element b);

// N_k(x^n, n-1).
ExactCount count_nk_gap1(const ff::Field& field, unsigned n, unsigned k);

// M(n, b): n-subsets of F_q with element sum b. Requires n <= q.
ExactCount subset_sum_count(const ff::Field& field, unsigned n, ff::Element b);

// N_k(x^n - b x^{n-1}, n-2). Requires n >= 2.
ExactCount count_nk_gap2(const ff::Field& field, unsigned n, unsigned k,
                         ff::Element b);

enum class QuadLinCase {
  kNonzeroBZeroC,     // b != 0, c == 0
  kNonzeroBNonzeroC,  // b != 0, c != 0
  kZeroBZeroC,        // b == 0, c == 0
  kZeroBNonzeroC,     // b == 0, c != 0
};

// For a = prod a_i, b = sum b_i^2 / a_i and c = b0^2 - a0 b.
QuadLinCase classify_quad_lin(const ff::Field& field,
                              std::span<const ff::Element> a, ff::Element a0,
                              std::span<const ff::Element> bvec,
                              ff::Element b0);

// Number of x in F_q^n with sum a_i x_i^2 = a0 and sum b_i x_i = b0.
// Requires odd q, all a_i nonzero, some b_i nonzero.
ExactCount quad_lin_solution_count(const ff::Field& field,
                                   std::span<const ff::Element> a,
                                   ff::Element a0,
                                   std::span<const ff::Element> bvec,
                                   ff::Element b0);

struct AlphaBeta {
  Integer alpha;
  Integer beta;
};

// Requires even e. With r = sqrt(q):
//   alpha(n) = sum_{i + p j = n, i <= r} C(r, i) C((q - r)/p, j)
//   beta(n)  = sum_{i + p j = n} (-1)^j C(r - 1 + i, r - 1) C((q + r)/p, j)
AlphaBeta alpha_beta(const ff::Field& field, unsigned n);

struct SignedSums {
  Integer plus;
  Integer minus;

  friend bool operator==(const SignedSums&, const SignedSums&) = default;
};

// Sums over cycle types of n of N(c) prod_{p|i} (-q)^{c_i}
// prod_{p!|i} (-sqrt q)^{c_i}, split by the parity of sum_{p!|i} c_i.
SignedSums s_plus_minus_by_types(const ff::Field& field, unsigned n);

// Closed form n!/2 ((-1)^n alpha +- beta). Checks against the type sums and
// throws IntegrityError on disagreement.
SignedSums s_plus_minus(const ff::Field& field, unsigned n);

struct ClosedFormTerms {
  Integer alpha_n;
  Integer beta_n;
  Integer s_plus;
  Integer s_minus;
  // D(n)   = alpha(n) - (-1)^n beta(n)
  // D(n-1) = alpha(n-1) + (-1)^{n-1} beta(n-1)
  // P(n)   = alpha(n) + (-1)^n beta(n)
  // P(n-1) = alpha(n-1) - (-1)^{n-1} beta(n-1)
  Integer d_prev;
  Integer d_n;
  Integer p_prev;
  Integer p_n;
};

// Requires even e and n >= 1.
ClosedFormTerms closed_form_terms(const ff::Field& field, unsigned n);

// M(n,0,0): n-subsets with first and second power sums zero. Requires odd p,
// even e, 1 <= n <= q.
ExactCount moment_subset_count(const ff::Field& field, unsigned n);

// M'(n,0,0): the same count with e_1 = e_2 = 0 (elementary symmetric
// functions). In odd characteristic e_2 = (p_1^2 - p_2)/2, so the two
// systems have the same solutions.
ExactCount moment_subset_count_elementary(const ff::Field& field, unsigned n);

// M_1(n,0,0): (n-1)-subsets S such that S together with -sum(S) has zero
// square sum. Requires odd p, even e, 2 <= n <= q + 1.
ExactCount moment_subset_count_m1(const ff::Field& field, unsigned n);

// N_k(x^n, n-3). Requires odd p, even e and n >= 3.
ExactCount count_nk_gap3(const ff::Field& field, unsigned n, unsigned k);

// Dispatches on query.gap().
ExactCount count_nk(const CountQuery& query);

}  // namespace fqcount::counting

#endif  // FQCOUNT_COUNTING_H_
