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

#include "fqcount/oracle.h"

#include <gtest/gtest.h>

#include "fqcount/errors.h"
#include "fqcount/ff.h"

namespace fqcount::oracle {
namespace {

using ff::Element;
using ff::Field;

// Direct enumeration: every tail, every root candidate, Horner evaluation.
std::vector<Integer> naive_histogram(const Field& f, const std::vector<Element>& u_high,
                                     unsigned n, unsigned ell) {
  const std::uint32_t q = f.q();
  std::vector<Integer> hist(std::max(n, q) + 1, 0);
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= ell; ++i) total *= q;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<Element> coeffs(n + 1, f.zero());
    coeffs[n] = f.one();
    for (std::size_t i = 0; i < u_high.size(); ++i) coeffs[n - 1 - i] = u_high[i];
    std::uint64_t rest = t;
    for (unsigned i = 0; i <= ell; ++i) {
      coeffs[i] = Element{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    ++hist[count_distinct_roots(f, coeffs)];
  }
  return hist;
}

TEST(Roots, CountDistinct) {
  const Field f5(5, 1);
  const std::vector<Element> x2m1{f5.from_int(-1), f5.zero(), f5.one()};
  EXPECT_EQ(count_distinct_roots(f5, x2m1), 2u);
  const std::vector<Element> x2{f5.zero(), f5.zero(), f5.one()};
  EXPECT_EQ(count_distinct_roots(f5, x2), 1u);
  const std::vector<Element> x2p2{f5.from_int(2), f5.zero(), f5.one()};
  EXPECT_EQ(count_distinct_roots(f5, x2p2), 0u);
  std::vector<Element> xq_minus_x(6, f5.zero());
  xq_minus_x[5] = f5.one();
  xq_minus_x[1] = f5.from_int(-1);
  EXPECT_EQ(count_distinct_roots(f5, xq_minus_x), 5u);
}

TEST(BruteNk, Anchor) {
  const Field f2(2, 1);
  EXPECT_EQ(brute_nk(f2, {}, 3, 2, 1).value, 4);
  EXPECT_EQ(brute_nk(f2, {}, 3, 2, 1).method, counting::Method::kOracle);
}

TEST(BruteNk, MatchesNaiveEnumeration) {
  struct Case {
    unsigned p, e, n, ell;
    std::vector<std::uint32_t> high;
  };
  const Case cases[] = {
      {2, 1, 4, 3, {}},  {3, 1, 3, 1, {2}},      {5, 1, 4, 1, {2, 3}},
      {2, 2, 5, 2, {1, 0}}, {3, 2, 4, 1, {0, 0}}, {7, 1, 3, 0, {4, 5}},
      {2, 3, 3, 2, {}},  {3, 1, 6, 2, {1, 2, 0}},
  };
  for (const auto& c : cases) {
    const Field f(c.p, c.e);
    std::vector<Element> high;
    for (auto h : c.high) high.push_back(Element{h});
    const auto got = brute_nk_histogram(f, high, c.n, c.ell);
    const auto want = naive_histogram(f, high, c.n, c.ell);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_EQ(got[k], want[k]) << "q=" << f.q() << " n=" << c.n << " k=" << k;
    }
  }
}

TEST(BruteNk, HistogramSumsToTailCount) {
  const Field f9(3, 2);
  for (unsigned n = 3; n <= 6; ++n) {
    const std::vector<Element> high(2, f9.zero());
    Integer total = 0;
    for (const auto& v : brute_nk_histogram(f9, high, n, n - 3)) total += v;
    EXPECT_EQ(total, power(Integer(9), n - 2));
  }
}

TEST(BruteNk, WorkerCountDoesNotChangeResult) {
  const Field f7(7, 1);
  const std::vector<Element> high{Element{3}};
  const auto one = brute_nk_histogram(f7, high, 5, 3, {kDefaultBudget, 1});
  const auto four = brute_nk_histogram(f7, high, 5, 3, {kDefaultBudget, 4});
  EXPECT_EQ(one, four);
}

TEST(BruteNk, Preconditions) {
  const Field f3(3, 1);
  EXPECT_THROW(brute_nk_histogram(f3, {}, 3, 0), PreconditionError);
  EXPECT_THROW(brute_nk_histogram(f3, {}, 3, 3), PreconditionError);
  const std::vector<Element> bad{Element{5}};
  EXPECT_THROW(brute_nk_histogram(f3, bad, 3, 1), PreconditionError);
}

TEST(Budget, Enforced) {
  const Field f9(3, 2);
  EXPECT_THROW(brute_nk_histogram(f9, {}, 8, 7, {1000, 1}), BudgetExceeded);
  EXPECT_NO_THROW(brute_nk_histogram(f9, {}, 3, 2, {1000, 1}));
  EXPECT_THROW(check_budget(Integer(1001), {1000, 1}, "x"), BudgetExceeded);
  EXPECT_NO_THROW(check_budget(Integer(1000), {1000, 1}, "x"));
}

// Reference subset counter by bitmask.
Integer naive_subsets(const Field& f, unsigned t, Element m1, Element m2, SubsetMode mode) {
  const std::uint32_t q = f.q();
  Integer count = 0;
  const unsigned size = mode == SubsetMode::kFirstDistinct ? t - 1 : t;
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
    Element e1 = f.zero(), e2 = f.zero(), p2 = f.zero();
    for (std::uint32_t x = 0; x < q; ++x) {
      if (!(mask >> x & 1)) continue;
      e2 = f.add(e2, f.mul(e1, Element{x}));
      e1 = f.add(e1, Element{x});
      p2 = f.add(p2, f.mul(Element{x}, Element{x}));
    }
    switch (mode) {
      case SubsetMode::kSumOnly:
        count += e1 == m1;
        break;
      case SubsetMode::kPowerSums:
        count += e1 == m1 && p2 == m2;
        break;
      case SubsetMode::kElementary:
        count += e1 == m1 && e2 == m2;
        break;
      case SubsetMode::kFirstDistinct: {
        const Element last = f.sub(m1, e1);
        count += f.add(p2, f.mul(last, last)) == m2;
        break;
      }
    }
  }
  return count;
}

TEST(Subsets, MatchNaiveEnumeration) {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field f(p, e);
    for (auto mode : {SubsetMode::kSumOnly, SubsetMode::kPowerSums, SubsetMode::kElementary,
                      SubsetMode::kFirstDistinct}) {
      const unsigned lo = mode == SubsetMode::kFirstDistinct ? 1 : 0;
      const unsigned hi = mode == SubsetMode::kFirstDistinct ? f.q() + 1 : f.q();
      for (unsigned t = lo; t <= hi; ++t) {
        for (std::uint32_t m1 = 0; m1 < f.q(); m1 += 2) {
          for (std::uint32_t m2 = 0; m2 < f.q(); m2 += 3) {
            EXPECT_EQ(brute_subsets_mss2(f, t, Element{m1}, Element{m2}, mode).value,
                      naive_subsets(f, t, Element{m1}, Element{m2}, mode))
                << "q=" << f.q() << " t=" << t << " mode=" << subset_mode_name(mode);
          }
        }
      }
    }
  }
}

TEST(Subsets, SumHistogramMatchesPointQueries) {
  const Field f8(2, 3);
  for (unsigned t = 0; t <= 8; ++t) {
    const auto hist = brute_subset_sum_histogram(f8, t);
    Integer total = 0;
    for (std::uint32_t b = 0; b < 8; ++b) {
      EXPECT_EQ(hist[b], brute_subsets_mss2(f8, t, Element{b}, f8.zero(), SubsetMode::kSumOnly).value);
      total += hist[b];
    }
    EXPECT_EQ(total, comb::binomial(8, t));
  }
}

TEST(Subsets, HandCheckedMomentValues) {
  const Field f9(3, 2);
  const Element z = f9.zero();
  const long expected[] = {1, 0, 0, 2};
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_EQ(brute_subsets_mss2(f9, n, z, z, SubsetMode::kPowerSums).value, expected[n - 1]);
  }
}

TEST(Subsets, Preconditions) {
  const Field f3(3, 1);
  EXPECT_THROW(brute_subsets_mss2(f3, 4, f3.zero(), f3.zero(), SubsetMode::kSumOnly),
               PreconditionError);
  EXPECT_THROW(brute_subsets_mss2(f3, 0, f3.zero(), f3.zero(), SubsetMode::kFirstDistinct),
               PreconditionError);
  EXPECT_THROW(brute_subset_sum_histogram(f3, 4), PreconditionError);
}

TEST(QuadLin, MatchesNaiveEnumeration) {
  const Field f5(5, 1);
  const std::vector<Element> a{Element{1}, Element{3}, Element{2}};
  const std::vector<Element> b{Element{4}, Element{0}, Element{1}};
  for (std::uint32_t a0 = 0; a0 < 5; ++a0) {
    for (std::uint32_t b0 = 0; b0 < 5; ++b0) {
      long count = 0;
      for (std::uint32_t x = 0; x < 125; ++x) {
        const Element v[] = {Element{x % 5}, Element{x / 5 % 5}, Element{x / 25}};
        Element quad = f5.zero(), lin = f5.zero();
        for (int i = 0; i < 3; ++i) {
          quad = f5.add(quad, f5.mul(a[i], f5.mul(v[i], v[i])));
          lin = f5.add(lin, f5.mul(b[i], v[i]));
        }
        count += quad == Element{a0} && lin == Element{b0};
      }
      EXPECT_EQ(brute_quadlin(f5, a, Element{a0}, b, Element{b0}).value, count);
    }
  }
}

}  // namespace
}  // namespace fqcount::oracle
