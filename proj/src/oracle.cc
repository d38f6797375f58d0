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

#include <sstream>

#include "fqcount/errors.h"
#include "fqcount/parallel.h"

namespace fqcount::oracle {
namespace {

using counting::ExactCount;
using counting::Method;
using ff::Element;

constexpr std::uint32_t kLocalTableMaxOrder = 1024;

// Field addition/multiplication through dense local tables when q is small.
class LocalArith {
 public:
  explicit LocalArith(const ff::Field& field) : field_(field), q_(field.q()) {
    if (q_ <= kLocalTableMaxOrder) {
      add_.resize(std::size_t{q_} * q_);
      mul_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_[std::size_t{a} * q_ + b] = field.add(Element{a}, Element{b}).index;
          mul_[std::size_t{a} * q_ + b] = field.mul(Element{a}, Element{b}).index;
        }
      }
    }
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!add_.empty()) return add_[std::size_t{a} * q_ + b];
    return field_.add(Element{a}, Element{b}).index;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_.empty()) return mul_[std::size_t{a} * q_ + b];
    return field_.mul(Element{a}, Element{b}).index;
  }

 private:
  const ff::Field& field_;
  std::uint32_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

Integer to_integer(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

std::uint64_t to_u64(const Integer& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::vector<Integer> merge(const std::vector<std::vector<std::uint64_t>>& parts,
                           std::size_t size) {
  std::vector<Integer> out(size, 0);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < size; ++i) out[i] += to_integer(part[i]);
  }
  return out;
}

ExactCount oracle_count(Integer value, std::string query) {
  return ExactCount{std::move(value), Method::kOracle, std::move(query), ""};
}

}  // namespace

void check_budget(const Integer& size, const EnumerationBudget& budget,
                  const std::string& what) {
  if (size > to_integer(budget.max_items)) {
    throw BudgetExceeded(what, size.get_str(), budget.max_items);
  }
}

unsigned count_distinct_roots(const ff::Field& field,
                              std::span<const Element> coeffs) {
  unsigned roots = 0;
  for (std::uint32_t u = 0; u < field.q(); ++u) {
    Element v = field.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      v = field.add(field.mul(v, Element{u}), coeffs[i]);
    }
    if (v == field.zero()) ++roots;
  }
  return roots;
}

std::vector<Integer> brute_nk_histogram(const ff::Field& field,
                                        std::span<const Element> u_high,
                                        unsigned n, unsigned ell,
                                        const EnumerationBudget& budget) {
  if (n < 1 || ell >= n) throw PreconditionError("brute_nk requires ell < n");
  if (u_high.size() != n - ell - 1) {
    throw PreconditionError("brute_nk needs n - ell - 1 fixed coefficients");
  }
  const std::uint32_t q = field.q();
  const unsigned digits = ell + 1;
  const Integer size = power(Integer(q), digits);
  check_budget(size, budget, "polynomial tails");

  // fixed[u] = u^n + sum of the fixed coefficients times powers of u.
  std::vector<std::uint32_t> fixed(q);
  std::vector<std::vector<std::uint32_t>> powers(digits, std::vector<std::uint32_t>(q));
  for (std::uint32_t u = 0; u < q; ++u) {
    const Element x{u};
    Element f = field.pow(x, n);
    for (std::size_t i = 0; i < u_high.size(); ++i) {
      f = field.add(f, field.mul(u_high[i], field.pow(x, n - 1 - i)));
    }
    fixed[u] = f.index;
    for (unsigned j = 0; j < digits; ++j) powers[j][u] = field.pow(x, j).index;
  }
  // delta[s]: change of a digit moving from index s to s+1 (mod q).
  std::vector<std::uint32_t> delta(q);
  for (std::uint32_t s = 0; s < q; ++s) {
    delta[s] = field.sub(Element{(s + 1) % q}, Element{s}).index;
  }
  const LocalArith arith(field);
  const std::size_t hist_size = std::max(n, q) + 1;
  const std::uint64_t total = to_u64(size);

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hist(hist_size, 0);
    if (lo >= hi) return hist;
    std::vector<std::uint32_t> digit(digits);
    std::uint64_t rest = lo;
    for (unsigned j = 0; j < digits; ++j) {
      digit[j] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    std::vector<std::uint32_t> values(fixed);
    for (std::uint32_t u = 0; u < q; ++u) {
      for (unsigned j = 0; j < digits; ++j) {
        values[u] = arith.add(values[u], arith.mul(digit[j], powers[j][u]));
      }
    }
    for (std::uint64_t t = lo;;) {
      unsigned zeros = 0;
      for (std::uint32_t u = 0; u < q; ++u) zeros += values[u] == 0;
      ++hist[zeros];
      if (++t == hi) break;
      for (unsigned j = 0; j < digits; ++j) {
        const std::uint32_t d = delta[digit[j]];
        const auto& pw = powers[j];
        for (std::uint32_t u = 0; u < q; ++u) {
          values[u] = arith.add(values[u], arith.mul(d, pw[u]));
        }
        digit[j] = (digit[j] + 1) % q;
        if (digit[j] != 0) break;
      }
    }
    return hist;
  };
  return merge(map_ranges(total, budget.workers, work), hist_size);
}

ExactCount brute_nk(const ff::Field& field, std::span<const Element> u_high,
                    unsigned n, unsigned ell, unsigned k,
                    const EnumerationBudget& budget) {
  const auto hist = brute_nk_histogram(field, u_high, n, ell, budget);
  std::ostringstream os;
  os << "brute_nk q=" << field.q() << " n=" << n << " ell=" << ell
     << " k=" << k;
  return oracle_count(k < hist.size() ? hist[k] : Integer(0), os.str());
}

const char* subset_mode_name(SubsetMode mode) {
  switch (mode) {
    case SubsetMode::kSumOnly:
      return "sum-only";
    case SubsetMode::kPowerSums:
      return "power-sums";
    case SubsetMode::kElementary:
      return "elementary";
    case SubsetMode::kFirstDistinct:
      return "first-distinct";
  }
  return "?";
}

namespace {

// Walks all size-`size` subsets of F_q in lexicographic order whose smallest
// element lies in [first_lo, first_hi), calling visit(e1, e2, p2) with the
// elementary symmetric sums e1, e2 and the square sum p2.
template <class Visit>
void walk_subsets(const LocalArith& arith, std::uint32_t q, unsigned size,
                  std::uint32_t first_lo, std::uint32_t first_hi,
                  Visit& visit) {
  auto rec = [&](auto& self, std::uint32_t start, unsigned depth,
                 std::uint32_t e1, std::uint32_t e2, std::uint32_t p2) -> void {
    if (depth == size) {
      visit(e1, e2, p2);
      return;
    }
    const std::uint32_t end = depth == 0 ? first_hi : q;
    for (std::uint32_t x = start; x < end; ++x) {
      if (q - x < size - depth) break;
      self(self, x + 1, depth + 1, arith.add(e1, x),
           arith.add(e2, arith.mul(e1, x)), arith.add(p2, arith.mul(x, x)));
    }
  };
  if (size == 0) {
    if (first_lo == 0) visit(0u, 0u, 0u);
    return;
  }
  rec(rec, first_lo, 0, 0, 0, 0);
}

}  // namespace

ExactCount brute_subsets_mss2(const ff::Field& field, unsigned t_size,
                              Element m1, Element m2, SubsetMode mode,
                              const EnumerationBudget& budget) {
  const std::uint32_t q = field.q();
  if (m1.index >= q || m2.index >= q) {
    throw PreconditionError("moment targets must be field elements");
  }
  if (mode == SubsetMode::kFirstDistinct && t_size < 1) {
    throw PreconditionError("first-distinct mode needs t >= 1");
  }
  const unsigned size = mode == SubsetMode::kFirstDistinct ? t_size - 1 : t_size;
  if (size > q) throw PreconditionError("subset size exceeds field order");
  check_budget(comb::binomial(q, size), budget, "subsets");

  const LocalArith arith(field);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t count = 0;
    auto visit = [&](std::uint32_t e1, std::uint32_t e2, std::uint32_t p2) {
      switch (mode) {
        case SubsetMode::kSumOnly:
          count += e1 == m1.index;
          break;
        case SubsetMode::kPowerSums:
          count += e1 == m1.index && p2 == m2.index;
          break;
        case SubsetMode::kElementary:
          count += e1 == m1.index && e2 == m2.index;
          break;
        case SubsetMode::kFirstDistinct: {
          const std::uint32_t last = field.sub(m1, Element{e1}).index;
          count += arith.add(p2, arith.mul(last, last)) == m2.index;
          break;
        }
      }
    };
    walk_subsets(arith, q, size, static_cast<std::uint32_t>(lo),
                 static_cast<std::uint32_t>(hi), visit);
    return count;
  };
  Integer total = 0;
  for (auto c : map_ranges(q, budget.workers, work)) total += to_integer(c);

  std::ostringstream os;
  os << "brute_subsets q=" << q << " t=" << t_size << " m1=" << m1.index
     << " m2=" << m2.index << " mode=" << subset_mode_name(mode);
  return oracle_count(std::move(total), os.str());
}

std::vector<Integer> brute_subset_sum_histogram(const ff::Field& field,
                                                unsigned t_size,
                                                const EnumerationBudget& budget) {
  const std::uint32_t q = field.q();
  if (t_size > q) throw PreconditionError("subset size exceeds field order");
  check_budget(comb::binomial(q, t_size), budget, "subsets");
  const LocalArith arith(field);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hist(q, 0);
    auto visit = [&](std::uint32_t e1, std::uint32_t, std::uint32_t) {
      ++hist[e1];
    };
    walk_subsets(arith, q, t_size, static_cast<std::uint32_t>(lo),
                 static_cast<std::uint32_t>(hi), visit);
    return hist;
  };
  return merge(map_ranges(q, budget.workers, work), q);
}

ExactCount brute_quadlin(const ff::Field& field, std::span<const Element> a,
                         Element a0, std::span<const Element> bvec, Element b0,
                         const EnumerationBudget& budget) {
  const std::size_t n = a.size();
  if (n == 0 || bvec.size() != n) {
    throw PreconditionError("quadratic system needs len(a) == len(b) >= 1");
  }
  const std::uint32_t q = field.q();
  const Integer size = power(Integer(q), n);
  check_budget(size, budget, "quadratic system tuples");
  const LocalArith arith(field);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t count = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      std::uint64_t rest = t;
      std::uint32_t quad = 0, lin = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<std::uint32_t>(rest % q);
        rest /= q;
        quad = arith.add(quad, arith.mul(a[i].index, arith.mul(x, x)));
        lin = arith.add(lin, arith.mul(bvec[i].index, x));
      }
      count += quad == a0.index && lin == b0.index;
    }
    return count;
  };
  Integer total = 0;
  for (auto c : map_ranges(to_u64(size), budget.workers, work)) {
    total += to_integer(c);
  }
  std::ostringstream os;
  os << "brute_quadlin q=" << q << " n=" << n;
  return oracle_count(std::move(total), os.str());
}

}  // namespace fqcount::oracle
