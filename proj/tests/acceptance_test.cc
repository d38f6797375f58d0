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

// Acceptance criteria: one PASS/FAIL line each, exact integer equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "fqcount/counting.h"
#include "fqcount/errors.h"
#include "fqcount/ff.h"
#include "fqcount/oracle.h"
#include "fqcount/sieve.h"
#include "fqcount/wenger.h"
#include "verify.h"

namespace {

using namespace fqcount;
using ff::Element;
using ff::Field;
using oracle::SubsetMode;

const oracle::EnumerationBudget kBudget{oracle::kDefaultBudget, 1};

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }
};

Field field_of(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p) continue;
    unsigned e = 0;
    for (unsigned r = q; r > 1; r /= p) ++e;
    return Field(p, e);
  }
  throw PreconditionError("not a prime power");
}

std::string where(const Field& f, unsigned n, unsigned k, long b = -1) {
  std::ostringstream os;
  os << "q=" << f.q() << " n=" << n << " k=" << k;
  if (b >= 0) os << " b=" << b;
  return os.str();
}

Integer at(const std::vector<Integer>& h, std::size_t i) { return i < h.size() ? h[i] : 0; }

Outcome gap1_equivalence() {
  Outcome o;
  for (unsigned q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = field_of(q);
    for (unsigned n = 1; n <= 6; ++n) {
      const auto hist = oracle::brute_nk_histogram(f, {}, n, n - 1, kBudget);
      for (unsigned k = 0; k <= n; ++k) {
        o.expect_eq(counting::count_nk_gap1(f, n, k).value, at(hist, k), "gap1 " + where(f, n, k));
      }
    }
  }
  o.expect_eq(counting::count_nk_gap1(Field(2, 1), 3, 1).value, 4, "anchor N_1 at q=2 n=3");
  return o;
}

std::vector<unsigned> gap2_degrees(unsigned q) {
  std::vector<unsigned> ns;
  for (unsigned n = 2; n <= 6; ++n) ns.push_back(n);
  for (unsigned n : {q, q + 1}) {
    // Skips n = 10 at q = 9 (9^9 tails per b).
    if (n > 6 && n != 10) ns.push_back(n);
  }
  return ns;
}

Outcome gap2_equivalence() {
  Outcome o;
  for (unsigned q : {3, 4, 5, 7, 9}) {
    const Field f = field_of(q);
    for (unsigned n : gap2_degrees(q)) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::vector<Element> high{f.neg(Element{b})};
        const auto hist = oracle::brute_nk_histogram(f, high, n, n - 2, kBudget);
        for (unsigned k = 0; k <= n; ++k) {
          o.expect_eq(counting::count_nk_gap2(f, n, k, Element{b}).value, at(hist, k),
                      "gap2 " + where(f, n, k, b));
        }
      }
    }
  }
  o.detail = "n = q tables agree with enumeration";
  return o;
}

Outcome subset_sum() {
  Outcome o;
  for (unsigned q : {3, 4, 5, 7, 8, 9, 25}) {
    const Field f = field_of(q);
    for (unsigned n = 0; n <= std::min(q, 12u); ++n) {
      const auto hist = oracle::brute_subset_sum_histogram(f, n, kBudget);
      for (std::uint32_t b = 0; b < q; ++b) {
        o.expect_eq(counting::subset_sum_count(f, n, Element{b}).value, hist[b],
                    "subset " + where(f, n, 0, b));
      }
      if (n == 2 || n == q) {
        for (std::uint32_t b = 0; b < q; b += 3) {
          o.expect_eq(oracle::brute_subsets_mss2(f, n, Element{b}, f.zero(),
                                                 SubsetMode::kSumOnly, kBudget)
                          .value,
                      hist[b], "sum-only mode " + where(f, n, 0, b));
        }
      }
    }
  }
  return o;
}

Outcome quadratic_system() {
  Outcome o;
  verify::Limits limits;
  limits.max_q = 9;
  limits.max_n = 5;
  limits.samples = 400;
  const auto report = verify::run_suite(verify::Suite::kQuadLin, limits, kBudget);
  std::map<std::pair<unsigned, unsigned>, unsigned> per_point;
  std::map<std::string, unsigned> per_case;
  for (const auto& row : report.rows) {
    if (row.q == 7) continue;
    ++per_point[{row.q, row.n}];
    ++per_case[row.k];
    o.expect(row.match(), verify::reproducer(row));
  }
  unsigned fewest = ~0u;
  for (unsigned q : {3, 5, 9}) {
    for (unsigned n = 1; n <= 5; ++n) fewest = std::min(fewest, per_point[{q, n}]);
  }
  o.expect(fewest >= 200, "fewer than 200 tuples at some (q, n)");
  o.expect(per_case.size() == 4, "not all four (b, c) cases drawn");
  std::ostringstream os;
  os << "at least " << fewest << " tuples per (q, n); cases";
  for (const auto& [c, count] : per_case) os << ' ' << c << ':' << count;
  o.detail = os.str();
  return o;
}

Outcome moment_subset_sum() {
  Outcome o;
  const Element z{0};
  for (auto [p, e] : {std::pair{3u, 2u}, std::pair{5u, 2u}}) {
    const Field f(p, e);
    for (unsigned n = 1; n <= std::min(f.q(), 12u); ++n) {
      o.expect_eq(counting::moment_subset_count(f, n).value,
                  oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kPowerSums, kBudget).value,
                  "M(n,0,0) " + where(f, n, n));
    }
    for (unsigned n = 2; n <= std::min(f.q() + 1, 12u); ++n) {
      o.expect_eq(counting::moment_subset_count_m1(f, n).value,
                  oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kFirstDistinct, kBudget).value,
                  "M_1(n,0,0) " + where(f, n, n));
    }
  }
  const Field f9(3, 2);
  const long hand[] = {1, 0, 0, 2};
  for (unsigned n = 1; n <= 4; ++n) {
    o.expect_eq(counting::moment_subset_count(f9, n).value, hand[n - 1], "hand value M(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome sieve_cross_check() {
  Outcome o;
  const Field f9(3, 2);
  for (unsigned n = 1; n <= 8; ++n) {
    const Integer d = sieve::sieve_distinct(sieve::power_sum_counter(f9, n));
    o.expect(d % comb::factorial(n) == 0, "distinct sieve not divisible by n!");
    o.expect_eq(Integer(d / comb::factorial(n)), counting::moment_subset_count(f9, n).value,
                "distinct sieve n=" + std::to_string(n));
    if (n >= 2) {
      const Integer s = sieve::sieve_first_n_minus_1(
          sieve::power_sum_counter(f9, n, sieve::Scope::kFirstNMinus1));
      o.expect(s % comb::factorial(n - 1) == 0, "first sieve not divisible by (n-1)!");
      o.expect_eq(Integer(s / comb::factorial(n - 1)),
                  counting::moment_subset_count_m1(f9, n).value,
                  "first-coordinate sieve n=" + std::to_string(n));
    }
  }
  for (unsigned n = 1; n <= 10; ++n) {
    const auto closed = counting::s_plus_minus(f9, n);
    const auto typed = counting::s_plus_minus_by_types(f9, n);
    o.expect_eq(closed.plus, typed.plus, "S+ n=" + std::to_string(n));
    o.expect_eq(closed.minus, typed.minus, "S- n=" + std::to_string(n));
  }
  return o;
}

Outcome gap3_equivalence() {
  Outcome o;
  const Field f9(3, 2);
  for (unsigned n = 3; n <= 6; ++n) {
    const std::vector<Element> high(2, f9.zero());
    const auto hist = oracle::brute_nk_histogram(f9, high, n, n - 3, kBudget);
    for (unsigned k = 0; k <= n; ++k) {
      o.expect_eq(counting::count_nk_gap3(f9, n, k).value, at(hist, k), "gap3 " + where(f9, n, k));
    }
    o.expect_eq(counting::count_nk_gap3(f9, n, n).value,
                counting::moment_subset_count(f9, n).value, "k = n link " + where(f9, n, n));
  }
  o.expect_eq(counting::count_nk_gap3(f9, 3, 1).value, 9, "N_1(x^3, 0)");
  o.expect_eq(counting::count_nk_gap3(f9, 3, 0).value, 0, "N_0(x^3, 0)");
  o.expect_eq(counting::count_nk_gap3(f9, 3, 2).value, 0, "N_2(x^3, 0)");
  return o;
}

Outcome normalization() {
  Outcome o;
  for (unsigned q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = field_of(q);
    for (unsigned n = 1; n <= 6; ++n) {
      Integer total = 0;
      for (unsigned k = 0; k <= n; ++k) total += counting::count_nk_gap1(f, n, k).value;
      o.expect_eq(total, power(Integer(q), n), "gap1 sum " + where(f, n, 0));
    }
  }
  for (unsigned q : {3, 4, 5, 7, 9}) {
    const Field f = field_of(q);
    for (unsigned n : gap2_degrees(q)) {
      std::vector<Integer> over_b(n + 1, 0);
      for (std::uint32_t b = 0; b < q; ++b) {
        Integer total = 0;
        for (unsigned k = 0; k <= n; ++k) {
          const Integer v = counting::count_nk_gap2(f, n, k, Element{b}).value;
          total += v;
          over_b[k] += v;
        }
        o.expect_eq(total, power(Integer(q), n - 1), "gap2 sum " + where(f, n, 0, b));
      }
      for (unsigned k = 0; k <= n; ++k) {
        o.expect_eq(over_b[k], counting::count_nk_gap1(f, n, k).value,
                    "gap2 over b " + where(f, n, k));
      }
    }
  }
  const Field f9(3, 2);
  for (unsigned n = 3; n <= 6; ++n) {
    Integer total = 0;
    for (unsigned k = 0; k <= n; ++k) total += counting::count_nk_gap3(f9, n, k).value;
    o.expect_eq(total, power(Integer(9), n - 2), "gap3 sum " + where(f9, n, 0));
  }
  return o;
}

Outcome wenger_spectra() {
  Outcome o;
  struct Instance {
    int variant;
    unsigned q, m;
  };
  const Instance families[] = {{1, 3, 1}, {1, 4, 1}, {1, 5, 1}, {1, 5, 2}, {1, 9, 1},
                           {2, 9, 1}, {2, 9, 2}, {2, 9, 3}};
  unsigned moment_checked = 0;
  std::map<wenger::MultiplicityTerm, unsigned> candidate_hits;
  unsigned variant1 = 0;
  for (const auto& s : families) {
    const wenger::WengerFamily fam{static_cast<wenger::Variant>(s.variant), field_of(s.q), s.m};
    const auto formula = wenger::spectrum_formula(fam, wenger::MultiplicityTerm::kTopDegree, kBudget);
    const auto oracle = wenger::spectrum_oracle(fam, kBudget);
    for (unsigned i = 0; i <= s.q; ++i) {
      o.expect_eq(formula.multiplicity(i), oracle.multiplicity(i),
                  fam.describe() + " level " + std::to_string(i));
    }
    o.expect_eq(formula.eigenvalue_count(), formula.vertex_count, fam.describe() + " eigenvalue count");
    for (std::size_t j = 0; j < formula.conditional_levels.size(); ++j) {
      o.expect(formula.conditional_levels[j].present == oracle.conditional_levels[j].present,
               fam.describe() + " conditional level");
    }
    if (2 * fam.side_size() <= wenger::kDefaultMomentVertexLimit) {
      const auto g = wenger::build_graph(fam, kBudget);
      o.expect(wenger::moment_check(g, formula, formula.nonzero_level_count()),
               fam.describe() + " trace moments");
      ++moment_checked;
    }
    if (s.variant == 1) {
      ++variant1;
      for (auto term : {wenger::MultiplicityTerm::kTopDegree, wenger::MultiplicityTerm::kShiftedDegree}) {
        candidate_hits[term] +=
            wenger::spectrum_formula(fam, term, kBudget).same_levels(oracle) ? 1 : 0;
      }
    }
  }
  unsigned full = 0;
  std::string winner = "none";
  for (const auto& [term, hits] : candidate_hits) {
    if (hits == variant1) {
      ++full;
      winner = wenger::multiplicity_term_name(term);
    }
  }
  o.expect(full == 1, "exactly one multiplicity term must match every variant-1 family");
  o.expect(winner == "top-degree", "top-degree term expected to be the matching one");
  std::ostringstream os;
  os << moment_checked << " families moment-checked; top-degree term matches "
     << candidate_hits[wenger::MultiplicityTerm::kTopDegree] << "/" << variant1
     << ", shifted-degree term matches "
     << candidate_hits[wenger::MultiplicityTerm::kShiftedDegree] << "/" << variant1;
  o.detail = os.str();
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (unsigned q : {3, 4, 5, 7, 8, 9, 25, 27}) {
    const Field f = field_of(q);
    int squares = 0;
    for (std::uint32_t a = 1; a < q; ++a) {
      o.expect(f.mul(Element{a}, f.inv(Element{a})) == f.one(), "inverse in F_" + std::to_string(q));
      o.expect(f.pow(Element{a}, q) == Element{a}, "Frobenius in F_" + std::to_string(q));
      if (f.odd()) squares += f.quadratic_character(Element{a}) == 1;
    }
    if (f.odd()) o.expect_eq(squares, static_cast<int>((q - 1) / 2), "square count");
  }
  for (unsigned n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (const auto& t : comb::enumerate_cycle_types(n)) total += comb::perm_type_count(t);
    o.expect_eq(total, comb::factorial(n), "class sizes n=" + std::to_string(n));
  }
  const auto r = cli::run_command({"verify", "--suite", "all"});
  o.expect(r.exit_code == 0, "verify --suite all exited " + std::to_string(r.exit_code) + ": " + r.err);
  o.detail = "verify --suite all exit " + std::to_string(r.exit_code);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"gap-1 closed form equals enumeration", gap1_equivalence},
      {"gap-2 closed form equals enumeration", gap2_equivalence},
      {"subset-sum count equals enumeration", subset_sum},
      {"quadratic system count equals enumeration", quadratic_system},
      {"moment subset counts equal enumeration", moment_subset_sum},
      {"sieve and signed sums agree", sieve_cross_check},
      {"gap-3 closed form equals enumeration", gap3_equivalence},
      {"root-count families are normalized", normalization},
      {"jumped Wenger spectra", wenger_spectra},
      {"property suites and verify --suite all", property_suites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%zu checks, %.1f s)", o.pass ? "PASS" : "FAIL", index,
                c.name, o.checks, secs);
    if (!o.detail.empty()) std::printf("; %s", o.detail.c_str());
    if (!o.pass) std::printf("; first failure: %s", o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
