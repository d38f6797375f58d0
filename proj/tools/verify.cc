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

#include "verify.h"

#include <map>
#include <random>
#include <sstream>

#include "fqcount/counting.h"
#include "fqcount/errors.h"
#include "fqcount/ff.h"
#include "fqcount/sieve.h"
#include "fqcount/wenger.h"

namespace fqcount::verify {
namespace {

using counting::ExactCount;
using ff::Element;
using ff::Field;
using oracle::SubsetMode;

struct PrimePower {
  unsigned p;
  unsigned e;
};

std::optional<PrimePower> as_prime_power(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!ff::is_prime(p)) return std::nullopt;
    unsigned e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, e};
  }
  return std::nullopt;
}

std::vector<Field> fields_up_to(unsigned max_q, unsigned min_q, bool odd_only) {
  std::vector<Field> out;
  for (unsigned q = std::max(2u, min_q); q <= max_q; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp || (odd_only && pp->p == 2)) continue;
    out.emplace_back(pp->p, pp->e);
  }
  return out;
}

Field single_field(const Limits& limits, unsigned p, unsigned e) {
  return Field(limits.p.value_or(p), limits.e.value_or(e));
}

std::string field_flags(const Field& f) {
  std::ostringstream os;
  os << "--p " << f.p() << " --e " << f.e();
  return os.str();
}

Integer at(const std::vector<Integer>& hist, std::size_t i) {
  return i < hist.size() ? hist[i] : Integer(0);
}

Integer exact_quotient(const Integer& num, const Integer& den, const char* what) {
  if (num % den != 0) throw IntegrityError(std::string(what) + " is not divisible");
  return num / den;
}

void gap1_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  for (const auto& f : fields_up_to(l.max_q.value_or(9), 2, false)) {
    for (unsigned n = 1; n <= l.max_n.value_or(6); ++n) {
      const auto hist = oracle::brute_nk_histogram(f, {}, n, n - 1, budget);
      for (unsigned k = 0; k <= n; ++k) {
        std::ostringstream cmd;
        cmd << "count --gap 1 " << field_flags(f) << " --n " << n << " --k " << k
            << " --method both";
        r.rows.push_back({"gap1", f.q(), n, std::to_string(n - 1), std::to_string(k),
                          "0", counting::count_nk_gap1(f, n, k).value, at(hist, k),
                          cmd.str()});
      }
    }
  }
}

void gap2_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  for (const auto& f : fields_up_to(l.max_q.value_or(9), 2, false)) {
    for (unsigned n = 2; n <= l.max_n.value_or(6); ++n) {
      for (std::uint32_t bi = 0; bi < f.q(); ++bi) {
        const Element b{bi};
        const std::vector<Element> high{f.neg(b)};
        const auto hist = oracle::brute_nk_histogram(f, high, n, n - 2, budget);
        for (unsigned k = 0; k <= n; ++k) {
          std::ostringstream cmd;
          cmd << "count --gap 2 " << field_flags(f) << " --n " << n << " --k " << k
              << " --b " << bi << " --method both";
          r.rows.push_back({"gap2", f.q(), n, std::to_string(n - 2), std::to_string(k),
                            std::to_string(bi),
                            counting::count_nk_gap2(f, n, k, b).value, at(hist, k),
                            cmd.str()});
        }
      }
    }
  }
}

void gap3_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  const Field f = single_field(l, 3, 2);
  for (unsigned n = 3; n <= l.max_n.value_or(6); ++n) {
    const std::vector<Element> high(2, f.zero());
    const auto hist = oracle::brute_nk_histogram(f, high, n, n - 3, budget);
    for (unsigned k = 0; k <= n; ++k) {
      std::ostringstream cmd;
      cmd << "count --gap 3 " << field_flags(f) << " --n " << n << " --k " << k
          << " --method both";
      r.rows.push_back({"gap3", f.q(), n, std::to_string(n - 3), std::to_string(k), "0",
                        counting::count_nk_gap3(f, n, k).value, at(hist, k),
                        cmd.str()});
    }
  }
}

void subset_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  for (const auto& f : fields_up_to(l.max_q.value_or(9), 2, false)) {
    for (unsigned n = 0; n <= std::min(f.q(), l.max_n.value_or(12)); ++n) {
      const auto hist = oracle::brute_subset_sum_histogram(f, n, budget);
      for (std::uint32_t bi = 0; bi < f.q(); ++bi) {
        std::ostringstream cmd;
        cmd << "subset-sum " << field_flags(f) << " --n " << n << " --b " << bi
            << " --method both";
        r.rows.push_back({"subset", f.q(), n, "", "", std::to_string(bi),
                          counting::subset_sum_count(f, n, Element{bi}).value,
                          at(hist, bi), cmd.str()});
      }
    }
  }
}

std::string mss2_command(const Field& f, unsigned t, const char* mode) {
  std::ostringstream cmd;
  cmd << "mss2 " << field_flags(f) << " --t " << t << " --m1 0 --m2 0 --mode " << mode
      << " --method both";
  return cmd.str();
}

void mss2_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  const Field f = single_field(l, 3, 2);
  const unsigned max_n = l.max_n.value_or(9);
  const Element z = f.zero();
  for (unsigned n = 1; n <= std::min(f.q(), max_n); ++n) {
    r.rows.push_back({"mss2-power-sums", f.q(), n, "", "", "0",
                      counting::moment_subset_count(f, n).value,
                      oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kPowerSums, budget).value,
                      mss2_command(f, n, "power-sums")});
    r.rows.push_back({"mss2-elementary", f.q(), n, "", "", "0",
                      counting::moment_subset_count_elementary(f, n).value,
                      oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kElementary, budget).value,
                      mss2_command(f, n, "elementary")});
  }
  for (unsigned n = 2; n <= std::min(f.q() + 1, max_n); ++n) {
    r.rows.push_back({"mss2-first-distinct", f.q(), n, "", "", "0",
                      counting::moment_subset_count_m1(f, n).value,
                      oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kFirstDistinct, budget).value,
                      mss2_command(f, n, "first-distinct")});
  }
}

void sieve_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  const Field f = single_field(l, 3, 2);
  const unsigned max_n = l.max_n.value_or(8);
  const Element z = f.zero();
  for (unsigned n = 1; n <= std::min(f.q(), max_n); ++n) {
    const auto counted = sieve::sieve_distinct(sieve::power_sum_counter(f, n));
    r.rows.push_back({"sieve-distinct", f.q(), n, "", "", "0",
                      exact_quotient(counted, comb::factorial(n), "distinct sieve"),
                      oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kPowerSums, budget).value,
                      "sieve " + field_flags(f) + " --n " + std::to_string(n) +
                          " --counter power --method both"});
    const auto sums = oracle::brute_subset_sum_histogram(f, n, budget);
    for (std::uint32_t bi = 0; bi < f.q(); ++bi) {
      const auto lin = sieve::sieve_distinct(sieve::linear_sum_counter(f, n, Element{bi}));
      r.rows.push_back({"sieve-linear", f.q(), n, "", "", std::to_string(bi),
                        exact_quotient(lin, comb::factorial(n), "linear sieve"), at(sums, bi),
                        "sieve " + field_flags(f) + " --n " + std::to_string(n) +
                            " --counter linear --b " + std::to_string(bi) +
                            " --method both"});
    }
  }
  for (unsigned n = 2; n <= std::min(f.q() + 1, max_n); ++n) {
    const auto counted = sieve::sieve_first_n_minus_1(
        sieve::power_sum_counter(f, n, sieve::Scope::kFirstNMinus1));
    r.rows.push_back({"sieve-first", f.q(), n, "", "", "0",
                      exact_quotient(counted, comb::factorial(n - 1), "first-coordinate sieve"),
                      oracle::brute_subsets_mss2(f, n, z, z, SubsetMode::kFirstDistinct, budget).value,
                      "sieve " + field_flags(f) + " --n " + std::to_string(n) +
                          " --counter power --scope first --method both"});
  }
  for (unsigned n = 1; n <= max_n + 2; ++n) {
    const auto closed = counting::s_plus_minus(f, n);
    const auto typed = counting::s_plus_minus_by_types(f, n);
    r.rows.push_back({"s-plus-minus", f.q(), n, "", "plus", "", closed.plus, typed.plus, ""});
    r.rows.push_back({"s-plus-minus", f.q(), n, "", "minus", "", closed.minus, typed.minus, ""});
  }
}

std::string join(const std::vector<Element>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i].index);
  }
  return s;
}

struct Tuple {
  std::vector<Element> a;
  Element a0;
  std::vector<Element> bvec;
  Element b0;
};

// Draws a tuple in the requested case, or nothing if the case looks empty.
std::optional<Tuple> draw_tuple(const Field& f, unsigned n, counting::QuadLinCase want,
                                std::mt19937_64& rng) {
  const bool want_b_zero = want == counting::QuadLinCase::kZeroBZeroC ||
                           want == counting::QuadLinCase::kZeroBNonzeroC;
  const bool want_c_zero = want == counting::QuadLinCase::kZeroBZeroC ||
                           want == counting::QuadLinCase::kNonzeroBZeroC;
  const std::uint32_t q = f.q();
  auto any = [&] { return Element{static_cast<std::uint32_t>(rng() % q)}; };
  auto nonzero = [&] { return Element{static_cast<std::uint32_t>(1 + rng() % (q - 1))}; };
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Tuple t;
    bool any_b = false;
    Element bsum = f.zero();
    for (unsigned i = 0; i < n; ++i) {
      t.a.push_back(nonzero());
      t.bvec.push_back(any());
      any_b = any_b || t.bvec.back() != f.zero();
      bsum = f.add(bsum, f.mul(f.mul(t.bvec.back(), t.bvec.back()), f.inv(t.a.back())));
    }
    if (!any_b || (bsum == f.zero()) != want_b_zero) continue;
    if (want_b_zero) {
      t.a0 = any();
      t.b0 = want_c_zero ? f.zero() : nonzero();
    } else {
      t.b0 = any();
      const Element c = want_c_zero ? f.zero() : nonzero();
      t.a0 = f.mul(f.sub(f.mul(t.b0, t.b0), c), f.inv(bsum));
    }
    return t;
  }
  return std::nullopt;
}

void quadlin_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  static constexpr counting::QuadLinCase kCases[] = {
      counting::QuadLinCase::kNonzeroBZeroC, counting::QuadLinCase::kNonzeroBNonzeroC,
      counting::QuadLinCase::kZeroBZeroC, counting::QuadLinCase::kZeroBNonzeroC};
  for (const auto& f : fields_up_to(l.max_q.value_or(9), 3, true)) {
    for (unsigned n = 1; n <= l.max_n.value_or(5); ++n) {
      std::mt19937_64 rng(l.seed ^ (std::uint64_t{f.q()} << 32) ^ n);
      for (unsigned s = 0; s < l.samples; ++s) {
        const auto want = kCases[s % 4];
        const auto t = draw_tuple(f, n, want, rng);
        if (!t) continue;
        std::ostringstream label, cmd;
        label << "a=" << join(t->a, ';') << " a0=" << t->a0.index
              << " b=" << join(t->bvec, ';') << " b0=" << t->b0.index;
        cmd << "quadlin " << field_flags(f) << " --a " << join(t->a, ',')
            << " --a0 " << t->a0.index << " --bvec " << join(t->bvec, ',')
            << " --b0 " << t->b0.index << " --method both";
        r.rows.push_back(
            {"quadlin", f.q(), n, "", std::to_string(s % 4 + 1), label.str(),
             counting::quad_lin_solution_count(f, t->a, t->a0, t->bvec, t->b0).value,
             oracle::brute_quadlin(f, t->a, t->a0, t->bvec, t->b0, budget).value,
             cmd.str()});
      }
    }
  }
}

void wenger_rows(Report& r, const Limits& l, const oracle::EnumerationBudget& budget) {
  struct Instance {
    wenger::Variant variant;
    unsigned q, m;
  };
  static constexpr Instance kFamilies[] = {
      {wenger::Variant::kJumpOne, 3, 1}, {wenger::Variant::kJumpOne, 4, 1},
      {wenger::Variant::kJumpOne, 5, 1}, {wenger::Variant::kJumpOne, 5, 2},
      {wenger::Variant::kJumpOne, 9, 1}, {wenger::Variant::kJumpTwo, 9, 1},
      {wenger::Variant::kJumpTwo, 9, 2}, {wenger::Variant::kJumpTwo, 9, 3}};
  for (const auto& spec : kFamilies) {
    if (spec.q > l.max_q.value_or(9) || spec.m > l.max_n.value_or(3)) continue;
    const auto pp = *as_prime_power(spec.q);
    const wenger::WengerFamily fam{spec.variant, Field(pp.p, pp.e), spec.m};
    const std::string suite =
        spec.variant == wenger::Variant::kJumpOne ? "wenger-v1" : "wenger-v2";
    const auto formula = wenger::spectrum_formula(fam, wenger::MultiplicityTerm::kTopDegree, budget);
    const auto oracle = wenger::spectrum_oracle(fam, budget);
    std::ostringstream cmd;
    cmd << "wenger --variant " << static_cast<int>(spec.variant) << " "
        << field_flags(fam.field) << " --m " << spec.m << " --method both";
    for (unsigned i = 0; i <= spec.q; ++i) {
      const Integer fv = formula.multiplicity(i), ov = oracle.multiplicity(i);
      if (fv == 0 && ov == 0) continue;
      r.rows.push_back({suite, spec.q, spec.m, "", std::to_string(i), "", fv, ov, cmd.str()});
    }
    for (std::size_t j = 0; j < formula.conditional_levels.size(); ++j) {
      const auto& c = formula.conditional_levels[j];
      const bool other = j < oracle.conditional_levels.size() && oracle.conditional_levels[j].present;
      r.rows.push_back({suite + "-presence", spec.q, spec.m, "", std::to_string(c.i), "",
                        Integer(c.present ? 1 : 0), Integer(other ? 1 : 0), cmd.str()});
    }
    if (2 * fam.side_size() <= wenger::kDefaultMomentVertexLimit) {
      const auto graph = wenger::build_graph(fam, budget);
      const unsigned T = formula.nonzero_level_count();
      const auto mc = wenger::moment_check_detail(graph, formula, T);
      for (unsigned t = 0; t <= T; ++t) {
        r.rows.push_back({suite + "-moment", spec.q, spec.m, "", std::to_string(t), "",
                          mc.spectrum_traces[t], mc.graph_traces[t],
                          cmd.str() + " --check-moments " + std::to_string(T)});
      }
    }
  }
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> kAll = {Suite::kGap1,   Suite::kGap2,  Suite::kGap3,
                                          Suite::kSubset, Suite::kMss2,  Suite::kSieve,
                                          Suite::kQuadLin, Suite::kWenger};
  return kAll;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::kGap1: return "gap1";
    case Suite::kGap2: return "gap2";
    case Suite::kGap3: return "gap3";
    case Suite::kSubset: return "subset";
    case Suite::kMss2: return "mss2";
    case Suite::kSieve: return "sieve";
    case Suite::kQuadLin: return "quadlin";
    case Suite::kWenger: return "wenger";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (auto s : all_suites()) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

std::size_t Report::mismatches() const {
  std::size_t c = 0;
  for (const auto& row : rows) c += !row.match();
  return c;
}

const Row* Report::first_mismatch() const {
  for (const auto& row : rows) {
    if (!row.match()) return &row;
  }
  return nullptr;
}

Report run_suite(Suite suite, const Limits& limits,
                 const oracle::EnumerationBudget& budget) {
  Report r;
  switch (suite) {
    case Suite::kGap1: gap1_rows(r, limits, budget); break;
    case Suite::kGap2: gap2_rows(r, limits, budget); break;
    case Suite::kGap3: gap3_rows(r, limits, budget); break;
    case Suite::kSubset: subset_rows(r, limits, budget); break;
    case Suite::kMss2: mss2_rows(r, limits, budget); break;
    case Suite::kSieve: sieve_rows(r, limits, budget); break;
    case Suite::kQuadLin: quadlin_rows(r, limits, budget); break;
    case Suite::kWenger: wenger_rows(r, limits, budget); break;
  }
  if (limits.inject_fault && !r.rows.empty()) r.rows.front().formula_value += 1;
  return r;
}

void write_csv(std::ostream& os, const Report& report) {
  os << kCsvHeader << '\n';
  for (const auto& row : report.rows) {
    os << row.suite << ',' << row.q << ',' << row.n << ',' << row.ell << ','
       << row.k << ',' << row.b << ',' << row.formula_value.get_str() << ','
       << row.oracle_value.get_str() << ',' << (row.match() ? "true" : "false")
       << '\n';
  }
}

std::string reproducer(const Row& row) {
  std::ostringstream os;
  os << "mismatch in " << row.suite << " at q=" << row.q << " n=" << row.n;
  if (!row.ell.empty()) os << " ell=" << row.ell;
  if (!row.k.empty()) os << " k=" << row.k;
  if (!row.b.empty()) os << " b=" << row.b;
  os << ": formula " << row.formula_value.get_str() << " vs oracle "
     << row.oracle_value.get_str();
  if (!row.command.empty()) os << "\nreproduce with: fqcount " << row.command;
  return os.str();
}

}  // namespace fqcount::verify
