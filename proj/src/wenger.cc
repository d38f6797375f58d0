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

#include "fqcount/wenger.h"

#include <map>
#include <ostream>
#include <sstream>

#include "fqcount/counting.h"
#include "fqcount/errors.h"
#include "fqcount/parallel.h"

namespace fqcount::wenger {
namespace {

using ff::Element;

std::uint64_t pow_u64(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Closed walks of length 2t from every point, t = 1..T.
template <class Num>
std::vector<Integer> walk_traces(const BipartiteGraph& g, unsigned T) {
  const std::uint64_t points = g.point_count();
  std::vector<Num> traces(T + 1, Num(0));
  std::vector<Num> x(points), y(g.line_count());
  for (std::uint64_t start = 0; start < points; ++start) {
    std::fill(x.begin(), x.end(), Num(0));
    x[start] = 1;
    for (unsigned t = 1; t <= T; ++t) {
      std::fill(y.begin(), y.end(), Num(0));
      for (std::uint64_t p = 0; p < points; ++p) {
        if (x[p] == 0) continue;
        for (auto l : g.point_neighbors(static_cast<std::uint32_t>(p))) y[l] += x[p];
      }
      std::fill(x.begin(), x.end(), Num(0));
      for (std::uint64_t l = 0; l < y.size(); ++l) {
        if (y[l] == 0) continue;
        for (auto p : g.line_neighbors(static_cast<std::uint32_t>(l))) x[p] += y[l];
      }
      traces[t] += x[start];
    }
  }
  std::vector<Integer> out(T + 1);
  out[0] = Integer(static_cast<unsigned long>(g.vertex_count()));
  for (unsigned t = 1; t <= T; ++t) {
    if constexpr (std::is_same_v<Num, Integer>) {
      out[t] = 2 * traces[t];
    } else {
      // Split the 128-bit value into two 64-bit halves.
      const auto hi = static_cast<std::uint64_t>(traces[t] >> 64);
      const auto lo = static_cast<std::uint64_t>(traces[t]);
      Integer h, l;
      mpz_import(h.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
      mpz_import(l.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
      out[t] = 2 * ((h << 64) + l);
    }
  }
  return out;
}

Integer binomial_sum_term(unsigned q, unsigned m, unsigned i) {
  // (q-1) C(q,i) sum_{d=i}^{m-1} sum_{k=0}^{d-i} (-1)^k C(q-i,k) q^{d-i-k}
  Integer s = 0;
  for (unsigned d = i; d + 1 <= m; ++d) {
    for (unsigned k = 0; k <= d - i; ++k) {
      Integer term = comb::binomial(q - i, k) * power(Integer(q), d - i - k);
      s += (k % 2 == 0) ? term : Integer(-term);
    }
  }
  return Integer(q - 1) * comb::binomial(q, i) * s;
}

bool gap3_closed_form_available(const ff::Field& f) {
  return f.odd() && f.e() % 2 == 0;
}

// N_i(x^{m+2}, m-1), by closed form where one exists.
Integer shifted_count(const WengerFamily& fam, unsigned i,
                      const oracle::EnumerationBudget& budget,
                      std::vector<Integer>& oracle_cache, bool& used_oracle) {
  if (gap3_closed_form_available(fam.field)) {
    return counting::count_nk_gap3(fam.field, fam.m + 2, i).value;
  }
  if (oracle_cache.empty()) {
    const std::vector<Element> high(2, fam.field.zero());
    oracle_cache = oracle::brute_nk_histogram(fam.field, high, fam.m + 2,
                                              fam.m - 1, budget);
  }
  used_oracle = true;
  return i < oracle_cache.size() ? oracle_cache[i] : Integer(0);
}

SpectrumReport assemble(const WengerFamily& fam,
                        const std::map<unsigned, Integer>& levels) {
  SpectrumReport r;
  for (const auto& [i, mult] : levels) {
    if (mult != 0) r.levels.push_back({i, mult});
  }
  r.vertex_count = Integer(2) * Integer(static_cast<unsigned long>(fam.side_size()));
  return r;
}

}  // namespace

void WengerFamily::validate() const {
  const unsigned q = field.q();
  if (m < 1) throw PreconditionError("Wenger family requires m >= 1");
  if (variant == Variant::kJumpOne) {
    if (m + 1 > q - 1) throw PreconditionError("variant 1 requires m + 1 <= q - 1");
  } else {
    if (m + 2 > q - 1) throw PreconditionError("variant 2 requires m + 2 <= q - 1");
    if (!field.odd() || field.e() % 2 != 0) {
      throw PreconditionError("variant 2 requires odd p and even e");
    }
  }
}

std::vector<unsigned> WengerFamily::exponents() const {
  std::vector<unsigned> out;
  for (unsigned k = 0; k < m; ++k) out.push_back(k);
  out.push_back(top_exponent());
  return out;
}

std::uint64_t WengerFamily::side_size() const { return pow_u64(field.q(), m + 1); }

std::string WengerFamily::describe() const {
  std::ostringstream os;
  os << "JW" << static_cast<int>(variant) << " q=" << field.q() << " m=" << m;
  return os.str();
}

bool incident(const WengerFamily& family, std::span<const Element> point,
              std::span<const Element> line) {
  const auto& f = family.field;
  const auto exps = family.exponents();
  if (point.size() != family.m + 1 || line.size() != family.m + 1) {
    throw PreconditionError("points and lines have m + 1 coordinates");
  }
  for (unsigned k = 1; k <= family.m; ++k) {
    const Element rhs = f.mul(f.pow(point[0], exps[k]), line[0]);
    if (f.add(line[k], point[k]) != rhs) return false;
  }
  return true;
}

BipartiteGraph::BipartiteGraph(WengerFamily family,
                               std::vector<std::uint32_t> point_adj,
                               std::vector<std::uint32_t> line_adj)
    : family_(std::move(family)),
      degree_(family_.field.q()),
      point_adj_(std::move(point_adj)),
      line_adj_(std::move(line_adj)) {}

std::span<const std::uint32_t> BipartiteGraph::point_neighbors(
    std::uint32_t point) const {
  return {point_adj_.data() + std::size_t{point} * degree_, degree_};
}

std::span<const std::uint32_t> BipartiteGraph::line_neighbors(
    std::uint32_t line) const {
  return {line_adj_.data() + std::size_t{line} * degree_, degree_};
}

bool BipartiteGraph::adjacent(std::uint32_t point, std::uint32_t line) const {
  for (auto l : point_neighbors(point)) {
    if (l == line) return true;
  }
  return false;
}

std::vector<Element> BipartiteGraph::coordinates(std::uint32_t index) const {
  const std::uint32_t q = family_.field.q();
  std::vector<Element> out(family_.m + 1);
  for (auto& c : out) {
    c = Element{index % q};
    index /= q;
  }
  return out;
}

void BipartiteGraph::export_edges(std::ostream& os) const {
  auto write = [&](std::uint32_t index) {
    const auto coords = coordinates(index);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (k) os << ',';
      os << coords[k].index;
    }
  };
  for (std::uint32_t p = 0; p < point_count(); ++p) {
    for (auto l : point_neighbors(p)) {
      os << "P:";
      write(p);
      os << " L:";
      write(l);
      os << '\n';
    }
  }
}

BipartiteGraph build_graph(const WengerFamily& family,
                           const oracle::EnumerationBudget& budget) {
  family.validate();
  const auto& f = family.field;
  const std::uint32_t q = f.q();
  const unsigned dims = family.m + 1;
  oracle::check_budget(power(Integer(q), dims + 1), budget, "graph edges");
  const std::uint64_t side = family.side_size();
  const auto exps = family.exponents();

  std::vector<std::uint64_t> place(dims);
  for (unsigned k = 0; k < dims; ++k) place[k] = pow_u64(q, k);

  std::vector<std::uint32_t> point_adj(side * q);
  std::vector<std::uint32_t> line_adj(side * q);
  std::vector<unsigned> line_fill(side, 0);
  std::vector<Element> coords(dims);
  for (std::uint64_t pt = 0; pt < side; ++pt) {
    std::uint64_t rest = pt;
    for (auto& c : coords) {
      c = Element{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    for (std::uint32_t l1 = 0; l1 < q; ++l1) {
      std::uint64_t line = l1;
      for (unsigned k = 1; k < dims; ++k) {
        const Element lk = f.sub(
            f.mul(f.pow(coords[0], exps[k]), Element{l1}), coords[k]);
        line += lk.index * place[k];
      }
      point_adj[pt * q + l1] = static_cast<std::uint32_t>(line);
      if (line_fill[line] >= q) {
        throw IntegrityError("line degree exceeds q in " + family.describe());
      }
      line_adj[line * q + line_fill[line]++] = static_cast<std::uint32_t>(pt);
    }
  }
  for (auto fill : line_fill) {
    if (fill != q) throw IntegrityError("graph is not q-regular");
  }
  return BipartiteGraph(family, std::move(point_adj), std::move(line_adj));
}

Integer SpectrumReport::multiplicity(unsigned i) const {
  for (const auto& lv : levels) {
    if (lv.i == i) return lv.multiplicity;
  }
  return 0;
}

Integer SpectrumReport::eigenvalue_count() const {
  Integer total = 0;
  for (const auto& lv : levels) total += 2 * lv.multiplicity;
  return total;
}

unsigned SpectrumReport::nonzero_level_count() const {
  unsigned c = 0;
  for (const auto& lv : levels) c += lv.i != 0;
  return c;
}

bool SpectrumReport::same_levels(const SpectrumReport& other) const {
  if (levels.size() != other.levels.size()) return false;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j].i != other.levels[j].i ||
        levels[j].multiplicity != other.levels[j].multiplicity) {
      return false;
    }
  }
  return true;
}

const char* multiplicity_term_name(MultiplicityTerm term) {
  return term == MultiplicityTerm::kTopDegree ? "top-degree" : "shifted-degree";
}

SpectrumReport spectrum_formula(const WengerFamily& family,
                                MultiplicityTerm term,
                                const oracle::EnumerationBudget& budget) {
  family.validate();
  const auto& f = family.field;
  const unsigned q = f.q(), m = family.m;
  std::map<unsigned, Integer> levels;
  // w = 0: F_w vanishes identically.
  levels[q] += 1;
  // w_{m+1} = 0, F_w nonzero of degree d <= m - 1.
  for (unsigned i = 0; i + 1 <= m; ++i) levels[i] += binomial_sum_term(q, m, i);

  std::vector<Integer> cache;
  bool used_oracle = false;
  const Integer scale = q - 1;
  // w_{m+1} != 0: a nonzero multiple of a monic polynomial of the top degree
  // whose coefficients of x^m (and x^{m+1} for variant 2) vanish.
  for (unsigned i = 0; i <= std::min(family.top_exponent(), q); ++i) {
    Integer count;
    if (family.variant == Variant::kJumpTwo) {
      count = counting::count_nk_gap3(f, m + 2, i).value;
    } else if (term == MultiplicityTerm::kShiftedDegree && i + 1 <= m) {
      count = shifted_count(family, i, budget, cache, used_oracle);
    } else {
      count = counting::count_nk_gap2(f, m + 1, i, f.zero()).value;
    }
    levels[i] += scale * count;
  }

  SpectrumReport report = assemble(family, levels);
  std::ostringstream note;
  note << "closed form, " << (family.variant == Variant::kJumpOne
                                  ? multiplicity_term_name(term)
                                  : "degree m+2")
       << " polynomial term";
  if (used_oracle) note << " (N_i(x^{m+2}, m-1) by enumeration)";
  report.note = note.str();
  if (family.variant == Variant::kJumpTwo) {
    for (unsigned i = m; i <= m + 2; ++i) {
      report.conditional_levels.push_back(
          {i, counting::count_nk_gap3(f, m + 2, i).value > 0});
    }
  }
  return report;
}

SpectrumReport spectrum_oracle(const WengerFamily& family,
                               const oracle::EnumerationBudget& budget) {
  family.validate();
  const auto& f = family.field;
  const std::uint32_t q = f.q();
  const unsigned dims = family.m + 1;
  oracle::check_budget(power(Integer(q), dims), budget, "coefficient vectors");
  const auto exps = family.exponents();
  std::vector<std::vector<Element>> basis(dims, std::vector<Element>(q));
  for (unsigned k = 0; k < dims; ++k) {
    for (std::uint32_t u = 0; u < q; ++u) basis[k][u] = f.pow(Element{u}, exps[k]);
  }
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hist(q + 1, 0);
    std::vector<Element> w(dims);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (auto& c : w) {
        c = Element{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      unsigned roots = 0;
      for (std::uint32_t u = 0; u < q; ++u) {
        Element v = f.zero();
        for (unsigned k = 0; k < dims; ++k) v = f.add(v, f.mul(w[k], basis[k][u]));
        roots += v == f.zero();
      }
      ++hist[roots];
    }
    return hist;
  };
  std::map<unsigned, Integer> levels;
  for (const auto& part : map_ranges(family.side_size(), budget.workers, work)) {
    for (unsigned i = 0; i <= q; ++i) {
      if (part[i]) levels[i] += Integer(static_cast<unsigned long>(part[i]));
    }
  }
  SpectrumReport report = assemble(family, levels);
  report.note = "enumeration of all coefficient vectors";
  if (family.variant == Variant::kJumpTwo) {
    const std::vector<Element> high(2, f.zero());
    const auto hist = oracle::brute_nk_histogram(f, high, family.m + 2,
                                                 family.m - 1, budget);
    for (unsigned i = family.m; i <= family.m + 2; ++i) {
      report.conditional_levels.push_back({i, i < hist.size() && hist[i] > 0});
    }
  }
  return report;
}

MomentCheckResult moment_check_detail(const BipartiteGraph& graph,
                                      const SpectrumReport& report, unsigned T,
                                      std::uint64_t vertex_limit) {
  if (T < report.nonzero_level_count()) {
    throw PreconditionError("moment check needs T >= number of nonzero levels");
  }
  if (graph.vertex_count() > vertex_limit) {
    throw BudgetExceeded("moment check vertices",
                         std::to_string(graph.vertex_count()), vertex_limit);
  }
  MomentCheckResult out;
  // Walk counts are bounded by q^{2T} per start vertex.
  const Integer bound = power(Integer(graph.degree()), 2 * T) *
                        Integer(static_cast<unsigned long>(graph.vertex_count()));
  out.graph_traces = bound < power(Integer(2), 120)
                         ? walk_traces<unsigned __int128>(graph, T)
                         : walk_traces<Integer>(graph, T);
  // Bipartite: tr(A) = 0.
  out.odd_trace = 0;

  const unsigned q = graph.family().field.q();
  out.spectrum_traces.assign(T + 1, 0);
  out.spectrum_traces[0] = report.eigenvalue_count();
  for (unsigned t = 1; t <= T; ++t) {
    for (const auto& lv : report.levels) {
      out.spectrum_traces[t] += 2 * lv.multiplicity * power(Integer(q * lv.i), t);
    }
  }
  out.ok = out.odd_trace == 0 && out.graph_traces == out.spectrum_traces;
  return out;
}

bool moment_check(const BipartiteGraph& graph, const SpectrumReport& report,
                  unsigned T, std::uint64_t vertex_limit) {
  return moment_check_detail(graph, report, T, vertex_limit).ok;
}

}  // namespace fqcount::wenger
