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

// Jumped Wenger graphs and their spectra.
//
// Points and lines are two copies of F_q^{m+1}. A point P and a line L are
// adjacent when l_k + p_k = f_k(p_1) l_1 for k = 2..m+1, with f_k(x) =
// x^{k-1} for k <= m and f_{m+1}(x) = x^{m+1} (variant 1) or x^{m+2}
// (variant 2).
//
// The eigenvalues are +-sqrt(q N(w)) over w in F_q^{m+1}, where N(w) is the
// number of roots in F_q of F_w(u) = w_1 + w_2 f_2(u) + ... + w_{m+1}
// f_{m+1}(u). A spectrum is therefore stored as integer levels i with
// multiplicity n_i = #{w : N(w) = i} for each sign; no real numbers are
// involved anywhere.

#ifndef FQCOUNT_WENGER_H_
#define FQCOUNT_WENGER_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fqcount/exactcomb.h"
#include "fqcount/ff.h"
#include "fqcount/oracle.h"

namespace fqcount::wenger {

enum class Variant { kJumpOne = 1, kJumpTwo = 2 };

struct WengerFamily {
  Variant variant = Variant::kJumpOne;
  ff::Field field;
  unsigned m = 1;

  // Variant 1 needs m + 1 <= q - 1. Variant 2 needs m + 2 <= q - 1, odd p
  // and even e.
  void validate() const;
  // Exponents of f_1 = 1, f_2, ..., f_{m+1}.
  std::vector<unsigned> exponents() const;
  unsigned top_exponent() const { return variant == Variant::kJumpOne ? m + 1 : m + 2; }
  // q^{m+1}.
  std::uint64_t side_size() const;
  std::string describe() const;
};

// Edge predicate; works without materializing the graph.
bool incident(const WengerFamily& family, std::span<const ff::Element> point,
              std::span<const ff::Element> line);

class BipartiteGraph {
 public:
  BipartiteGraph(WengerFamily family, std::vector<std::uint32_t> point_adj,
                 std::vector<std::uint32_t> line_adj);

  const WengerFamily& family() const { return family_; }
  std::uint64_t point_count() const { return point_adj_.size() / degree_; }
  std::uint64_t line_count() const { return line_adj_.size() / degree_; }
  std::uint64_t vertex_count() const { return point_count() + line_count(); }
  std::uint64_t edge_count() const { return point_adj_.size(); }
  unsigned degree() const { return degree_; }

  // Neighbors in construction order (l_1 ascending).
  std::span<const std::uint32_t> point_neighbors(std::uint32_t point) const;
  std::span<const std::uint32_t> line_neighbors(std::uint32_t line) const;
  bool adjacent(std::uint32_t point, std::uint32_t line) const;

  // Coordinates of a point or line index: digit k is coordinate k+1.
  std::vector<ff::Element> coordinates(std::uint32_t index) const;

  // One edge per line, "P:<i>,...,<i> L:<i>,...,<i>", points outer and l_1
  // inner.
  void export_edges(std::ostream& os) const;

 private:
  WengerFamily family_;
  unsigned degree_;
  std::vector<std::uint32_t> point_adj_;
  std::vector<std::uint32_t> line_adj_;
};

// Throws BudgetExceeded when q^{m+2} edges exceed the budget.
BipartiteGraph build_graph(const WengerFamily& family,
                           const oracle::EnumerationBudget& budget = {});

struct SpectrumLevel {
  unsigned i = 0;
  Integer multiplicity;  // for each sign; level 0 is the eigenvalue 0 with total 2 n_0
};

struct LevelPresence {
  unsigned i = 0;
  bool present = false;
};

struct SpectrumReport {
  // Ascending i; levels with zero multiplicity are omitted.
  std::vector<SpectrumLevel> levels;
  Integer vertex_count;
  // Variant 2 only: whether N_i(x^{m+2}, m-1) > 0 for m <= i <= m+2.
  std::vector<LevelPresence> conditional_levels;
  std::string note;

  Integer multiplicity(unsigned i) const;
  // 2 * sum n_i; equals the vertex count for a complete spectrum.
  Integer eigenvalue_count() const;
  unsigned nonzero_level_count() const;
  bool same_levels(const SpectrumReport& other) const;
};

// Which root-count family supplies the polynomial term at levels
// i <= m - 1 for variant 1: the degree-(m+1) family matching the graph's
// top exponent, or the degree-(m+2) family. Variant 2 always uses m + 2.
enum class MultiplicityTerm { kTopDegree, kShiftedDegree };

const char* multiplicity_term_name(MultiplicityTerm term);

// Closed-form multiplicities. Values of N_i(x^{m+2}, m-1) that have no
// closed form for the field (kShiftedDegree over a field outside the gap-3
// domain) fall back to the enumeration oracle under `budget`.
SpectrumReport spectrum_formula(const WengerFamily& family,
                                MultiplicityTerm term = MultiplicityTerm::kTopDegree,
                                const oracle::EnumerationBudget& budget = {});

// Tallies N(w) over all w in F_q^{m+1}.
SpectrumReport spectrum_oracle(const WengerFamily& family,
                               const oracle::EnumerationBudget& budget = {});

inline constexpr std::uint64_t kDefaultMomentVertexLimit = 4096;

struct MomentCheckResult {
  bool ok = false;
  // Index t holds tr(A^{2t}) for t = 0..T.
  std::vector<Integer> graph_traces;
  std::vector<Integer> spectrum_traces;
  Integer odd_trace;  // tr(A)
};

// Compares tr(A^{2t}), t = 0..T, computed by closed-walk counting on the
// graph, with sum_i 2 n_i (q i)^t from the report, and checks tr(A) = 0.
// Requires T >= report.nonzero_level_count().
MomentCheckResult moment_check_detail(
    const BipartiteGraph& graph, const SpectrumReport& report, unsigned T,
    std::uint64_t vertex_limit = kDefaultMomentVertexLimit);

bool moment_check(const BipartiteGraph& graph, const SpectrumReport& report,
                  unsigned T,
                  std::uint64_t vertex_limit = kDefaultMomentVertexLimit);

}  // namespace fqcount::wenger

#endif  // FQCOUNT_WENGER_H_
