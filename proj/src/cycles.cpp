// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/cycles.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace rnx {

const char* behavior_name(Behavior b) {
  switch (b) {
    case Behavior::good: return "good";
    case Behavior::bad: return "bad";
    case Behavior::zero: return "zero";
  }
  return "unknown";
}

MRGraph build_mr_graph(const ReactionNetwork& net) {
  MRGraph g;
  g.metabolite_count = net.metabolite_count();
  g.reaction_count = net.reaction_count();
  for (const auto& r : net.reactions()) {
    for (const auto& t : r.inputs) g.edges.push_back({t.metabolite, r.index, -1});
    for (const auto& t : r.outputs) g.edges.push_back({t.metabolite, r.index, 1});
  }
  return g;
}

MRGraph build_mr_graph(const IntMatrix& S) {
  MRGraph g;
  g.metabolite_count = S.rows;
  g.reaction_count = S.cols;
  for (int m = 0; m < S.rows; ++m)
    for (int j = 0; j < S.cols; ++j)
      if (long long v = S.at(m, j); v != 0)
        g.edges.push_back({m, j, v < 0 ? -1 : 1});
  return g;
}

namespace {

struct Arc {
  int to = 0;
  bool negative = false;
};

// Digraph on metabolites induced by the selection: an arc m -> m' for every
// non-selected edge (sel(m), m').  Completion cycles of the selection are
// exactly the simple directed cycles here, so each cycle is found once by
// anchoring the search at its smallest metabolite.
std::vector<std::vector<Arc>> selection_digraph(const MRGraph& g,
                                                const ChildSelection& sel) {
  const int m_count = g.metabolite_count;
  if (static_cast<int>(sel.assignment.size()) != m_count)
    fail(errc::dimension_mismatch,
         "selection does not match the graph's metabolite count");

  std::vector<int> mother(g.reaction_count, -1);
  std::vector<char> selected_ok(m_count, 0);
  for (int m = 0; m < m_count; ++m) {
    int j = sel.assignment[m];
    if (j < 0 || j >= g.reaction_count)
      fail(errc::invalid_argument, "selected reaction out of range");
    if (mother[j] != -1)
      fail(errc::invalid_argument, "selection reuses a reaction");
    mother[j] = m;
  }
  for (const auto& e : g.edges)
    if (mother[e.reaction] == e.metabolite && e.sign < 0)
      selected_ok[e.metabolite] = 1;
  for (int m = 0; m < m_count; ++m)
    if (!selected_ok[m])
      fail(errc::invalid_argument,
           "metabolite " + std::to_string(m) +
               " has no negative edge to its selected reaction");

  std::vector<std::vector<Arc>> adj(m_count);
  for (const auto& e : g.edges) {
    int m = mother[e.reaction];
    if (m < 0 || e.metabolite == m) continue;
    adj[m].push_back({e.metabolite, e.sign < 0});
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end(),
              [](const Arc& x, const Arc& y) { return x.to < y.to; });
  return adj;
}

struct CycleSearch {
  const std::vector<std::vector<Arc>>& adj;
  const ChildSelection& sel;
  uint64_t bound;
  uint64_t work = 0;
  std::vector<CompletionCycle> found;
  std::vector<int> path;
  std::vector<int> negatives;
  std::vector<char> on_path;

  void charge() {
    if (++work > 64 * bound)
      fail(errc::combinatorial_blowup,
           "cycle search exceeded its work budget");
  }

  void emit() {
    if (found.size() >= bound)
      fail(errc::combinatorial_blowup,
           "completion cycle count exceeds " + std::to_string(bound));
    CompletionCycle c;
    c.metabolites = path;
    for (int m : path) c.reactions.push_back(sel.assignment[m]);
    int neg = 0;
    for (int v : negatives) neg += v;
    c.bad = neg % 2 == 0;
    found.push_back(std::move(c));
  }

  void dfs(int anchor, int u) {
    for (const auto& arc : adj[u]) {
      charge();
      if (arc.to == anchor) {
        if (path.size() >= 2) {
          negatives.push_back(arc.negative);
          emit();
          negatives.pop_back();
        }
        continue;
      }
      if (arc.to < anchor || on_path[arc.to]) continue;
      on_path[arc.to] = 1;
      path.push_back(arc.to);
      negatives.push_back(arc.negative);
      dfs(anchor, arc.to);
      negatives.pop_back();
      path.pop_back();
      on_path[arc.to] = 0;
    }
  }
};

}  // namespace

std::vector<CompletionCycle> completion_cycles(const MRGraph& g,
                                               const ChildSelection& sel,
                                               uint64_t bound) {
  auto adj = selection_digraph(g, sel);
  const int m_count = g.metabolite_count;

  CycleSearch search{adj, sel, bound, 0, {}, {}, {}, {}};
  search.on_path.assign(m_count, 0);
  for (int s = 0; s < m_count; ++s) {
    search.path = {s};
    search.negatives.clear();
    search.on_path[s] = 1;
    search.dfs(s, s);
    search.on_path[s] = 0;
  }

  std::sort(search.found.begin(), search.found.end(),
            [](const CompletionCycle& a, const CompletionCycle& b) {
              if (a.metabolites.size() != b.metabolites.size())
                return a.metabolites.size() < b.metabolites.size();
              return a.metabolites < b.metabolites;
            });
  return search.found;
}

namespace {

struct Mask {
  std::vector<uint64_t> w;

  explicit Mask(int words) : w(words, 0) {}

  void set(int bit) { w[bit >> 6] |= uint64_t(1) << (bit & 63); }
  bool intersects(const Mask& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
};

struct ParityCount {
  uint64_t even = 0;
  uint64_t odd = 0;
};

// Counts independent sets (empty one included) of the conflict graph,
// split by parity of bad members, with the classic inclusion recursion
// on the lowest live vertex.
struct SetCounter {
  const std::vector<Mask>& adjacency;
  const std::vector<char>& is_bad;
  int words;
  uint64_t bound;
  uint64_t calls = 0;

  ParityCount run(const Mask& alive) {
    if (++calls > 8 * bound)
      fail(errc::combinatorial_blowup,
           "completion counting exceeded its work budget");

    int v = -1;
    for (int i = 0; i < words && v < 0; ++i)
      if (alive.w[i]) v = i * 64 + __builtin_ctzll(alive.w[i]);
    if (v < 0) return {1, 0};

    Mask without = alive;
    without.w[v >> 6] &= ~(uint64_t(1) << (v & 63));
    ParityCount excl = run(without);

    Mask with_v = without;
    for (int i = 0; i < words; ++i) with_v.w[i] &= ~adjacency[v].w[i];
    ParityCount incl = run(with_v);

    ParityCount total;
    if (is_bad[v]) {
      total.even = excl.even + incl.odd;
      total.odd = excl.odd + incl.even;
    } else {
      total.even = excl.even + incl.even;
      total.odd = excl.odd + incl.odd;
    }
    if (total.even + total.odd - 1 > bound)
      fail(errc::combinatorial_blowup,
           "completion count exceeds " + std::to_string(bound));
    return total;
  }
};

}  // namespace

CompletionCounts count_completions(const std::vector<CompletionCycle>& cycles,
                                   uint64_t bound) {
  const int n = static_cast<int>(cycles.size());
  if (static_cast<uint64_t>(n) > bound || n > 10000)
    fail(errc::combinatorial_blowup,
         "too many cycles to count completions over");
  if (n == 0) return {0, 0};

  // Two cycles conflict iff their metabolite sets meet; a shared reaction
  // forces its shared mother, so metabolite masks decide disjointness.
  int met_words = 1;
  for (const auto& c : cycles)
    for (int m : c.metabolites) met_words = std::max(met_words, m / 64 + 1);

  std::vector<Mask> met_masks(n, Mask(met_words));
  std::vector<char> is_bad(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int m : cycles[i].metabolites) met_masks[i].set(m);
    is_bad[i] = cycles[i].bad;
  }

  const int words = (n + 63) / 64;
  std::vector<Mask> adjacency(n, Mask(words));
  for (int i = 0; i < n; ++i) {
    adjacency[i].set(i);
    for (int k = i + 1; k < n; ++k) {
      if (met_masks[i].intersects(met_masks[k])) {
        adjacency[i].set(k);
        adjacency[k].set(i);
      }
    }
  }

  Mask all(words);
  for (int i = 0; i < n; ++i) all.set(i);

  SetCounter counter{adjacency, is_bad, words, bound, 0};
  ParityCount total = counter.run(all);
  // The empty set counts as even; completions are the nonempty sets.
  return {total.even - 1, total.odd};
}

Classification classify(const IntMatrix& S, const ChildSelection& sel,
                        uint64_t bound) {
  Classification out;
  out.det = det_exact(reshuffled_minor(S, sel));

  const int m_count = S.rows;
  const int parity = m_count % 2 == 0 ? 1 : -1;
  int s = sgn(out.det);
  out.behavior = s == 0           ? Behavior::zero
                 : s == parity    ? Behavior::good
                                  : Behavior::bad;

  if (!all_unit_coefficients(S)) return out;

  try {
    auto cycles = completion_cycles(build_mr_graph(S), sel, bound);
    auto counts = count_completions(cycles, bound);
    mpz_class lhs = out.det * parity;
    mpz_class rhs = 1;
    rhs += counts.good;
    rhs -= counts.bad;
    if (lhs != rhs)
      fail(errc::internal,
           "determinant does not satisfy the completion identity");
    out.cycles = std::move(cycles);
    out.counts = counts;
  } catch (const Error& e) {
    if (e.code() != errc::combinatorial_blowup) throw;
    out.blowup = true;
  }
  return out;
}

std::optional<Behavior> check_corollary_cases(const IntMatrix& S,
                                              const ChildSelection& sel,
                                              uint64_t bound) {
  if (!all_unit_coefficients(S)) return std::nullopt;

  std::vector<CompletionCycle> cycles;
  try {
    cycles = completion_cycles(build_mr_graph(S), sel, bound);
  } catch (const Error& e) {
    if (e.code() != errc::combinatorial_blowup) throw;
    return std::nullopt;
  }

  if (cycles.empty()) return Behavior::good;
  if (cycles.size() == 1)
    return cycles[0].bad ? Behavior::zero : Behavior::good;
  if (cycles.size() == 2 && cycles[0].bad && cycles[1].bad) {
    std::vector<int> a = cycles[0].metabolites;
    std::vector<int> b = cycles[1].metabolites;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(shared));
    if (!shared.empty()) return Behavior::bad;
  }
  return std::nullopt;
}

}  // namespace rnx
