// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "rnx/algebra.hpp"
#include "rnx/network.hpp"
#include "rnx/selection.hpp"

namespace rnx {

// Signed bipartite incidence structure: one edge per nonzero S entry,
// negative for inputs, positive for outputs.
struct MREdge {
  int metabolite = 0;
  int reaction = 0;
  int sign = 0;
};

struct MRGraph {
  int metabolite_count = 0;
  int reaction_count = 0;
  std::vector<MREdge> edges;
};

MRGraph build_mr_graph(const ReactionNetwork& net);
MRGraph build_mr_graph(const IntMatrix& S);

// Alternating cycle through a selection: vertex sequence
// m_0, sel(m_0), m_1, sel(m_1), ..., closing back to m_0, where each
// (m_i, sel(m_i)) edge is selected and each (sel(m_i), m_{i+1}) edge is not.
// Canonical form starts at the smallest metabolite index.  A cycle is bad
// when its non-selected edges carry an even number of negative signs.
struct CompletionCycle {
  std::vector<int> metabolites;
  std::vector<int> reactions;
  bool bad = false;

  size_t half_length() const { return metabolites.size(); }
};

inline constexpr uint64_t kDefaultCompletionBound = 10000000;

// All completion cycles of the selection, each exactly once, sorted by
// (length, metabolite sequence).  Equivalent to the simple directed cycles
// of the digraph on metabolites with an arc m -> m' whenever
// S[m'][sel(m)] != 0 and m' != m.  Throws combinatorial-blowup when the
// cycle count or the search work exceeds the bound.
std::vector<CompletionCycle> completion_cycles(
    const MRGraph& g, const ChildSelection& sel,
    uint64_t bound = kDefaultCompletionBound);

struct CompletionCounts {
  uint64_t good = 0;
  uint64_t bad = 0;
};

// Counts nonempty sets of pairwise vertex-disjoint cycles by parity of bad
// members, via independent sets of the cycle conflict graph.  Throws
// combinatorial-blowup past the bound.
CompletionCounts count_completions(const std::vector<CompletionCycle>& cycles,
                                   uint64_t bound = kDefaultCompletionBound);

enum class Behavior { good, bad, zero };

const char* behavior_name(Behavior b);

// det(S^sel), its sign class against (-1)^M, and, for unit-coefficient
// networks, the completion-cycle picture.  counts and cycles are absent when
// coefficients are not all unit or when the bound was exceeded (blowup is
// then set and the determinant still reported).  When counts are present the
// identity det * (-1)^M == 1 + good - bad has been checked.
struct Classification {
  mpz_class det;
  Behavior behavior = Behavior::zero;
  std::optional<std::vector<CompletionCycle>> cycles;
  std::optional<CompletionCounts> counts;
  bool blowup = false;
};

Classification classify(const IntMatrix& S, const ChildSelection& sel,
                        uint64_t bound = kDefaultCompletionBound);

// Structural shortcuts for unit-coefficient networks:
//   no cycle                                -> good
//   a single cycle, good                    -> good
//   a single cycle, bad                     -> zero
//   exactly two bad cycles sharing a vertex -> bad
// nullopt when no case applies, coefficients are not unit, or the cycle
// search exceeds the bound.
std::optional<Behavior> check_corollary_cases(
    const IntMatrix& S, const ChildSelection& sel,
    uint64_t bound = kDefaultCompletionBound);

}  // namespace rnx
