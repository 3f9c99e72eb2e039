// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rnx/network.hpp"

namespace rnx {

// Injective assignment metabolite -> consuming reaction, one entry per
// metabolite in index order.
struct ChildSelection {
  std::vector<int> assignment;

  bool operator==(const ChildSelection&) const = default;
};

// Hamming distance between assignments.  Throws dimension-mismatch when the
// selections come from networks of different size.
int selection_distance(const ChildSelection& a, const ChildSelection& b);

struct SelectionConstraint {
  std::vector<std::pair<int, int>> forced;
  std::vector<std::pair<int, int>> forbidden;

  void force(int metabolite, int reaction) {
    forced.emplace_back(metabolite, reaction);
  }
  void forbid(int metabolite, int reaction) {
    forbidden.emplace_back(metabolite, reaction);
  }
};

// Streaming enumerator.  Yields every Child Selection satisfying the
// constraint exactly once, in lexicographic order of the assignment vector.
//
// Backtracking runs over metabolites in index order and maintains a perfect
// matching of the unassigned metabolites into unused reactions, so a branch
// is abandoned as soon as it cannot complete.  Construction throws
// constraint-infeasible when forced pairs contradict each other, name a
// non-child reaction, collide with a forbidden pair, or reuse a reaction;
// a constraint that is merely unsatisfiable yields an empty stream.
//
// The partitioned form covers the slice of selections whose first
// metabolite takes child number k, k % partitions == partition; partitions
// are pairwise disjoint and jointly exhaustive, so independent streams can
// run in parallel.
class SelectionStream {
 public:
  explicit SelectionStream(const ReactionNetwork& net,
                           const SelectionConstraint& constraint = {});
  SelectionStream(const ReactionNetwork& net,
                  const SelectionConstraint& constraint, int partition,
                  int partitions);

  std::optional<ChildSelection> next();

 private:
  bool descend(int j);
  void backtrack();
  bool augment(int m, std::vector<char>& visited);

  int met_count_ = 0;
  int reaction_count_ = 0;
  std::vector<std::vector<int>> children_;
  int partition_ = 0;
  int partitions_ = 1;

  int depth_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
  std::vector<int> choice_;
  std::vector<int> assignment_;
  std::vector<char> used_;
  std::vector<int> match_met_;
  std::vector<int> match_rxn_;
  std::vector<std::vector<int>> saved_match_met_;
  std::vector<std::vector<int>> saved_match_rxn_;
};

// Convenience wrapper over SelectionStream; stops early when the callback
// returns false.
void enumerate_child_selections(
    const ReactionNetwork& net, const SelectionConstraint& constraint,
    const std::function<bool(const ChildSelection&)>& yield);

// Exact count of the selections the stream would produce.  Uses a
// frontier-memoized DFS (keyed by the used reactions that still matter to
// deeper metabolites) for networks up to 25 metabolites and falls back to
// streaming beyond that.
mpz_class count_child_selections(const ReactionNetwork& net,
                                 const SelectionConstraint& constraint = {});

// children[m] filtered by the constraint: forced metabolites keep a single
// candidate, forbidden pairs are removed.  Shared validation for the stream
// and the counter; throws constraint-infeasible.
std::vector<std::vector<int>> constrained_children(
    const ReactionNetwork& net, const SelectionConstraint& constraint);

}  // namespace rnx
