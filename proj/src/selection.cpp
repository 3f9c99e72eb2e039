// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/selection.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace rnx {

int selection_distance(const ChildSelection& a, const ChildSelection& b) {
  if (a.assignment.size() != b.assignment.size())
    fail(errc::dimension_mismatch,
         "selections cover different metabolite counts");
  int d = 0;
  for (size_t i = 0; i < a.assignment.size(); ++i)
    d += a.assignment[i] != b.assignment[i];
  return d;
}

std::vector<std::vector<int>> constrained_children(
    const ReactionNetwork& net, const SelectionConstraint& constraint) {
  auto children = input_bipartite_graph(net);
  const int m_count = net.metabolite_count();
  const int r_count = net.reaction_count();

  std::set<std::pair<int, int>> forbidden;
  for (auto [m, j] : constraint.forbidden) {
    if (m < 0 || m >= m_count || j < 0 || j >= r_count)
      fail(errc::invalid_argument, "forbidden pair out of range");
    forbidden.emplace(m, j);
  }

  std::map<int, int> forced;
  for (auto [m, j] : constraint.forced) {
    if (m < 0 || m >= m_count || j < 0 || j >= r_count)
      fail(errc::invalid_argument, "forced pair out of range");
    auto [it, fresh] = forced.emplace(m, j);
    if (!fresh && it->second != j)
      fail(errc::constraint_infeasible,
           "metabolite forced to two different reactions");
  }

  std::set<int> forced_reactions;
  for (auto [m, j] : forced) {
    const auto& c = children[m];
    if (!std::binary_search(c.begin(), c.end(), j))
      fail(errc::constraint_infeasible,
           "forced reaction is not a child of the metabolite");
    if (forbidden.count({m, j}))
      fail(errc::constraint_infeasible, "forced pair is also forbidden");
    if (!forced_reactions.insert(j).second)
      fail(errc::constraint_infeasible,
           "two metabolites forced onto the same reaction");
  }

  for (int m = 0; m < m_count; ++m) {
    if (auto it = forced.find(m); it != forced.end()) {
      children[m] = {it->second};
      continue;
    }
    auto& c = children[m];
    c.erase(std::remove_if(c.begin(), c.end(),
                           [&](int j) { return forbidden.count({m, j}) > 0; }),
            c.end());
  }
  return children;
}

SelectionStream::SelectionStream(const ReactionNetwork& net,
                                 const SelectionConstraint& constraint)
    : SelectionStream(net, constraint, 0, 1) {}

SelectionStream::SelectionStream(const ReactionNetwork& net,
                                 const SelectionConstraint& constraint,
                                 int partition, int partitions)
    : met_count_(net.metabolite_count()),
      reaction_count_(net.reaction_count()),
      children_(constrained_children(net, constraint)),
      partition_(partition),
      partitions_(partitions) {
  if (partitions_ < 1 || partition_ < 0 || partition_ >= partitions_)
    fail(errc::invalid_argument, "partition index out of range");

  choice_.assign(met_count_, -1);
  assignment_.assign(met_count_, -1);
  used_.assign(reaction_count_, 0);
  match_met_.assign(met_count_, -1);
  match_rxn_.assign(reaction_count_, -1);
  saved_match_met_.resize(met_count_);
  saved_match_rxn_.resize(met_count_);

  // Root feasibility: a perfect matching of all metabolites must exist.
  for (int m = met_count_ - 1; m >= 0; --m) {
    std::vector<char> visited(reaction_count_, 0);
    if (!augment(m, visited)) {
      exhausted_ = true;
      return;
    }
  }
}

// Kuhn augmenting path for metabolite m over free candidate reactions.
// Mutates the matching only when it succeeds.
bool SelectionStream::augment(int m, std::vector<char>& visited) {
  for (int j : children_[m]) {
    if (used_[j] || visited[j]) continue;
    visited[j] = 1;
    if (match_rxn_[j] == -1 ||
        (match_rxn_[j] > depth_ && augment(match_rxn_[j], visited))) {
      match_rxn_[j] = m;
      match_met_[m] = j;
      return true;
    }
  }
  return false;
}

// Try to fix metabolite depth_ to reaction j, keeping the invariant that
// metabolites > depth_ stay perfectly matched into unused reactions.
bool SelectionStream::descend(int j) {
  saved_match_met_[depth_] = match_met_;
  saved_match_rxn_[depth_] = match_rxn_;

  int displaced = match_rxn_[j];
  if (displaced != -1 && displaced != depth_) {
    // j belongs to a deeper metabolite's matching; free our own reaction
    // and reroute the displaced one.
    int own = match_met_[depth_];
    match_met_[depth_] = -1;
    if (own != -1) match_rxn_[own] = -1;
    match_rxn_[j] = -1;
    match_met_[displaced] = -1;
    used_[j] = 1;
    std::vector<char> visited(reaction_count_, 0);
    if (!augment(displaced, visited)) {
      used_[j] = 0;
      match_met_ = saved_match_met_[depth_];
      match_rxn_ = saved_match_rxn_[depth_];
      return false;
    }
  } else {
    int own = match_met_[depth_];
    if (own != -1 && own != j) match_rxn_[own] = -1;
    match_met_[depth_] = -1;
    match_rxn_[j] = -1;
    used_[j] = 1;
  }

  assignment_[depth_] = j;
  ++depth_;
  if (depth_ < met_count_) choice_[depth_] = -1;
  return true;
}

void SelectionStream::backtrack() {
  --depth_;
  int j = assignment_[depth_];
  used_[j] = 0;
  assignment_[depth_] = -1;
  match_met_ = saved_match_met_[depth_];
  match_rxn_ = saved_match_rxn_[depth_];
}

std::optional<ChildSelection> SelectionStream::next() {
  if (exhausted_) return std::nullopt;

  if (!started_) {
    started_ = true;
    if (met_count_ == 0) {
      exhausted_ = true;
      if (partition_ == 0) return ChildSelection{};
      return std::nullopt;
    }
    choice_[0] = -1;
  } else {
    backtrack();
  }

  while (true) {
    const auto& cand = children_[depth_];
    int next_choice = ++choice_[depth_];
    bool advanced = false;
    for (int k = next_choice; k < static_cast<int>(cand.size()); ++k) {
      choice_[depth_] = k;
      if (depth_ == 0 && k % partitions_ != partition_) continue;
      int j = cand[k];
      if (used_[j]) continue;
      if (!descend(j)) continue;
      advanced = true;
      break;
    }

    if (!advanced) {
      if (depth_ == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      backtrack();
      continue;
    }

    if (depth_ == met_count_) return ChildSelection{assignment_};
  }
}

void enumerate_child_selections(
    const ReactionNetwork& net, const SelectionConstraint& constraint,
    const std::function<bool(const ChildSelection&)>& yield) {
  SelectionStream stream(net, constraint);
  while (auto sel = stream.next())
    if (!yield(*sel)) return;
}

namespace {

constexpr int kMemoMetaboliteLimit = 25;

struct CountContext {
  const std::vector<std::vector<int>>& children;
  int met_count;
  // Bit id per reaction shared by >= 2 metabolites; -1 for private ones.
  std::vector<int> shared_bit;
  int words = 0;
  // Suffix masks: shared reactions still wanted at depth >= d.
  std::vector<std::vector<uint64_t>> future;
  std::unordered_map<std::string, mpz_class> memo;

  mpz_class count(int depth, std::vector<uint64_t> mask) {
    if (depth == met_count) return 1;
    for (int w = 0; w < words; ++w) mask[w] &= future[depth][w];

    std::string key(reinterpret_cast<const char*>(mask.data()),
                    mask.size() * sizeof(uint64_t));
    key.push_back(static_cast<char>(depth));
    key.push_back(static_cast<char>(depth >> 8));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    mpz_class total = 0;
    for (int j : children[depth]) {
      int bit = shared_bit[j];
      if (bit < 0) {
        total += count(depth + 1, mask);
      } else if (!(mask[bit >> 6] & (uint64_t(1) << (bit & 63)))) {
        auto child_mask = mask;
        child_mask[bit >> 6] |= uint64_t(1) << (bit & 63);
        total += count(depth + 1, std::move(child_mask));
      }
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

mpz_class count_child_selections(const ReactionNetwork& net,
                                 const SelectionConstraint& constraint) {
  auto children = constrained_children(net, constraint);
  const int m_count = net.metabolite_count();

  if (m_count > kMemoMetaboliteLimit) {
    SelectionStream stream(net, constraint);
    mpz_class n = 0;
    while (stream.next()) ++n;
    return n;
  }

  std::vector<int> appearances(net.reaction_count(), 0);
  for (const auto& c : children)
    for (int j : c) ++appearances[j];

  CountContext ctx{children, m_count, {}, 0, {}, {}};
  ctx.shared_bit.assign(net.reaction_count(), -1);
  int bits = 0;
  for (int j = 0; j < net.reaction_count(); ++j)
    if (appearances[j] >= 2) ctx.shared_bit[j] = bits++;
  ctx.words = std::max(1, (bits + 63) / 64);

  ctx.future.assign(m_count + 1, std::vector<uint64_t>(ctx.words, 0));
  for (int d = m_count - 1; d >= 0; --d) {
    ctx.future[d] = ctx.future[d + 1];
    for (int j : children[d]) {
      int bit = ctx.shared_bit[j];
      if (bit >= 0) ctx.future[d][bit >> 6] |= uint64_t(1) << (bit & 63);
    }
  }

  return ctx.count(0, std::vector<uint64_t>(ctx.words, 0));
}

}  // namespace rnx
