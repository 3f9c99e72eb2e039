// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rnx/errors.hpp"

namespace rnx {

struct Metabolite {
  std::string label;
  int index = 0;
};

// One stoichiometric term: a metabolite index with a positive integer
// multiplicity.
struct Term {
  int metabolite = 0;
  long long coeff = 1;
};

struct Reaction {
  std::string label;
  int index = 0;
  std::vector<Term> inputs;
  std::vector<Term> outputs;

  bool is_feed() const { return inputs.empty(); }
  bool is_exit() const { return outputs.empty(); }
};

// Input to build_network: reactions over metabolite labels.  Coefficients
// must be positive; a label may not appear twice on a side or on both sides.
struct ReactionDraft {
  std::string label;
  std::vector<std::pair<std::string, long long>> inputs;
  std::vector<std::pair<std::string, long long>> outputs;
};

// Immutable after construction.  Metabolite indices follow first appearance
// in the reaction list (inputs before outputs, reactions in order).
class ReactionNetwork {
 public:
  ReactionNetwork() = default;

  const std::vector<Metabolite>& metabolites() const { return metabolites_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  int metabolite_count() const { return static_cast<int>(metabolites_.size()); }
  int reaction_count() const { return static_cast<int>(reactions_.size()); }
  int feed_count() const;
  int exit_count() const;

  // True iff every stoichiometric coefficient is 1.
  bool unit_coefficients() const { return unit_; }

  // -1 when the label is unknown.
  int metabolite_index(std::string_view label) const;
  int reaction_index(std::string_view label) const;

 private:
  friend ReactionNetwork build_network(const std::vector<ReactionDraft>&);

  std::vector<Metabolite> metabolites_;
  std::vector<Reaction> reactions_;
  std::unordered_map<std::string, int> metabolite_by_label_;
  std::unordered_map<std::string, int> reaction_by_label_;
  bool unit_ = true;
};

ReactionNetwork build_network(const std::vector<ReactionDraft>& drafts);

// Text format, one reaction per line:
//
//   label: side -> side          irreversible
//   label: side <-> side         reversible, split into label_f / label_b
//
// A side is 0 or more `+`-separated terms, each an optional positive integer
// coefficient followed by a metabolite name.  Labels match
// [A-Za-z0-9_][A-Za-z0-9_-]*.  `#` starts a comment; blank lines are
// ignored.  An empty left side is a feed, an empty right side an exit.
ReactionNetwork parse_network(std::string_view text);

// Inverse of parse_network up to whitespace normalisation.
std::string serialize_network(const ReactionNetwork& net);

// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

// S[m][j] = -coeff when m is an input of reaction j, +coeff when an output.
IntMatrix stoichiometric_matrix(const ReactionNetwork& net);

bool all_unit_coefficients(const IntMatrix& S);

// children[m] = reactions that consume m, ascending.
std::vector<std::vector<int>> input_bipartite_graph(const ReactionNetwork& net);

}  // namespace rnx
