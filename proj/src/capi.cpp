// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rnx/bifurcation.hpp"
#include "rnx/cycles.hpp"
#include "rnx/json_io.hpp"
#include "rnx/network.hpp"
#include "rnx/selection.hpp"

namespace {

thread_local std::string g_last_error;
thread_local int g_last_line = 0;

rnx_status map_code(rnx::errc code) {
  switch (code) {
    case rnx::errc::io: return RNX_ERR_IO;
    case rnx::errc::syntax: return RNX_ERR_SYNTAX;
    case rnx::errc::autocatalysis: return RNX_ERR_AUTOCATALYSIS;
    case rnx::errc::duplicate_label: return RNX_ERR_DUPLICATE_LABEL;
    case rnx::errc::empty_reaction: return RNX_ERR_EMPTY_REACTION;
    case rnx::errc::constraint_infeasible: return RNX_ERR_CONSTRAINT_INFEASIBLE;
    case rnx::errc::dimension_mismatch: return RNX_ERR_DIMENSION_MISMATCH;
    case rnx::errc::too_large: return RNX_ERR_TOO_LARGE;
    case rnx::errc::combinatorial_blowup: return RNX_ERR_COMBINATORIAL_BLOWUP;
    case rnx::errc::domain_mismatch: return RNX_ERR_DOMAIN_MISMATCH;
    case rnx::errc::witness_not_found: return RNX_ERR_WITNESS_NOT_FOUND;
    case rnx::errc::invalid_argument: return RNX_ERR_INVALID_ARGUMENT;
    case rnx::errc::internal: return RNX_ERR_INTERNAL;
  }
  return RNX_ERR_INTERNAL;
}

template <class F>
rnx_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    g_last_line = 0;
    return RNX_OK;
  } catch (const rnx::Error& e) {
    g_last_error = e.what();
    g_last_line = e.line();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    g_last_line = 0;
    return RNX_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    g_last_line = 0;
    return RNX_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct rnx_network {
  rnx::ReactionNetwork net;
  rnx::IntMatrix S;
};

struct rnx_constraint {
  std::vector<std::pair<std::string, std::string>> forced;
  std::vector<std::pair<std::string, std::string>> forbidden;
};

struct rnx_selection {
  rnx::ChildSelection sel;
};

struct rnx_selection_iter {
  rnx::SelectionStream stream;
};

struct rnx_classification {
  rnx::Classification cls;
  int metabolite_count = 0;
};

struct rnx_pair {
  rnx::BifurcationPair pair;
};

struct rnx_pair_iter {
  std::vector<rnx::BifurcationPair> pairs;
  size_t cursor = 0;
};

struct rnx_witness {
  rnx::SignChangeWitness witness;
};

namespace {

// Label-level constraints resolve against a concrete network here.
rnx::SelectionConstraint resolve(const rnx_network* net,
                                 const rnx_constraint* c) {
  rnx::SelectionConstraint out;
  if (!c) return out;
  auto lookup = [net](const std::string& met, const std::string& rxn) {
    int m = net->net.metabolite_index(met);
    if (m < 0)
      rnx::fail(rnx::errc::invalid_argument,
                "unknown metabolite '" + met + "'");
    int j = net->net.reaction_index(rxn);
    if (j < 0)
      rnx::fail(rnx::errc::invalid_argument, "unknown reaction '" + rxn + "'");
    return std::make_pair(m, j);
  };
  for (const auto& [met, rxn] : c->forced) {
    auto [m, j] = lookup(met, rxn);
    out.force(m, j);
  }
  for (const auto& [met, rxn] : c->forbidden) {
    auto [m, j] = lookup(met, rxn);
    out.forbid(m, j);
  }
  return out;
}

}  // namespace

extern "C" {

const char* rnx_status_name(rnx_status status) {
  switch (status) {
    case RNX_OK: return "ok";
    case RNX_ERR_IO: return "io";
    case RNX_ERR_SYNTAX: return "syntax";
    case RNX_ERR_AUTOCATALYSIS: return "autocatalysis";
    case RNX_ERR_DUPLICATE_LABEL: return "duplicate-label";
    case RNX_ERR_EMPTY_REACTION: return "empty-reaction";
    case RNX_ERR_CONSTRAINT_INFEASIBLE: return "constraint-infeasible";
    case RNX_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case RNX_ERR_TOO_LARGE: return "too-large";
    case RNX_ERR_COMBINATORIAL_BLOWUP: return "combinatorial-blowup";
    case RNX_ERR_DOMAIN_MISMATCH: return "domain-mismatch";
    case RNX_ERR_WITNESS_NOT_FOUND: return "witness-not-found";
    case RNX_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case RNX_ERR_NOMEM: return "out-of-memory";
    case RNX_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rnx_last_error(void) { return g_last_error.c_str(); }

int rnx_last_error_line(void) { return g_last_line; }

void rnx_string_free(char* s) { ::operator delete(s); }

rnx_status rnx_network_parse(const char* text, rnx_network** out) {
  *out = nullptr;
  return guarded([&] {
    auto net = rnx::parse_network(text ? text : "");
    auto S = rnx::stoichiometric_matrix(net);
    *out = new rnx_network{std::move(net), std::move(S)};
  });
}

rnx_status rnx_network_parse_file(const char* path, rnx_network** out) {
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path ? path : "");
    if (!in)
      rnx::fail(rnx::errc::io,
                std::string("cannot read file '") + (path ? path : "") + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto net = rnx::parse_network(buf.str());
    auto S = rnx::stoichiometric_matrix(net);
    *out = new rnx_network{std::move(net), std::move(S)};
  });
}

void rnx_network_free(rnx_network* net) { delete net; }

int32_t rnx_network_metabolite_count(const rnx_network* net) {
  return net->net.metabolite_count();
}

int32_t rnx_network_reaction_count(const rnx_network* net) {
  return net->net.reaction_count();
}

int32_t rnx_network_feed_count(const rnx_network* net) {
  return net->net.feed_count();
}

int32_t rnx_network_exit_count(const rnx_network* net) {
  return net->net.exit_count();
}

int rnx_network_unit_coefficients(const rnx_network* net) {
  return net->net.unit_coefficients() ? 1 : 0;
}

const char* rnx_network_metabolite_label(const rnx_network* net,
                                         int32_t metabolite) {
  if (metabolite < 0 || metabolite >= net->net.metabolite_count())
    return nullptr;
  return net->net.metabolites()[metabolite].label.c_str();
}

const char* rnx_network_reaction_label(const rnx_network* net,
                                       int32_t reaction) {
  if (reaction < 0 || reaction >= net->net.reaction_count()) return nullptr;
  return net->net.reactions()[reaction].label.c_str();
}

int32_t rnx_network_metabolite_index(const rnx_network* net,
                                     const char* label) {
  return label ? net->net.metabolite_index(label) : -1;
}

int32_t rnx_network_reaction_index(const rnx_network* net, const char* label) {
  return label ? net->net.reaction_index(label) : -1;
}

int64_t rnx_network_stoich(const rnx_network* net, int32_t metabolite,
                           int32_t reaction) {
  if (metabolite < 0 || metabolite >= net->S.rows || reaction < 0 ||
      reaction >= net->S.cols)
    return 0;
  return net->S.at(metabolite, reaction);
}

rnx_status rnx_network_serialize(const rnx_network* net, char** out) {
  *out = nullptr;
  return guarded([&] { *out = dup_string(rnx::serialize_network(net->net)); });
}

rnx_status rnx_network_to_json(const rnx_network* net, char** out) {
  *out = nullptr;
  return guarded([&] { *out = dup_string(rnx::network_json(net->net).dump()); });
}

rnx_status rnx_constraint_new(rnx_constraint** out) {
  *out = nullptr;
  return guarded([&] { *out = new rnx_constraint(); });
}

void rnx_constraint_free(rnx_constraint* c) { delete c; }

rnx_status rnx_constraint_force(rnx_constraint* c, const char* metabolite,
                                const char* reaction) {
  return guarded([&] {
    if (!metabolite || !reaction)
      rnx::fail(rnx::errc::invalid_argument, "null label");
    c->forced.emplace_back(metabolite, reaction);
  });
}

rnx_status rnx_constraint_forbid(rnx_constraint* c, const char* metabolite,
                                 const char* reaction) {
  return guarded([&] {
    if (!metabolite || !reaction)
      rnx::fail(rnx::errc::invalid_argument, "null label");
    c->forbidden.emplace_back(metabolite, reaction);
  });
}

rnx_status rnx_selection_iter_new(const rnx_network* net,
                                  const rnx_constraint* constraint,
                                  rnx_selection_iter** out) {
  return rnx_selection_iter_new_partition(net, constraint, 0, 1, out);
}

rnx_status rnx_selection_iter_new_partition(const rnx_network* net,
                                            const rnx_constraint* constraint,
                                            int32_t partition,
                                            int32_t partitions,
                                            rnx_selection_iter** out) {
  *out = nullptr;
  return guarded([&] {
    *out = new rnx_selection_iter{rnx::SelectionStream(
        net->net, resolve(net, constraint), partition, partitions)};
  });
}

rnx_status rnx_selection_iter_next(rnx_selection_iter* it,
                                   rnx_selection** out) {
  *out = nullptr;
  return guarded([&] {
    if (auto sel = it->stream.next())
      *out = new rnx_selection{std::move(*sel)};
  });
}

void rnx_selection_iter_free(rnx_selection_iter* it) { delete it; }

void rnx_selection_free(rnx_selection* sel) { delete sel; }

int32_t rnx_selection_child(const rnx_selection* sel, int32_t metabolite) {
  if (metabolite < 0 ||
      metabolite >= static_cast<int32_t>(sel->sel.assignment.size()))
    return -1;
  return sel->sel.assignment[metabolite];
}

rnx_status rnx_selection_distance(const rnx_selection* a,
                                  const rnx_selection* b, int32_t* out) {
  *out = -1;
  return guarded([&] { *out = rnx::selection_distance(a->sel, b->sel); });
}

rnx_status rnx_selection_to_json(const rnx_network* net,
                                 const rnx_selection* sel, char** out) {
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(rnx::selection_json(net->net, sel->sel).dump()); });
}

rnx_status rnx_count_selections(const rnx_network* net,
                                const rnx_constraint* constraint, char** out) {
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(
        rnx::count_child_selections(net->net, resolve(net, constraint))
            .get_str());
  });
}

rnx_status rnx_classify(const rnx_network* net, const rnx_selection* sel,
                        uint64_t completion_bound, rnx_classification** out) {
  *out = nullptr;
  return guarded([&] {
    uint64_t bound =
        completion_bound ? completion_bound : rnx::kDefaultCompletionBound;
    *out = new rnx_classification{rnx::classify(net->S, sel->sel, bound),
                                  net->S.rows};
  });
}

void rnx_classification_free(rnx_classification* cls) { delete cls; }

rnx_behavior rnx_classification_behavior(const rnx_classification* cls) {
  switch (cls->cls.behavior) {
    case rnx::Behavior::good: return RNX_BEHAVIOR_GOOD;
    case rnx::Behavior::bad: return RNX_BEHAVIOR_BAD;
    case rnx::Behavior::zero: return RNX_BEHAVIOR_ZERO;
  }
  return RNX_BEHAVIOR_ZERO;
}

rnx_status rnx_classification_det(const rnx_classification* cls, char** out) {
  *out = nullptr;
  return guarded([&] { *out = dup_string(cls->cls.det.get_str()); });
}

int rnx_classification_has_counts(const rnx_classification* cls) {
  return cls->cls.counts ? 1 : 0;
}

uint64_t rnx_classification_good_count(const rnx_classification* cls) {
  return cls->cls.counts ? cls->cls.counts->good : 0;
}

uint64_t rnx_classification_bad_count(const rnx_classification* cls) {
  return cls->cls.counts ? cls->cls.counts->bad : 0;
}

int rnx_classification_blowup(const rnx_classification* cls) {
  return cls->cls.blowup ? 1 : 0;
}

int rnx_classification_identity(const rnx_classification* cls) {
  if (!cls->cls.counts) return -1;
  mpz_class lhs = cls->cls.det;
  if (cls->metabolite_count % 2 != 0) lhs = -lhs;
  mpz_class rhs = 1;
  rhs += cls->cls.counts->good;
  rhs -= cls->cls.counts->bad;
  return lhs == rhs ? 1 : 0;
}

int32_t rnx_classification_cycle_count(const rnx_classification* cls) {
  if (!cls->cls.cycles) return -1;
  return static_cast<int32_t>(cls->cls.cycles->size());
}

int32_t rnx_classification_cycle_half_length(const rnx_classification* cls,
                                             int32_t cycle) {
  if (!cls->cls.cycles || cycle < 0 ||
      cycle >= static_cast<int32_t>(cls->cls.cycles->size()))
    return -1;
  return static_cast<int32_t>((*cls->cls.cycles)[cycle].half_length());
}

rnx_status rnx_classification_cycle_vertices(const rnx_classification* cls,
                                             int32_t cycle, int32_t* buffer) {
  return guarded([&] {
    if (!cls->cls.cycles || cycle < 0 ||
        cycle >= static_cast<int32_t>(cls->cls.cycles->size()))
      rnx::fail(rnx::errc::invalid_argument, "cycle index out of range");
    const auto& c = (*cls->cls.cycles)[cycle];
    for (size_t i = 0; i < c.metabolites.size(); ++i) {
      buffer[2 * i] = c.metabolites[i];
      buffer[2 * i + 1] = c.reactions[i];
    }
  });
}

int rnx_classification_cycle_bad(const rnx_classification* cls,
                                 int32_t cycle) {
  if (!cls->cls.cycles || cycle < 0 ||
      cycle >= static_cast<int32_t>(cls->cls.cycles->size()))
    return -1;
  return (*cls->cls.cycles)[cycle].bad ? 1 : 0;
}

rnx_status rnx_classification_to_json(const rnx_network* net,
                                      const rnx_selection* sel,
                                      const rnx_classification* cls,
                                      char** out) {
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(
        rnx::classification_json(net->net, sel->sel, cls->cls).dump());
  });
}

rnx_status rnx_pair_iter_new(const rnx_network* net,
                             const rnx_constraint* constraint, uint64_t budget,
                             rnx_pair_iter** out) {
  *out = nullptr;
  return guarded([&] {
    auto it = std::make_unique<rnx_pair_iter>();
    rnx::find_bifurcation_pairs(net->net, resolve(net, constraint), budget,
                                [&](const rnx::BifurcationPair& p) {
                                  it->pairs.push_back(p);
                                  return true;
                                });
    *out = it.release();
  });
}

rnx_status rnx_pair_iter_next(rnx_pair_iter* it, rnx_pair** out) {
  *out = nullptr;
  return guarded([&] {
    if (it->cursor < it->pairs.size())
      *out = new rnx_pair{it->pairs[it->cursor++]};
  });
}

void rnx_pair_iter_free(rnx_pair_iter* it) { delete it; }

void rnx_pair_free(rnx_pair* pair) { delete pair; }

int32_t rnx_pair_pivot(const rnx_pair* pair) { return pair->pair.pivot; }

int32_t rnx_pair_good_child(const rnx_pair* pair) {
  return pair->pair.good_sel.assignment[pair->pair.pivot];
}

int32_t rnx_pair_bad_child(const rnx_pair* pair) {
  return pair->pair.bad_sel.assignment[pair->pair.pivot];
}

rnx_status rnx_pair_coefficient_a(const rnx_pair* pair, char** out) {
  *out = nullptr;
  return guarded([&] { *out = dup_string(pair->pair.a.get_str()); });
}

rnx_status rnx_pair_coefficient_b(const rnx_pair* pair, char** out) {
  *out = nullptr;
  return guarded([&] { *out = dup_string(pair->pair.b.get_str()); });
}

rnx_status rnx_pair_good_selection(const rnx_pair* pair, rnx_selection** out) {
  *out = nullptr;
  return guarded([&] { *out = new rnx_selection{pair->pair.good_sel}; });
}

rnx_status rnx_pair_bad_selection(const rnx_pair* pair, rnx_selection** out) {
  *out = nullptr;
  return guarded([&] { *out = new rnx_selection{pair->pair.bad_sel}; });
}

rnx_status rnx_pair_xi(const rnx_network* net, const rnx_pair* pair,
                       char** out) {
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(rnx::xi_formula(net->net, pair->pair)); });
}

rnx_status rnx_pair_to_json(const rnx_network* net, const rnx_pair* pair,
                            char** out) {
  *out = nullptr;
  return guarded(
      [&] { *out = dup_string(rnx::pair_json(net->net, pair->pair).dump()); });
}

rnx_status rnx_witness_construct(const rnx_network* net, const rnx_pair* pair,
                                 double epsilon, rnx_witness** out) {
  *out = nullptr;
  return guarded([&] {
    *out = new rnx_witness{
        rnx::construct_sign_witness(net->net, pair->pair, epsilon)};
  });
}

void rnx_witness_free(rnx_witness* w) { delete w; }

double rnx_witness_det_plus(const rnx_witness* w) {
  return w->witness.det_plus;
}

double rnx_witness_det_minus(const rnx_witness* w) {
  return w->witness.det_minus;
}

double rnx_witness_epsilon(const rnx_witness* w) { return w->witness.epsilon; }

double rnx_witness_rate(const rnx_witness* w, int side, int32_t reaction,
                        int32_t metabolite) {
  const rnx::RateDerivatives& r =
      side > 0 ? w->witness.rates_plus : w->witness.rates_minus;
  if (reaction < 0 || reaction >= r.reaction_count() || metabolite < 0 ||
      metabolite >= r.metabolite_count())
    return 0.0;
  return r.at(reaction, metabolite);
}

rnx_status rnx_witness_to_json(const rnx_network* net, const rnx_witness* w,
                               char** out) {
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(rnx::witness_json(net->net, w->witness).dump());
  });
}

}  // extern "C"
