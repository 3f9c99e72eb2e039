// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/json_io.hpp"

#include <sstream>

namespace rnx {

namespace {

// Numbers stay JSON numbers while they fit a signed 64-bit value and fall
// back to decimal strings beyond that.
ordered_json big_int(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

}  // namespace

ordered_json network_json(const ReactionNetwork& net) {
  ordered_json j;
  j["metabolites"] = ordered_json::array();
  for (const auto& m : net.metabolites()) j["metabolites"].push_back(m.label);

  j["reactions"] = ordered_json::array();
  for (const auto& r : net.reactions()) {
    ordered_json rj;
    rj["label"] = r.label;
    rj["inputs"] = ordered_json::array();
    for (const auto& t : r.inputs)
      rj["inputs"].push_back({{"metabolite", net.metabolites()[t.metabolite].label},
                              {"coeff", t.coeff}});
    rj["outputs"] = ordered_json::array();
    for (const auto& t : r.outputs)
      rj["outputs"].push_back({{"metabolite", net.metabolites()[t.metabolite].label},
                               {"coeff", t.coeff}});
    j["reactions"].push_back(std::move(rj));
  }

  const IntMatrix S = stoichiometric_matrix(net);
  j["S"] = ordered_json::array();
  for (int m = 0; m < S.rows; ++m) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < S.cols; ++c) row.push_back(S.at(m, c));
    j["S"].push_back(std::move(row));
  }
  return j;
}

ordered_json selection_json(const ReactionNetwork& net,
                            const ChildSelection& sel) {
  ordered_json assignment = ordered_json::object();
  for (size_t m = 0; m < sel.assignment.size(); ++m)
    assignment[net.metabolites()[m].label] =
        net.reactions()[sel.assignment[m]].label;
  return ordered_json{{"assignment", std::move(assignment)}};
}

ordered_json classification_json(const ReactionNetwork& net,
                                 const ChildSelection& sel,
                                 const Classification& cls) {
  ordered_json j;
  j["selection"] = selection_json(net, sel);
  j["det"] = big_int(cls.det);
  j["behavior"] = behavior_name(cls.behavior);
  if (cls.counts) {
    j["G"] = cls.counts->good;
    j["B"] = cls.counts->bad;
  } else {
    j["G"] = nullptr;
    j["B"] = nullptr;
  }
  if (cls.cycles) {
    j["cycles"] = ordered_json::array();
    for (const auto& c : *cls.cycles) {
      ordered_json cj;
      cj["vertices"] = ordered_json::array();
      for (size_t i = 0; i < c.metabolites.size(); ++i) {
        cj["vertices"].push_back(net.metabolites()[c.metabolites[i]].label);
        cj["vertices"].push_back(net.reactions()[c.reactions[i]].label);
      }
      cj["badness"] = c.bad ? "bad" : "good";
      j["cycles"].push_back(std::move(cj));
    }
  } else {
    j["cycles"] = nullptr;
  }
  return j;
}

std::string xi_formula(const ReactionNetwork& net,
                       const BifurcationPair& pair) {
  const auto& mb = net.metabolites()[pair.pivot].label;
  const auto& j1 = net.reactions()[pair.good_sel.assignment[pair.pivot]].label;
  const auto& j2 = net.reactions()[pair.bad_sel.assignment[pair.pivot]].label;
  std::ostringstream out;
  out << "xi = " << pair.a.get_str() << "*r[" << j1 << "," << mb << "] - "
      << pair.b.get_str() << "*r[" << j2 << "," << mb << "]";
  return out.str();
}

ordered_json pair_json(const ReactionNetwork& net,
                       const BifurcationPair& pair) {
  ordered_json j;
  j["m_b"] = net.metabolites()[pair.pivot].label;
  j["j1"] = selection_json(net, pair.good_sel);
  j["j2"] = selection_json(net, pair.bad_sel);
  j["j1_child"] = net.reactions()[pair.good_sel.assignment[pair.pivot]].label;
  j["j2_child"] = net.reactions()[pair.bad_sel.assignment[pair.pivot]].label;
  j["a"] = big_int(pair.a);
  j["b"] = big_int(pair.b);
  j["det_j1"] = big_int(pair.det_good);
  j["det_j2"] = big_int(pair.det_bad);
  j["xi"] = xi_formula(net, pair);
  return j;
}

ordered_json witness_json(const ReactionNetwork& net,
                          const SignChangeWitness& witness) {
  auto rates = [&net](const RateDerivatives& r) {
    ordered_json arr = ordered_json::array();
    for (int j = 0; j < r.reaction_count(); ++j)
      for (int m = 0; m < r.metabolite_count(); ++m)
        if (r.at(j, m) > 0.0)
          arr.push_back({{"reaction", net.reactions()[j].label},
                         {"metabolite", net.metabolites()[m].label},
                         {"value", r.at(j, m)}});
    return arr;
  };

  ordered_json j;
  j["epsilon"] = witness.epsilon;
  j["det_plus"] = witness.det_plus;
  j["det_minus"] = witness.det_minus;
  j["rates_plus"] = rates(witness.rates_plus);
  j["rates_minus"] = rates(witness.rates_minus);
  return j;
}

}  // namespace rnx
