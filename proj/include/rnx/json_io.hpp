// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>

#include "rnx/bifurcation.hpp"
#include "rnx/cycles.hpp"
#include "rnx/network.hpp"
#include "rnx/selection.hpp"

namespace rnx {

using ordered_json = nlohmann::ordered_json;

// {"metabolites": [...], "reactions": [{"label", "inputs", "outputs"}], "S": [[...]]}
ordered_json network_json(const ReactionNetwork& net);

// {"assignment": {"A": "j1", ...}}
ordered_json selection_json(const ReactionNetwork& net,
                            const ChildSelection& sel);

// {"selection", "det", "behavior", "G", "B", "cycles"}; counts and cycles
// are null when unavailable.
ordered_json classification_json(const ReactionNetwork& net,
                                 const ChildSelection& sel,
                                 const Classification& cls);

// {"m_b", "j1_child", "j2_child", "a", "b", "det_j1", "det_j2", "xi"}
ordered_json pair_json(const ReactionNetwork& net, const BifurcationPair& pair);

// Human-readable form, e.g. "xi = 1*r[19,ICT] - 1*r[26,ICT]".
std::string xi_formula(const ReactionNetwork& net, const BifurcationPair& pair);

// {"epsilon", "det_plus", "det_minus", "rates_plus", "rates_minus"}; rates
// as [{"reaction", "metabolite", "value"}] sorted by reaction then
// metabolite.
ordered_json witness_json(const ReactionNetwork& net,
                          const SignChangeWitness& witness);

}  // namespace rnx
