// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library strictly through its C surface; nothing here
// links the C++ core directly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "rnx.h"

namespace {

using json = nlohmann::json;

struct StringFree {
  void operator()(char* s) const { rnx_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

struct NetworkFree {
  void operator()(rnx_network* n) const { rnx_network_free(n); }
};
using Network = std::unique_ptr<rnx_network, NetworkFree>;

struct ConstraintFree {
  void operator()(rnx_constraint* c) const { rnx_constraint_free(c); }
};
using Constraint = std::unique_ptr<rnx_constraint, ConstraintFree>;

struct SelectionFree {
  void operator()(rnx_selection* s) const { rnx_selection_free(s); }
};
using Selection = std::unique_ptr<rnx_selection, SelectionFree>;

struct SelectionIterFree {
  void operator()(rnx_selection_iter* it) const { rnx_selection_iter_free(it); }
};
using SelectionIter = std::unique_ptr<rnx_selection_iter, SelectionIterFree>;

struct ClassificationFree {
  void operator()(rnx_classification* c) const { rnx_classification_free(c); }
};
using Classification = std::unique_ptr<rnx_classification, ClassificationFree>;

struct PairFree {
  void operator()(rnx_pair* p) const { rnx_pair_free(p); }
};
using Pair = std::unique_ptr<rnx_pair, PairFree>;

struct PairIterFree {
  void operator()(rnx_pair_iter* it) const { rnx_pair_iter_free(it); }
};
using PairIter = std::unique_ptr<rnx_pair_iter, PairIterFree>;

struct WitnessFree {
  void operator()(rnx_witness* w) const { rnx_witness_free(w); }
};
using Witness = std::unique_ptr<rnx_witness, WitnessFree>;

Network parse(const char* text) {
  rnx_network* raw = nullptr;
  REQUIRE(rnx_network_parse(text, &raw) == RNX_OK);
  REQUIRE(raw != nullptr);
  return Network(raw);
}

Network parse_data_file(const std::string& name) {
  std::string path = std::string(RNX_DATA_DIR) + "/" + name;
  rnx_network* raw = nullptr;
  REQUIRE(rnx_network_parse_file(path.c_str(), &raw) == RNX_OK);
  REQUIRE(raw != nullptr);
  return Network(raw);
}

std::vector<Selection> drain(const rnx_network* net,
                             const rnx_constraint* constraint) {
  rnx_selection_iter* raw = nullptr;
  REQUIRE(rnx_selection_iter_new(net, constraint, &raw) == RNX_OK);
  SelectionIter it(raw);
  std::vector<Selection> out;
  while (true) {
    rnx_selection* sel = nullptr;
    REQUIRE(rnx_selection_iter_next(it.get(), &sel) == RNX_OK);
    if (!sel) break;
    out.emplace_back(sel);
  }
  return out;
}

const char* kExampleOne = "j1: A -> B + C\nj2: B -> C\nj3: C -> A\n";

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(rnx_status_name(RNX_OK)) == "ok");
  CHECK(std::string(rnx_status_name(RNX_ERR_SYNTAX)) == "syntax");
  CHECK(std::string(rnx_status_name(RNX_ERR_COMBINATORIAL_BLOWUP)) ==
        "combinatorial-blowup");
  CHECK(std::string(rnx_status_name(RNX_ERR_WITNESS_NOT_FOUND)) ==
        "witness-not-found");
  CHECK(std::string(rnx_status_name(static_cast<rnx_status>(99))) ==
        "unknown");
}

TEST_CASE("network accessors") {
  Network net = parse("j: A + 2 B -> C\nf: -> A\nd: C ->\nw: B <-> C\n");

  CHECK(rnx_network_metabolite_count(net.get()) == 3);
  CHECK(rnx_network_reaction_count(net.get()) == 5);
  CHECK(rnx_network_feed_count(net.get()) == 1);
  CHECK(rnx_network_exit_count(net.get()) == 1);
  CHECK(rnx_network_unit_coefficients(net.get()) == 0);

  CHECK(std::string(rnx_network_metabolite_label(net.get(), 0)) == "A");
  CHECK(std::string(rnx_network_reaction_label(net.get(), 3)) == "w_f");
  CHECK(rnx_network_metabolite_label(net.get(), 3) == nullptr);
  CHECK(rnx_network_reaction_label(net.get(), -1) == nullptr);

  CHECK(rnx_network_metabolite_index(net.get(), "B") == 1);
  CHECK(rnx_network_metabolite_index(net.get(), "missing") == -1);
  CHECK(rnx_network_metabolite_index(net.get(), nullptr) == -1);
  CHECK(rnx_network_reaction_index(net.get(), "w_b") == 4);

  CHECK(rnx_network_stoich(net.get(), 1, 0) == -2);
  CHECK(rnx_network_stoich(net.get(), 2, 0) == 1);
  CHECK(rnx_network_stoich(net.get(), 0, 1) == 1);
  CHECK(rnx_network_stoich(net.get(), 5, 0) == 0);
  CHECK(rnx_network_stoich(net.get(), 0, 9) == 0);

  char* text = nullptr;
  REQUIRE(rnx_network_serialize(net.get(), &text) == RNX_OK);
  CString serialized(text);
  Network again = parse(serialized.get());
  CHECK(rnx_network_metabolite_count(again.get()) == 3);
  CHECK(rnx_network_reaction_count(again.get()) == 5);
  CHECK(rnx_network_stoich(again.get(), 1, 0) == -2);
}

TEST_CASE("parse errors carry status, message, and line") {
  rnx_network* raw = reinterpret_cast<rnx_network*>(0x1);
  CHECK(rnx_network_parse("j: A -> B\nk: B -> + A\n", &raw) == RNX_ERR_SYNTAX);
  CHECK(raw == nullptr);
  CHECK(rnx_last_error_line() == 2);
  CHECK(std::string(rnx_last_error()).find("empty term") != std::string::npos);

  CHECK(rnx_network_parse("j: A -> A\n", &raw) == RNX_ERR_AUTOCATALYSIS);
  CHECK(rnx_network_parse("j: A ->\nj: A ->\n", &raw) ==
        RNX_ERR_DUPLICATE_LABEL);
  CHECK(rnx_network_parse("j: ->\n", &raw) == RNX_ERR_EMPTY_REACTION);

  // A successful call clears the thread's error state.
  Network ok = parse("j: A ->\n");
  CHECK(std::string(rnx_last_error()).empty());
  CHECK(rnx_last_error_line() == 0);
}

TEST_CASE("file parsing") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");
  CHECK(rnx_network_metabolite_count(net.get()) == 8);
  CHECK(rnx_network_reaction_count(net.get()) == 9);

  rnx_network* raw = nullptr;
  CHECK(rnx_network_parse_file("/nonexistent/net.rn", &raw) == RNX_ERR_IO);
  CHECK(raw == nullptr);
}

TEST_CASE("network json shape") {
  Network net = parse(kExampleOne);
  char* raw = nullptr;
  REQUIRE(rnx_network_to_json(net.get(), &raw) == RNX_OK);
  CString s(raw);
  json j = json::parse(s.get());

  CHECK(j["metabolites"] == json::array({"A", "B", "C"}));
  REQUIRE(j["reactions"].size() == 3);
  CHECK(j["reactions"][0]["label"] == "j1");
  REQUIRE(j["reactions"][0]["inputs"].size() == 1);
  CHECK(j["reactions"][0]["inputs"][0]["metabolite"] == "A");
  CHECK(j["reactions"][0]["inputs"][0]["coeff"] == 1);
  CHECK(j["reactions"][0]["outputs"].size() == 2);
  CHECK(j["S"] == json({{-1, 0, 1}, {1, -1, 0}, {1, 1, -1}}));
}

TEST_CASE("selection iteration and accessors") {
  Network net = parse(kExampleOne);
  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 1);
  CHECK(rnx_selection_child(sels[0].get(), 0) == 0);
  CHECK(rnx_selection_child(sels[0].get(), 1) == 1);
  CHECK(rnx_selection_child(sels[0].get(), 2) == 2);
  CHECK(rnx_selection_child(sels[0].get(), 3) == -1);
  CHECK(rnx_selection_child(sels[0].get(), -1) == -1);

  char* raw = nullptr;
  REQUIRE(rnx_selection_to_json(net.get(), sels[0].get(), &raw) == RNX_OK);
  CString s(raw);
  json j = json::parse(s.get());
  CHECK(j["assignment"]["A"] == "j1");
  CHECK(j["assignment"]["C"] == "j3");

  // Exhausted iterators keep returning NULL without error.
  rnx_selection_iter* it_raw = nullptr;
  REQUIRE(rnx_selection_iter_new(net.get(), nullptr, &it_raw) == RNX_OK);
  SelectionIter it(it_raw);
  rnx_selection* sel = nullptr;
  REQUIRE(rnx_selection_iter_next(it.get(), &sel) == RNX_OK);
  Selection first(sel);
  REQUIRE(rnx_selection_iter_next(it.get(), &sel) == RNX_OK);
  CHECK(sel == nullptr);
  REQUIRE(rnx_selection_iter_next(it.get(), &sel) == RNX_OK);
  CHECK(sel == nullptr);
}

TEST_CASE("empty network yields the empty selection") {
  Network net = parse("# nothing here\n");
  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 1);
  CHECK(rnx_selection_child(sels[0].get(), 0) == -1);

  char* raw = nullptr;
  REQUIRE(rnx_count_selections(net.get(), nullptr, &raw) == RNX_OK);
  CString count(raw);
  CHECK(std::string(count.get()) == "1");
}

TEST_CASE("selection counting and distance on the metabolic example") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");

  char* raw = nullptr;
  REQUIRE(rnx_count_selections(net.get(), nullptr, &raw) == RNX_OK);
  CString count(raw);
  CHECK(std::string(count.get()) == "2");

  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 2);
  int32_t distance = 0;
  REQUIRE(rnx_selection_distance(sels[0].get(), sels[1].get(), &distance) ==
          RNX_OK);
  CHECK(distance == 1);

  int ict = rnx_network_metabolite_index(net.get(), "ICT");
  CHECK(rnx_selection_child(sels[0].get(), ict) ==
        rnx_network_reaction_index(net.get(), "19"));
  CHECK(rnx_selection_child(sels[1].get(), ict) ==
        rnx_network_reaction_index(net.get(), "26"));
}

TEST_CASE("distance between mismatched selections fails cleanly") {
  Network small = parse("j: A ->\n");
  Network big = parse("j1: A ->\nj2: B ->\n");
  auto s1 = drain(small.get(), nullptr);
  auto s2 = drain(big.get(), nullptr);
  REQUIRE(s1.size() == 1);
  REQUIRE(s2.size() == 1);

  int32_t distance = 7;
  CHECK(rnx_selection_distance(s1[0].get(), s2[0].get(), &distance) ==
        RNX_ERR_DIMENSION_MISMATCH);
  CHECK(distance == -1);
  CHECK(!std::string(rnx_last_error()).empty());
}

TEST_CASE("constraints narrow the stream") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");

  rnx_constraint* c_raw = nullptr;
  REQUIRE(rnx_constraint_new(&c_raw) == RNX_OK);
  Constraint c(c_raw);
  REQUIRE(rnx_constraint_force(c.get(), "ICT", "26") == RNX_OK);

  auto sels = drain(net.get(), c.get());
  REQUIRE(sels.size() == 1);
  int ict = rnx_network_metabolite_index(net.get(), "ICT");
  CHECK(rnx_selection_child(sels[0].get(), ict) ==
        rnx_network_reaction_index(net.get(), "26"));

  char* raw = nullptr;
  REQUIRE(rnx_count_selections(net.get(), c.get(), &raw) == RNX_OK);
  CString count(raw);
  CHECK(std::string(count.get()) == "1");

  Constraint forbid;
  REQUIRE(rnx_constraint_new(&c_raw) == RNX_OK);
  forbid.reset(c_raw);
  REQUIRE(rnx_constraint_forbid(forbid.get(), "ICT", "26") == RNX_OK);
  auto rest = drain(net.get(), forbid.get());
  REQUIRE(rest.size() == 1);
  CHECK(rnx_selection_child(rest[0].get(), ict) ==
        rnx_network_reaction_index(net.get(), "19"));
}

TEST_CASE("constraint errors surface at resolution time") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");

  rnx_constraint* c_raw = nullptr;
  REQUIRE(rnx_constraint_new(&c_raw) == RNX_OK);
  Constraint unknown(c_raw);
  REQUIRE(rnx_constraint_force(unknown.get(), "NotAMetabolite", "19") ==
          RNX_OK);
  rnx_selection_iter* it = nullptr;
  CHECK(rnx_selection_iter_new(net.get(), unknown.get(), &it) ==
        RNX_ERR_INVALID_ARGUMENT);
  CHECK(it == nullptr);

  REQUIRE(rnx_constraint_new(&c_raw) == RNX_OK);
  Constraint infeasible(c_raw);
  // Reaction 18 consumes CIT, not OAA.
  REQUIRE(rnx_constraint_force(infeasible.get(), "OAA", "18") == RNX_OK);
  CHECK(rnx_selection_iter_new(net.get(), infeasible.get(), &it) ==
        RNX_ERR_CONSTRAINT_INFEASIBLE);

  CHECK(rnx_constraint_force(infeasible.get(), nullptr, "18") ==
        RNX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("partitioned iterators slice the stream disjointly") {
  Network net = parse("j1: A ->\nj2: A ->\nj3: A ->\n");

  std::vector<int32_t> children;
  for (int p = 0; p < 2; ++p) {
    rnx_selection_iter* raw = nullptr;
    REQUIRE(rnx_selection_iter_new_partition(net.get(), nullptr, p, 2, &raw) ==
            RNX_OK);
    SelectionIter it(raw);
    while (true) {
      rnx_selection* sel = nullptr;
      REQUIRE(rnx_selection_iter_next(it.get(), &sel) == RNX_OK);
      if (!sel) break;
      Selection s(sel);
      children.push_back(rnx_selection_child(s.get(), 0));
    }
  }
  // Partition 0 takes candidates 0 and 2, partition 1 takes candidate 1.
  CHECK(children == std::vector<int32_t>{0, 2, 1});

  rnx_selection_iter* raw = nullptr;
  CHECK(rnx_selection_iter_new_partition(net.get(), nullptr, 2, 2, &raw) ==
        RNX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("classification of the first worked example") {
  Network net = parse(kExampleOne);
  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 1);

  rnx_classification* cls_raw = nullptr;
  REQUIRE(rnx_classify(net.get(), sels[0].get(), 0, &cls_raw) == RNX_OK);
  Classification cls(cls_raw);

  CHECK(rnx_classification_behavior(cls.get()) == RNX_BEHAVIOR_BAD);
  char* det_raw = nullptr;
  REQUIRE(rnx_classification_det(cls.get(), &det_raw) == RNX_OK);
  CString det(det_raw);
  CHECK(std::string(det.get()) == "1");

  CHECK(rnx_classification_has_counts(cls.get()) == 1);
  CHECK(rnx_classification_good_count(cls.get()) == 0);
  CHECK(rnx_classification_bad_count(cls.get()) == 2);
  CHECK(rnx_classification_blowup(cls.get()) == 0);
  CHECK(rnx_classification_identity(cls.get()) == 1);

  REQUIRE(rnx_classification_cycle_count(cls.get()) == 2);
  CHECK(rnx_classification_cycle_half_length(cls.get(), 0) == 2);
  CHECK(rnx_classification_cycle_half_length(cls.get(), 1) == 3);
  CHECK(rnx_classification_cycle_half_length(cls.get(), 2) == -1);
  CHECK(rnx_classification_cycle_bad(cls.get(), 0) == 1);
  CHECK(rnx_classification_cycle_bad(cls.get(), 1) == 1);
  CHECK(rnx_classification_cycle_bad(cls.get(), 9) == -1);

  int32_t buffer[6] = {0};
  REQUIRE(rnx_classification_cycle_vertices(cls.get(), 0, buffer) == RNX_OK);
  CHECK(buffer[0] == 0);  // A
  CHECK(buffer[1] == 0);  // j1
  CHECK(buffer[2] == 2);  // C
  CHECK(buffer[3] == 2);  // j3
  REQUIRE(rnx_classification_cycle_vertices(cls.get(), 1, buffer) == RNX_OK);
  CHECK(buffer[5] == 2);  // j3 closes the long cycle
  CHECK(rnx_classification_cycle_vertices(cls.get(), 5, buffer) ==
        RNX_ERR_INVALID_ARGUMENT);

  char* json_raw = nullptr;
  REQUIRE(rnx_classification_to_json(net.get(), sels[0].get(), cls.get(),
                                     &json_raw) == RNX_OK);
  CString text(json_raw);
  json j = json::parse(text.get());
  CHECK(j["det"] == 1);
  CHECK(j["behavior"] == "bad");
  CHECK(j["G"] == 0);
  CHECK(j["B"] == 2);
  REQUIRE(j["cycles"].size() == 2);
  CHECK(j["cycles"][0]["vertices"] == json::array({"A", "j1", "C", "j3"}));
  CHECK(j["cycles"][0]["badness"] == "bad");
  CHECK(j["selection"]["assignment"]["B"] == "j2");
}

TEST_CASE("classification under a tight bound reports the blowup") {
  Network net = parse(kExampleOne);
  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 1);

  rnx_classification* cls_raw = nullptr;
  REQUIRE(rnx_classify(net.get(), sels[0].get(), 1, &cls_raw) == RNX_OK);
  Classification cls(cls_raw);

  CHECK(rnx_classification_blowup(cls.get()) == 1);
  CHECK(rnx_classification_has_counts(cls.get()) == 0);
  CHECK(rnx_classification_good_count(cls.get()) == 0);
  CHECK(rnx_classification_identity(cls.get()) == -1);
  CHECK(rnx_classification_cycle_count(cls.get()) == -1);
  CHECK(rnx_classification_cycle_half_length(cls.get(), 0) == -1);
  CHECK(rnx_classification_cycle_bad(cls.get(), 0) == -1);
  int32_t buffer[2];
  CHECK(rnx_classification_cycle_vertices(cls.get(), 0, buffer) ==
        RNX_ERR_INVALID_ARGUMENT);
  CHECK(rnx_classification_behavior(cls.get()) == RNX_BEHAVIOR_BAD);

  char* json_raw = nullptr;
  REQUIRE(rnx_classification_to_json(net.get(), sels[0].get(), cls.get(),
                                     &json_raw) == RNX_OK);
  CString text(json_raw);
  json j = json::parse(text.get());
  CHECK(j["G"].is_null());
  CHECK(j["B"].is_null());
  CHECK(j["cycles"].is_null());
}

TEST_CASE("non-unit networks classify without cycle data") {
  Network net = parse("j: 2 A ->\n");
  auto sels = drain(net.get(), nullptr);
  REQUIRE(sels.size() == 1);

  rnx_classification* cls_raw = nullptr;
  REQUIRE(rnx_classify(net.get(), sels[0].get(), 0, &cls_raw) == RNX_OK);
  Classification cls(cls_raw);

  char* det_raw = nullptr;
  REQUIRE(rnx_classification_det(cls.get(), &det_raw) == RNX_OK);
  CString det(det_raw);
  CHECK(std::string(det.get()) == "-2");
  CHECK(rnx_classification_behavior(cls.get()) == RNX_BEHAVIOR_GOOD);
  CHECK(rnx_classification_has_counts(cls.get()) == 0);
  CHECK(rnx_classification_blowup(cls.get()) == 0);
  CHECK(rnx_classification_identity(cls.get()) == -1);
}

TEST_CASE("classifying a foreign selection fails with dimension mismatch") {
  Network tca = parse_data_file("ecoli_tca_glyoxylate.rn");
  Network small = parse(kExampleOne);
  auto sels = drain(tca.get(), nullptr);
  REQUIRE(sels.size() == 2);

  rnx_classification* cls_raw = nullptr;
  CHECK(rnx_classify(small.get(), sels[0].get(), 0, &cls_raw) ==
        RNX_ERR_DIMENSION_MISMATCH);
  CHECK(cls_raw == nullptr);
}

TEST_CASE("pair iteration on the metabolic example") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");

  rnx_pair_iter* it_raw = nullptr;
  REQUIRE(rnx_pair_iter_new(net.get(), nullptr, 0, &it_raw) == RNX_OK);
  PairIter it(it_raw);

  rnx_pair* pair_raw = nullptr;
  REQUIRE(rnx_pair_iter_next(it.get(), &pair_raw) == RNX_OK);
  REQUIRE(pair_raw != nullptr);
  Pair pair(pair_raw);

  REQUIRE(rnx_pair_iter_next(it.get(), &pair_raw) == RNX_OK);
  CHECK(pair_raw == nullptr);

  CHECK(rnx_pair_pivot(pair.get()) ==
        rnx_network_metabolite_index(net.get(), "ICT"));
  CHECK(rnx_pair_good_child(pair.get()) ==
        rnx_network_reaction_index(net.get(), "19"));
  CHECK(rnx_pair_bad_child(pair.get()) ==
        rnx_network_reaction_index(net.get(), "26"));

  char* raw = nullptr;
  REQUIRE(rnx_pair_coefficient_a(pair.get(), &raw) == RNX_OK);
  CString a(raw);
  CHECK(std::string(a.get()) == "1");
  REQUIRE(rnx_pair_coefficient_b(pair.get(), &raw) == RNX_OK);
  CString b(raw);
  CHECK(std::string(b.get()) == "1");

  rnx_selection* sel_raw = nullptr;
  REQUIRE(rnx_pair_good_selection(pair.get(), &sel_raw) == RNX_OK);
  Selection good(sel_raw);
  REQUIRE(rnx_pair_bad_selection(pair.get(), &sel_raw) == RNX_OK);
  Selection bad(sel_raw);
  int32_t distance = 0;
  REQUIRE(rnx_selection_distance(good.get(), bad.get(), &distance) == RNX_OK);
  CHECK(distance == 1);

  REQUIRE(rnx_pair_xi(net.get(), pair.get(), &raw) == RNX_OK);
  CString xi(raw);
  CHECK(std::string(xi.get()) == "xi = 1*r[19,ICT] - 1*r[26,ICT]");

  REQUIRE(rnx_pair_to_json(net.get(), pair.get(), &raw) == RNX_OK);
  CString text(raw);
  json j = json::parse(text.get());
  CHECK(j["m_b"] == "ICT");
  CHECK(j["j1_child"] == "19");
  CHECK(j["j2_child"] == "26");
  CHECK(j["a"] == 1);
  CHECK(j["b"] == 1);
  CHECK(j["det_j1"] == 1);
  CHECK(j["det_j2"] == -1);
  CHECK(j["xi"] == "xi = 1*r[19,ICT] - 1*r[26,ICT]");
  CHECK(j["j1"]["assignment"]["ICT"] == "19");
  CHECK(j["j2"]["assignment"]["ICT"] == "26");
}

TEST_CASE("single-selection networks have no pairs") {
  Network net = parse(kExampleOne);
  rnx_pair_iter* it_raw = nullptr;
  REQUIRE(rnx_pair_iter_new(net.get(), nullptr, 0, &it_raw) == RNX_OK);
  PairIter it(it_raw);
  rnx_pair* pair_raw = nullptr;
  REQUIRE(rnx_pair_iter_next(it.get(), &pair_raw) == RNX_OK);
  CHECK(pair_raw == nullptr);
}

TEST_CASE("sign witness through the C surface") {
  Network net = parse_data_file("ecoli_tca_glyoxylate.rn");

  rnx_pair_iter* it_raw = nullptr;
  REQUIRE(rnx_pair_iter_new(net.get(), nullptr, 0, &it_raw) == RNX_OK);
  PairIter it(it_raw);
  rnx_pair* pair_raw = nullptr;
  REQUIRE(rnx_pair_iter_next(it.get(), &pair_raw) == RNX_OK);
  REQUIRE(pair_raw != nullptr);
  Pair pair(pair_raw);

  rnx_witness* w_raw = nullptr;
  REQUIRE(rnx_witness_construct(net.get(), pair.get(), 1e-3, &w_raw) == RNX_OK);
  Witness w(w_raw);

  CHECK(rnx_witness_epsilon(w.get()) == 1e-3);
  CHECK(rnx_witness_det_plus(w.get()) > 0.0);
  CHECK(rnx_witness_det_minus(w.get()) < 0.0);

  int ict = rnx_network_metabolite_index(net.get(), "ICT");
  int j19 = rnx_network_reaction_index(net.get(), "19");
  int j26 = rnx_network_reaction_index(net.get(), "26");
  CHECK(rnx_witness_rate(w.get(), 1, j19, ict) == 2.0);
  CHECK(rnx_witness_rate(w.get(), 1, j26, ict) == 1.0);
  CHECK(rnx_witness_rate(w.get(), -1, j19, ict) == 1.0);
  CHECK(rnx_witness_rate(w.get(), -1, j26, ict) == 2.0);
  CHECK(rnx_witness_rate(w.get(), 1, 99, ict) == 0.0);
  CHECK(rnx_witness_rate(w.get(), 1, j19, -2) == 0.0);

  char* raw = nullptr;
  REQUIRE(rnx_witness_to_json(net.get(), w.get(), &raw) == RNX_OK);
  CString text(raw);
  json j = json::parse(text.get());
  CHECK(j["epsilon"] == 1e-3);
  CHECK(j["det_plus"].get<double>() > 0.0);
  CHECK(j["det_minus"].get<double>() < 0.0);
  REQUIRE(j["rates_plus"].is_array());
  CHECK(!j["rates_plus"].empty());
  for (const auto& entry : j["rates_plus"]) {
    CHECK(entry.contains("reaction"));
    CHECK(entry.contains("metabolite"));
    CHECK(entry["value"].get<double>() > 0.0);
  }

  rnx_witness* bad_raw = nullptr;
  CHECK(rnx_witness_construct(net.get(), pair.get(), 0.0, &bad_raw) ==
        RNX_ERR_INVALID_ARGUMENT);
  CHECK(bad_raw == nullptr);
  CHECK(rnx_witness_construct(net.get(), pair.get(), 1.5, &bad_raw) ==
        RNX_ERR_INVALID_ARGUMENT);
}
