// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end over the C API.  Reports are deterministic:
// worker results are merged and sorted before printing and timing goes to
// stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rnx.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAnalysis = 3;

int exit_code_for(rnx_status status) {
  switch (status) {
    case RNX_OK:
      return kExitOk;
    case RNX_ERR_IO:
      return kExitIo;
    case RNX_ERR_TOO_LARGE:
    case RNX_ERR_COMBINATORIAL_BLOWUP:
    case RNX_ERR_WITNESS_NOT_FOUND:
    case RNX_ERR_NOMEM:
    case RNX_ERR_INTERNAL:
      return kExitAnalysis;
    default:
      return kExitValidation;
  }
}

[[noreturn]] void die(rnx_status status) {
  int line = rnx_last_error_line();
  if (line > 0)
    std::fprintf(stderr, "rnx: line %d: %s\n", line, rnx_last_error());
  else
    std::fprintf(stderr, "rnx: %s\n", rnx_last_error());
  std::exit(exit_code_for(status));
}

void check(rnx_status status) {
  if (status != RNX_OK) die(status);
}

struct StringFree {
  void operator()(char* s) const { rnx_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

std::string take_string(char* s) {
  CString guard(s);
  return std::string(guard.get());
}

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

Network load_network(const std::string& path) {
  rnx_network* raw = nullptr;
  check(rnx_network_parse_file(path.c_str(), &raw));
  return Network(raw);
}

// --force/--forbid values look like metabolite=reaction.
Constraint build_constraint(const std::vector<std::string>& forced,
                            const std::vector<std::string>& forbidden) {
  rnx_constraint* raw = nullptr;
  check(rnx_constraint_new(&raw));
  Constraint c(raw);
  auto apply = [&](const std::vector<std::string>& items, bool force) {
    for (const auto& item : items) {
      size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        std::fprintf(stderr,
                     "rnx: expected metabolite=reaction, got '%s'\n",
                     item.c_str());
        std::exit(kExitValidation);
      }
      std::string met = item.substr(0, eq);
      std::string rxn = item.substr(eq + 1);
      if (force)
        check(rnx_constraint_force(c.get(), met.c_str(), rxn.c_str()));
      else
        check(rnx_constraint_forbid(c.get(), met.c_str(), rxn.c_str()));
    }
  };
  apply(forced, true);
  apply(forbidden, false);
  return c;
}

struct CycleText {
  std::string vertices;
  bool bad = false;
};

struct Record {
  std::vector<int32_t> assignment;
  std::string det;
  rnx_behavior behavior = RNX_BEHAVIOR_ZERO;
  bool has_counts = false;
  uint64_t good = 0;
  uint64_t bad = 0;
  bool blowup = false;
  int identity = -1;
  std::vector<CycleText> cycles;
};

struct Tally {
  uint64_t good = 0;
  uint64_t bad = 0;
  uint64_t zero = 0;
  uint64_t classified = 0;
  uint64_t identity_ok = 0;
  uint64_t identity_unavailable = 0;

  void add(const Tally& o) {
    good += o.good;
    bad += o.bad;
    zero += o.zero;
    classified += o.classified;
    identity_ok += o.identity_ok;
    identity_unavailable += o.identity_unavailable;
  }
};

Record make_record(const rnx_network* net, const rnx_selection* sel,
                   const rnx_classification* cls, bool want_cycles) {
  Record r;
  int32_t m_count = rnx_network_metabolite_count(net);
  r.assignment.resize(m_count);
  for (int32_t m = 0; m < m_count; ++m)
    r.assignment[m] = rnx_selection_child(sel, m);

  char* det = nullptr;
  check(rnx_classification_det(cls, &det));
  r.det = take_string(det);
  r.behavior = rnx_classification_behavior(cls);
  r.has_counts = rnx_classification_has_counts(cls) != 0;
  if (r.has_counts) {
    r.good = rnx_classification_good_count(cls);
    r.bad = rnx_classification_bad_count(cls);
  }
  r.blowup = rnx_classification_blowup(cls) != 0;
  r.identity = rnx_classification_identity(cls);

  if (want_cycles) {
    int32_t n = rnx_classification_cycle_count(cls);
    for (int32_t i = 0; i < n; ++i) {
      int32_t half = rnx_classification_cycle_half_length(cls, i);
      std::vector<int32_t> verts(2 * half);
      check(rnx_classification_cycle_vertices(cls, i, verts.data()));
      CycleText c;
      for (int32_t k = 0; k < half; ++k) {
        c.vertices += rnx_network_metabolite_label(net, verts[2 * k]);
        c.vertices += '-';
        c.vertices += rnx_network_reaction_label(net, verts[2 * k + 1]);
        c.vertices += '-';
      }
      c.vertices += rnx_network_metabolite_label(net, verts[0]);
      c.bad = rnx_classification_cycle_bad(cls, i) == 1;
      r.cycles.push_back(std::move(c));
    }
  }
  return r;
}

void tally_record(Tally& t, const Record& r) {
  ++t.classified;
  switch (r.behavior) {
    case RNX_BEHAVIOR_GOOD: ++t.good; break;
    case RNX_BEHAVIOR_BAD: ++t.bad; break;
    case RNX_BEHAVIOR_ZERO: ++t.zero; break;
  }
  if (r.identity == 1)
    ++t.identity_ok;
  else if (r.identity == -1)
    ++t.identity_unavailable;
}

const char* behavior_text(rnx_behavior b) {
  switch (b) {
    case RNX_BEHAVIOR_GOOD: return "good";
    case RNX_BEHAVIOR_BAD: return "bad";
    case RNX_BEHAVIOR_ZERO: return "zero";
  }
  return "unknown";
}

struct ClassifyOptions {
  std::string path;
  bool json = false;
  bool verbose = false;
  bool check_identity = false;
  uint64_t limit = 0;
  uint64_t completion_bound = 0;
  unsigned threads = 1;
  std::vector<std::string> force;
  std::vector<std::string> forbid;
};

int run_classify(const ClassifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Network net = load_network(opt.path);
  Constraint constraint = build_constraint(opt.force, opt.forbid);

  char* count_raw = nullptr;
  check(rnx_count_selections(net.get(), constraint.get(), &count_raw));
  std::string count = take_string(count_raw);

  const bool keep_records = opt.verbose;
  const unsigned threads = std::max(1u, opt.threads);
  std::vector<Record> records;
  Tally tally;
  bool truncated = false;

  auto classify_one = [&](const rnx_selection* sel) {
    rnx_classification* cls = nullptr;
    check(rnx_classify(net.get(), sel, opt.completion_bound, &cls));
    Record r = make_record(net.get(), sel, cls, keep_records);
    rnx_classification_free(cls);
    return r;
  };

  if (opt.limit > 0) {
    // Deterministic prefix: draw the first `limit` selections in stream
    // order, then classify them across workers.
    std::vector<Selection> drawn;
    rnx_selection_iter* it_raw = nullptr;
    check(rnx_selection_iter_new(net.get(), constraint.get(), &it_raw));
    SelectionIter it(it_raw);
    while (drawn.size() < opt.limit) {
      rnx_selection* sel = nullptr;
      check(rnx_selection_iter_next(it.get(), &sel));
      if (!sel) break;
      drawn.emplace_back(sel);
    }
    {
      rnx_selection* sel = nullptr;
      check(rnx_selection_iter_next(it.get(), &sel));
      if (sel) {
        truncated = true;
        rnx_selection_free(sel);
      }
    }

    std::vector<Record> slots(drawn.size());
    std::vector<std::thread> workers;
    std::atomic<size_t> cursor{0};
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (size_t i = cursor.fetch_add(1); i < drawn.size();
             i = cursor.fetch_add(1))
          slots[i] = classify_one(drawn[i].get());
      });
    }
    for (auto& w : workers) w.join();

    for (auto& r : slots) tally_record(tally, r);
    if (keep_records) records = std::move(slots);
  } else if (threads == 1) {
    rnx_selection_iter* it_raw = nullptr;
    check(rnx_selection_iter_new(net.get(), constraint.get(), &it_raw));
    SelectionIter it(it_raw);
    while (true) {
      rnx_selection* sel_raw = nullptr;
      check(rnx_selection_iter_next(it.get(), &sel_raw));
      if (!sel_raw) break;
      Selection sel(sel_raw);
      Record r = classify_one(sel.get());
      tally_record(tally, r);
      if (keep_records) records.push_back(std::move(r));
    }
  } else {
    std::mutex merge_mutex;
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        rnx_selection_iter* it_raw = nullptr;
        check(rnx_selection_iter_new_partition(net.get(), constraint.get(),
                                               static_cast<int32_t>(t),
                                               static_cast<int32_t>(threads),
                                               &it_raw));
        SelectionIter it(it_raw);
        Tally local;
        std::vector<Record> local_records;
        while (true) {
          rnx_selection* sel_raw = nullptr;
          check(rnx_selection_iter_next(it.get(), &sel_raw));
          if (!sel_raw) break;
          Selection sel(sel_raw);
          Record r = classify_one(sel.get());
          tally_record(local, r);
          if (keep_records) local_records.push_back(std::move(r));
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        tally.add(local);
        for (auto& r : local_records) records.push_back(std::move(r));
      });
    }
    for (auto& w : workers) w.join();
  }

  std::sort(records.begin(), records.end(),
            [](const Record& a, const Record& b) {
              return a.assignment < b.assignment;
            });

  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::fprintf(stderr, "elapsed: %.3f s\n", elapsed);

  if (opt.json) {
    ordered_json out;
    out["metabolites"] = rnx_network_metabolite_count(net.get());
    out["reactions"] = rnx_network_reaction_count(net.get());
    out["count"] = count;
    out["classified"] = tally.classified;
    out["truncated"] = truncated;
    out["tally"] = {{"good", tally.good},
                    {"bad", tally.bad},
                    {"zero", tally.zero}};
    if (opt.check_identity) {
      out["identity"] = {
          {"checked", tally.classified - tally.identity_unavailable},
          {"ok", tally.identity_ok},
          {"unavailable", tally.identity_unavailable}};
    }
    if (opt.verbose) {
      out["selections"] = ordered_json::array();
      for (const auto& r : records) {
        ordered_json sj;
        ordered_json assignment = ordered_json::object();
        for (size_t m = 0; m < r.assignment.size(); ++m)
          assignment[rnx_network_metabolite_label(
              net.get(), static_cast<int32_t>(m))] =
              rnx_network_reaction_label(net.get(), r.assignment[m]);
        sj["selection"] = {{"assignment", std::move(assignment)}};
        sj["det"] = r.det;
        sj["behavior"] = behavior_text(r.behavior);
        if (r.has_counts) {
          sj["G"] = r.good;
          sj["B"] = r.bad;
        } else {
          sj["G"] = nullptr;
          sj["B"] = nullptr;
        }
        ordered_json cycles = ordered_json::array();
        for (const auto& c : r.cycles)
          cycles.push_back({{"vertices", c.vertices},
                            {"badness", c.bad ? "bad" : "good"}});
        sj["cycles"] = std::move(cycles);
        if (r.blowup) sj["blowup"] = true;
        out["selections"].push_back(std::move(sj));
      }
    }
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("network: %d metabolites, %d reactions\n",
                rnx_network_metabolite_count(net.get()),
                rnx_network_reaction_count(net.get()));
    std::printf("child selections: %s\n", count.c_str());
    if (opt.verbose) {
      uint64_t i = 0;
      for (const auto& r : records) {
        std::string text = "{";
        for (size_t m = 0; m < r.assignment.size(); ++m) {
          if (m > 0) text += ", ";
          text += rnx_network_metabolite_label(net.get(), m);
          text += "->";
          text += rnx_network_reaction_label(net.get(), r.assignment[m]);
        }
        text += "}";
        std::printf("selection %" PRIu64 ": %s\n", ++i, text.c_str());
        std::printf("  det = %s  behavior = %s", r.det.c_str(),
                    behavior_text(r.behavior));
        if (r.has_counts)
          std::printf("  G = %" PRIu64 "  B = %" PRIu64, r.good, r.bad);
        if (r.blowup) std::printf("  (completion bound exceeded)");
        std::printf("\n");
        for (const auto& c : r.cycles)
          std::printf("  cycle: %s (%s)\n", c.vertices.c_str(),
                      c.bad ? "bad" : "good");
      }
    }
    if (truncated)
      std::printf("classified: %" PRIu64 " (truncated by --limit)\n",
                  tally.classified);
    else
      std::printf("classified: %" PRIu64 "\n", tally.classified);
    std::printf("tally: good=%" PRIu64 " bad=%" PRIu64 " zero=%" PRIu64 "\n",
                tally.good, tally.bad, tally.zero);
    if (opt.check_identity) {
      if (tally.identity_unavailable > 0)
        std::printf("identity check: %" PRIu64 "/%" PRIu64
                    " ok, %" PRIu64 " unavailable\n",
                    tally.identity_ok,
                    tally.classified - tally.identity_unavailable,
                    tally.identity_unavailable);
      else
        std::printf("identity check: %" PRIu64 "/%" PRIu64 " ok\n",
                    tally.identity_ok, tally.classified);
    }
  }

  if (opt.check_identity) {
    if (tally.identity_unavailable > 0) return kExitAnalysis;
    if (tally.identity_ok != tally.classified) return kExitAnalysis;
  }
  return kExitOk;
}

struct BifurcationOptions {
  std::string path;
  bool json = false;
  uint64_t limit = 0;
  std::optional<double> witness_epsilon;
  std::vector<std::string> force;
  std::vector<std::string> forbid;
};

int run_bifurcations(const BifurcationOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Network net = load_network(opt.path);
  Constraint constraint = build_constraint(opt.force, opt.forbid);

  rnx_pair_iter* it_raw = nullptr;
  check(rnx_pair_iter_new(net.get(), constraint.get(), opt.limit, &it_raw));
  PairIter it(it_raw);

  std::vector<Pair> pairs;
  while (true) {
    rnx_pair* p = nullptr;
    check(rnx_pair_iter_next(it.get(), &p));
    if (!p) break;
    pairs.emplace_back(p);
  }

  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::fprintf(stderr, "elapsed: %.3f s\n", elapsed);

  if (opt.json) {
    ordered_json out;
    out["metabolites"] = rnx_network_metabolite_count(net.get());
    out["reactions"] = rnx_network_reaction_count(net.get());
    out["pairs"] = ordered_json::array();
    for (const auto& p : pairs) {
      char* pj = nullptr;
      check(rnx_pair_to_json(net.get(), p.get(), &pj));
      ordered_json entry = ordered_json::parse(take_string(pj));
      if (opt.witness_epsilon) {
        rnx_witness* w = nullptr;
        check(rnx_witness_construct(net.get(), p.get(), *opt.witness_epsilon,
                                    &w));
        Witness witness(w);
        char* wj = nullptr;
        check(rnx_witness_to_json(net.get(), witness.get(), &wj));
        entry["witness"] = ordered_json::parse(take_string(wj));
      }
      out["pairs"].push_back(std::move(entry));
    }
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("network: %d metabolites, %d reactions\n",
                rnx_network_metabolite_count(net.get()),
                rnx_network_reaction_count(net.get()));
    if (pairs.empty()) {
      std::printf("no pairs found\n");
    } else {
      std::printf("pairs found: %zu\n", pairs.size());
      size_t i = 0;
      for (const auto& p : pairs) {
        int32_t mb = rnx_pair_pivot(p.get());
        const char* mb_label = rnx_network_metabolite_label(net.get(), mb);
        const char* j1 = rnx_network_reaction_label(net.get(),
                                                    rnx_pair_good_child(p.get()));
        const char* j2 = rnx_network_reaction_label(net.get(),
                                                    rnx_pair_bad_child(p.get()));
        char* xi = nullptr;
        check(rnx_pair_xi(net.get(), p.get(), &xi));
        char* a = nullptr;
        char* b = nullptr;
        check(rnx_pair_coefficient_a(p.get(), &a));
        check(rnx_pair_coefficient_b(p.get(), &b));
        std::printf("pair %zu: m_b = %s\n", ++i, mb_label);
        std::printf("  J1(%s) = %s (good, |det| = %s), J2(%s) = %s (bad, |det| = %s)\n",
                    mb_label, j1, take_string(a).c_str(), mb_label, j2,
                    take_string(b).c_str());
        std::printf("  %s\n", take_string(xi).c_str());
        if (opt.witness_epsilon) {
          rnx_witness* w = nullptr;
          check(rnx_witness_construct(net.get(), p.get(),
                                      *opt.witness_epsilon, &w));
          Witness witness(w);
          std::printf("  witness: epsilon = %g, det[xi=+1] = %g, det[xi=-1] = %g\n",
                      rnx_witness_epsilon(witness.get()),
                      rnx_witness_det_plus(witness.get()),
                      rnx_witness_det_minus(witness.get()));
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reaction network structural analysis"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  bool validate_json = false;
  auto* validate = app.add_subcommand(
      "validate", "Parse a network file and report its shape");
  validate->add_option("file", validate_path, "network file")->required();
  validate->add_flag("--json", validate_json, "machine-readable output");

  // classify
  ClassifyOptions copt;
  auto* classify = app.add_subcommand(
      "classify", "Enumerate and classify child selections");
  classify->add_option("file", copt.path, "network file")->required();
  classify->add_flag("--json", copt.json, "machine-readable output");
  classify->add_flag("--verbose", copt.verbose, "per-selection detail");
  classify->add_flag("--check-identity", copt.check_identity,
                     "verify det*(-1)^M == 1+G-B per selection");
  classify->add_option("--limit", copt.limit,
                       "classify only the first N selections");
  classify->add_option("--threads", copt.threads, "worker threads");
  classify->add_option("--completion-bound", copt.completion_bound,
                       "cycle/completion budget (default 10^7)");
  classify->add_option("--force", copt.force,
                       "force metabolite=reaction (repeatable)");
  classify->add_option("--forbid", copt.forbid,
                       "forbid metabolite=reaction (repeatable)");

  // bifurcations
  BifurcationOptions bopt;
  auto* bifurcations = app.add_subcommand(
      "bifurcations", "Locate good/bad selection pairs at distance 1");
  bifurcations->add_option("file", bopt.path, "network file")->required();
  bifurcations->add_flag("--json", bopt.json, "machine-readable output");
  bifurcations->add_option("--limit", bopt.limit,
                           "enumeration budget (0 = unlimited)");
  double witness_eps = 0.0;
  auto* witness_opt = bifurcations->add_option(
      "--witness", witness_eps, "construct sign witnesses at this epsilon");
  bifurcations->add_option("--force", bopt.force,
                           "force metabolite=reaction (repeatable)");
  bifurcations->add_option("--forbid", bopt.forbid,
                           "forbid metabolite=reaction (repeatable)");

  // count
  std::string count_path;
  bool count_json = false;
  std::vector<std::string> count_force, count_forbid;
  auto* count = app.add_subcommand("count", "Count child selections exactly");
  count->add_option("file", count_path, "network file")->required();
  count->add_flag("--json", count_json, "machine-readable output");
  count->add_option("--force", count_force,
                    "force metabolite=reaction (repeatable)");
  count->add_option("--forbid", count_forbid,
                    "forbid metabolite=reaction (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int app_exit = app.exit(e);
    return app_exit == 0 ? 0 : kExitValidation;
  }

  if (validate->parsed()) {
    Network net = load_network(validate_path);
    if (validate_json) {
      char* j = nullptr;
      check(rnx_network_to_json(net.get(), &j));
      std::printf("%s\n", take_string(j).c_str());
    } else {
      std::printf("%d metabolites, %d reactions\n",
                  rnx_network_metabolite_count(net.get()),
                  rnx_network_reaction_count(net.get()));
      std::printf("feeds: %d, exits: %d\n",
                  rnx_network_feed_count(net.get()),
                  rnx_network_exit_count(net.get()));
      std::printf("unit coefficients: %s\n",
                  rnx_network_unit_coefficients(net.get()) ? "yes" : "no");
    }
    return kExitOk;
  }
  if (classify->parsed()) return run_classify(copt);
  if (bifurcations->parsed()) {
    if (witness_opt->count() > 0) bopt.witness_epsilon = witness_eps;
    return run_bifurcations(bopt);
  }
  if (count->parsed()) {
    Network net = load_network(count_path);
    Constraint constraint = build_constraint(count_force, count_forbid);
    char* c = nullptr;
    check(rnx_count_selections(net.get(), constraint.get(), &c));
    std::string value = take_string(c);
    if (count_json) {
      ordered_json out{{"count", value}};
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      std::printf("%s\n", value.c_str());
    }
    return kExitOk;
  }
  return kExitValidation;
}
