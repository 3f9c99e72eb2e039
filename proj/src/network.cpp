// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/network.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace rnx {

namespace {

constexpr long long kMaxCoefficient = 1000000000000LL;

bool label_head(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_label(std::string_view s) {
  if (s.empty() || !label_head(s[0])) return false;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!label_head(s[i]) && s[i] != '-') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> whitespace_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::pair<std::string, long long>> parse_side(std::string_view side,
                                                          int line) {
  std::vector<std::pair<std::string, long long>> terms;
  side = trim(side);
  if (side.empty()) return terms;

  size_t pos = 0;
  while (pos <= side.size()) {
    size_t plus = side.find('+', pos);
    std::string_view raw = side.substr(
        pos, plus == std::string_view::npos ? std::string_view::npos
                                            : plus - pos);
    std::string_view term = trim(raw);
    if (term.empty())
      fail(errc::syntax, "empty term in reaction side", line);

    auto tokens = whitespace_tokens(term);
    long long coeff = 1;
    std::string_view name;
    if (tokens.size() == 1) {
      name = tokens[0];
    } else if (tokens.size() == 2) {
      std::string_view num = tokens[0];
      auto digits = std::all_of(num.begin(), num.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (!digits)
        fail(errc::syntax,
             "coefficient must be a positive decimal integer, got '" +
                 std::string(num) + "'",
             line);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(),
                                     coeff);
      if (ec != std::errc() || p != num.data() + num.size() || coeff <= 0 ||
          coeff > kMaxCoefficient)
        fail(errc::syntax,
             "coefficient out of range: '" + std::string(num) + "'", line);
      name = tokens[1];
    } else {
      fail(errc::syntax,
           "term must be [coefficient] metabolite, got '" + std::string(term) +
               "'",
           line);
    }
    if (!valid_label(name))
      fail(errc::syntax, "invalid metabolite name '" + std::string(name) + "'",
           line);
    terms.emplace_back(std::string(name), coeff);

    if (plus == std::string_view::npos) break;
    pos = plus + 1;
    if (pos > side.size() || trim(side.substr(pos)).empty())
      fail(errc::syntax, "trailing '+' in reaction side", line);
  }
  return terms;
}

// Side-local and cross-side label checks, with line info when available.
void check_reaction_terms(const ReactionDraft& d, int line) {
  std::set<std::string> seen_in, seen_out;
  for (const auto& [name, coeff] : d.inputs) {
    if (coeff <= 0)
      fail(errc::invalid_argument,
           "coefficient must be positive for '" + name + "'", line);
    if (!valid_label(name))
      fail(errc::syntax, "invalid metabolite name '" + name + "'", line);
    if (!seen_in.insert(name).second)
      fail(errc::duplicate_label,
           "metabolite '" + name + "' listed twice among inputs of '" +
               d.label + "'",
           line);
  }
  for (const auto& [name, coeff] : d.outputs) {
    if (coeff <= 0)
      fail(errc::invalid_argument,
           "coefficient must be positive for '" + name + "'", line);
    if (!valid_label(name))
      fail(errc::syntax, "invalid metabolite name '" + name + "'", line);
    if (!seen_out.insert(name).second)
      fail(errc::duplicate_label,
           "metabolite '" + name + "' listed twice among outputs of '" +
               d.label + "'",
           line);
  }
  for (const auto& name : seen_in) {
    if (seen_out.count(name))
      fail(errc::autocatalysis,
           "metabolite '" + name + "' appears on both sides of '" + d.label +
               "'; explicit autocatalysis is not supported",
           line);
  }
  if (d.inputs.empty() && d.outputs.empty())
    fail(errc::empty_reaction, "reaction '" + d.label + "' has no terms",
         line);
  if (!valid_label(d.label))
    fail(errc::syntax, "invalid reaction label '" + d.label + "'", line);
}

}  // namespace

const char* errc_name(errc c) {
  switch (c) {
    case errc::io: return "io";
    case errc::syntax: return "syntax";
    case errc::autocatalysis: return "autocatalysis";
    case errc::duplicate_label: return "duplicate-label";
    case errc::empty_reaction: return "empty-reaction";
    case errc::constraint_infeasible: return "constraint-infeasible";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::too_large: return "too-large";
    case errc::combinatorial_blowup: return "combinatorial-blowup";
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::witness_not_found: return "witness-not-found";
    case errc::invalid_argument: return "invalid-argument";
    case errc::internal: return "internal";
  }
  return "unknown";
}

int ReactionNetwork::feed_count() const {
  int n = 0;
  for (const auto& r : reactions_) n += r.is_feed();
  return n;
}

int ReactionNetwork::exit_count() const {
  int n = 0;
  for (const auto& r : reactions_) n += r.is_exit();
  return n;
}

int ReactionNetwork::metabolite_index(std::string_view label) const {
  auto it = metabolite_by_label_.find(std::string(label));
  return it == metabolite_by_label_.end() ? -1 : it->second;
}

int ReactionNetwork::reaction_index(std::string_view label) const {
  auto it = reaction_by_label_.find(std::string(label));
  return it == reaction_by_label_.end() ? -1 : it->second;
}

ReactionNetwork build_network(const std::vector<ReactionDraft>& drafts) {
  ReactionNetwork net;
  auto intern = [&net](const std::string& label) {
    auto it = net.metabolite_by_label_.find(label);
    if (it != net.metabolite_by_label_.end()) return it->second;
    int idx = static_cast<int>(net.metabolites_.size());
    net.metabolites_.push_back({label, idx});
    net.metabolite_by_label_.emplace(label, idx);
    return idx;
  };

  for (const auto& d : drafts) {
    check_reaction_terms(d, 0);
    if (net.reaction_by_label_.count(d.label))
      fail(errc::duplicate_label, "duplicate reaction label '" + d.label + "'");

    Reaction r;
    r.label = d.label;
    r.index = static_cast<int>(net.reactions_.size());
    for (const auto& [name, coeff] : d.inputs) {
      r.inputs.push_back({intern(name), coeff});
      if (coeff != 1) net.unit_ = false;
    }
    for (const auto& [name, coeff] : d.outputs) {
      r.outputs.push_back({intern(name), coeff});
      if (coeff != 1) net.unit_ = false;
    }
    net.reaction_by_label_.emplace(r.label, r.index);
    net.reactions_.push_back(std::move(r));
  }
  return net;
}

ReactionNetwork parse_network(std::string_view text) {
  std::vector<ReactionDraft> drafts;
  std::vector<int> draft_lines;
  std::unordered_map<std::string, int> label_lines;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);

    if (!line.empty()) {
      size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        fail(errc::syntax, "expected 'label: side -> side'", line_no);
      std::string label(trim(line.substr(0, colon)));
      if (!valid_label(label))
        fail(errc::syntax, "invalid reaction label '" + label + "'", line_no);

      std::string_view body = line.substr(colon + 1);
      bool reversible = false;
      size_t arrow = body.find("<->");
      size_t arrow_len = 3;
      if (arrow != std::string_view::npos) {
        reversible = true;
      } else {
        arrow = body.find("->");
        arrow_len = 2;
      }
      if (arrow == std::string_view::npos)
        fail(errc::syntax, "missing '->' in reaction '" + label + "'",
             line_no);

      auto lhs = parse_side(body.substr(0, arrow), line_no);
      auto rhs = parse_side(body.substr(arrow + arrow_len), line_no);

      auto add = [&](std::string lbl,
                     std::vector<std::pair<std::string, long long>> in,
                     std::vector<std::pair<std::string, long long>> out) {
        if (auto it = label_lines.find(lbl); it != label_lines.end())
          fail(errc::duplicate_label,
               "duplicate reaction label '" + lbl + "' (first used on line " +
                   std::to_string(it->second) + ")",
               line_no);
        label_lines.emplace(lbl, line_no);
        ReactionDraft d{std::move(lbl), std::move(in), std::move(out)};
        check_reaction_terms(d, line_no);
        drafts.push_back(std::move(d));
        draft_lines.push_back(line_no);
      };

      if (reversible) {
        add(label + "_f", lhs, rhs);
        add(label + "_b", rhs, lhs);
      } else {
        add(label, std::move(lhs), std::move(rhs));
      }
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  return build_network(drafts);
}

std::string serialize_network(const ReactionNetwork& net) {
  std::ostringstream out;
  auto side = [&net, &out](const std::vector<Term>& terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
      out << ' ';
      if (i > 0) out << "+ ";
      if (terms[i].coeff != 1) out << terms[i].coeff << ' ';
      out << net.metabolites()[terms[i].metabolite].label;
    }
  };
  for (const auto& r : net.reactions()) {
    out << r.label << ':';
    side(r.inputs);
    out << " ->";
    side(r.outputs);
    out << '\n';
  }
  return out.str();
}

IntMatrix stoichiometric_matrix(const ReactionNetwork& net) {
  IntMatrix S(net.metabolite_count(), net.reaction_count());
  for (const auto& r : net.reactions()) {
    for (const auto& t : r.inputs) S.at(t.metabolite, r.index) = -t.coeff;
    for (const auto& t : r.outputs) S.at(t.metabolite, r.index) = t.coeff;
  }
  return S;
}

bool all_unit_coefficients(const IntMatrix& S) {
  return std::all_of(S.a.begin(), S.a.end(), [](long long v) {
    return v == 0 || v == 1 || v == -1;
  });
}

std::vector<std::vector<int>> input_bipartite_graph(
    const ReactionNetwork& net) {
  std::vector<std::vector<int>> children(net.metabolite_count());
  for (const auto& r : net.reactions())
    for (const auto& t : r.inputs) children[t.metabolite].push_back(r.index);
  for (auto& c : children) std::sort(c.begin(), c.end());
  return children;
}

}  // namespace rnx
