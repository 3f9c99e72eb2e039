// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/bifurcation.hpp"

#include <Eigen/Dense>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "rnx/algebra.hpp"

namespace rnx {

RateDerivatives RateDerivatives::uniform(const IntMatrix& S, double value) {
  if (value <= 0.0)
    fail(errc::domain_mismatch, "rate derivatives must be positive");
  RateDerivatives r(S.rows, S.cols);
  for (int m = 0; m < S.rows; ++m)
    for (int j = 0; j < S.cols; ++j)
      if (S.at(m, j) < 0) r.set(j, m, value);
  return r;
}

void RateDerivatives::set(int reaction, int metabolite, double value) {
  if (reaction < 0 || reaction >= rxn_count_ || metabolite < 0 ||
      metabolite >= met_count_)
    fail(errc::domain_mismatch, "rate entry out of range");
  if (value <= 0.0)
    fail(errc::domain_mismatch, "rate derivatives must be positive");
  values_[static_cast<size_t>(reaction) * met_count_ + metabolite] = value;
}

bool RateDerivatives::matches_support(const IntMatrix& S) const {
  if (S.rows != met_count_ || S.cols != rxn_count_) return false;
  for (int m = 0; m < S.rows; ++m)
    for (int j = 0; j < S.cols; ++j)
      if ((S.at(m, j) < 0) != (at(j, m) > 0.0)) return false;
  return true;
}

namespace {

void require_support(const IntMatrix& S, const RateDerivatives& rates) {
  if (!rates.matches_support(S))
    fail(errc::domain_mismatch,
         "rate derivatives do not cover the input support of the matrix");
}

}  // namespace

double jacobian_det_numeric(const IntMatrix& S, const RateDerivatives& rates) {
  require_support(S, rates);
  const int m_count = S.rows;
  const int r_count = S.cols;
  if (m_count == 0) return 1.0;

  Eigen::MatrixXd Sd(m_count, r_count), Rd(r_count, m_count);
  for (int m = 0; m < m_count; ++m)
    for (int j = 0; j < r_count; ++j) {
      Sd(m, j) = static_cast<double>(S.at(m, j));
      Rd(j, m) = rates.at(j, m);
    }
  Eigen::MatrixXd G = Sd * Rd;
  return G.partialPivLu().determinant();
}

double jacobian_det_cauchy_binet(const IntMatrix& S,
                                 const RateDerivatives& rates,
                                 SelectionStream& stream) {
  require_support(S, rates);
  double total = 0.0;
  while (auto sel = stream.next()) {
    double term = det_exact(reshuffled_minor(S, *sel)).get_d();
    for (int m = 0; m < S.rows; ++m) term *= rates.at(sel->assignment[m], m);
    total += term;
  }
  return total;
}

namespace {

Behavior det_behavior(const mpz_class& det, int m_count) {
  int parity = m_count % 2 == 0 ? 1 : -1;
  int s = sgn(det);
  if (s == 0) return Behavior::zero;
  return s == parity ? Behavior::good : Behavior::bad;
}

}  // namespace

void find_bifurcation_pairs(
    const ReactionNetwork& net, const SelectionConstraint& constraint,
    uint64_t budget,
    const std::function<bool(const BifurcationPair&)>& yield) {
  const IntMatrix S = stoichiometric_matrix(net);
  const auto children = constrained_children(net, constraint);
  const int m_count = net.metabolite_count();

  std::set<std::vector<int>> seen;
  SelectionStream stream(net, constraint);
  uint64_t enumerated = 0;

  while (auto sel = stream.next()) {
    if (budget != 0 && ++enumerated > budget) break;

    mpz_class det = det_exact(reshuffled_minor(S, *sel));
    Behavior behavior = det_behavior(det, m_count);
    if (behavior == Behavior::zero) continue;

    std::vector<char> used(net.reaction_count(), 0);
    for (int j : sel->assignment) used[j] = 1;

    for (int m = 0; m < m_count; ++m) {
      for (int j : children[m]) {
        if (j == sel->assignment[m] || used[j]) continue;

        ChildSelection other = *sel;
        other.assignment[m] = j;
        mpz_class det_other = det_exact(reshuffled_minor(S, other));
        Behavior behavior_other = det_behavior(det_other, m_count);
        if (behavior_other == Behavior::zero ||
            behavior_other == behavior)
          continue;

        const bool first_good = behavior == Behavior::good;
        const ChildSelection& good = first_good ? *sel : other;
        const ChildSelection& bad = first_good ? other : *sel;
        const mpz_class& dg = first_good ? det : det_other;
        const mpz_class& db = first_good ? det_other : det;

        std::vector<int> key = good.assignment;
        key.insert(key.end(), bad.assignment.begin(), bad.assignment.end());
        if (!seen.insert(std::move(key)).second) continue;

        BifurcationPair pair;
        pair.good_sel = good;
        pair.bad_sel = bad;
        pair.pivot = m;
        pair.a = abs(dg);
        pair.b = abs(db);
        pair.det_good = dg;
        pair.det_bad = db;
        if (!yield(pair)) return;
      }
    }
  }
}

SignChangeWitness construct_sign_witness(const ReactionNetwork& net,
                                         const BifurcationPair& pair,
                                         double epsilon) {
  if (!(epsilon > 0.0) || epsilon >= 1.0)
    fail(errc::invalid_argument, "epsilon must lie in (0, 1)");

  const IntMatrix S = stoichiometric_matrix(net);
  const int m_count = net.metabolite_count();
  if (static_cast<int>(pair.good_sel.assignment.size()) != m_count ||
      static_cast<int>(pair.bad_sel.assignment.size()) != m_count)
    fail(errc::dimension_mismatch, "pair does not match the network");
  if (selection_distance(pair.good_sel, pair.bad_sel) != 1 ||
      pair.good_sel.assignment[pair.pivot] ==
          pair.bad_sel.assignment[pair.pivot])
    fail(errc::invalid_argument, "pair members must differ exactly at the pivot");

  const int mb = pair.pivot;
  const int j_good = pair.good_sel.assignment[mb];
  const int j_bad = pair.bad_sel.assignment[mb];
  const double a = pair.a.get_d();
  const double b = pair.b.get_d();
  if (a <= 0.0 || b <= 0.0)
    fail(errc::invalid_argument, "pair coefficients must be nonzero");

  // xi = a * r[j_good, mb] - b * r[j_bad, mb]; pick rates with xi = +1 and
  // xi = -1, never the degenerate midpoint xi = 0.
  const double r_good_plus = (1.0 + b) / a;
  const double r_bad_plus = 1.0;
  const double r_good_minus = 1.0;
  const double r_bad_minus = (1.0 + a) / b;

  const int expected = m_count % 2 == 0 ? 1 : -1;
  double eps = epsilon;
  for (int attempt = 0; attempt <= 6; ++attempt, eps /= 10.0) {
    auto make = [&](double r_good, double r_bad) {
      RateDerivatives r = RateDerivatives::uniform(S, eps);
      for (int m = 0; m < m_count; ++m)
        if (m != mb) r.set(pair.good_sel.assignment[m], m, 1.0);
      r.set(j_good, mb, r_good);
      r.set(j_bad, mb, r_bad);
      return r;
    };

    RateDerivatives plus = make(r_good_plus, r_bad_plus);
    RateDerivatives minus = make(r_good_minus, r_bad_minus);
    double det_plus = jacobian_det_numeric(S, plus);
    double det_minus = jacobian_det_numeric(S, minus);

    bool straddles = det_plus * det_minus < 0.0;
    bool oriented = (det_plus > 0.0) == (expected > 0);
    if (straddles && oriented)
      return {std::move(plus), std::move(minus), det_plus, det_minus, eps};
  }

  fail(errc::witness_not_found,
       "pair terms never dominated down to epsilon = " +
           std::to_string(eps * 10.0));
}

}  // namespace rnx
