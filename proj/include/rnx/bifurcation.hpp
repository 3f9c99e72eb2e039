// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "rnx/cycles.hpp"
#include "rnx/network.hpp"
#include "rnx/selection.hpp"

namespace rnx {

// Positive kinetic derivatives r[j][m], one per input pair of the
// stoichiometric matrix (S[m][j] < 0) and zero elsewhere.  Operations
// consuming a rate map check that its support matches the matrix and throw
// domain-mismatch otherwise.
class RateDerivatives {
 public:
  RateDerivatives(int metabolite_count, int reaction_count)
      : met_count_(metabolite_count),
        rxn_count_(reaction_count),
        values_(static_cast<size_t>(metabolite_count) * reaction_count, 0.0) {}

  static RateDerivatives uniform(const IntMatrix& S, double value);

  int metabolite_count() const { return met_count_; }
  int reaction_count() const { return rxn_count_; }

  double at(int reaction, int metabolite) const {
    return values_[static_cast<size_t>(reaction) * met_count_ + metabolite];
  }
  void set(int reaction, int metabolite, double value);

  // True iff positive entries sit exactly on the input support of S.
  bool matches_support(const IntMatrix& S) const;

 private:
  int met_count_ = 0;
  int rxn_count_ = 0;
  std::vector<double> values_;
};

// det(S * R) through floating-point LU.
double jacobian_det_numeric(const IntMatrix& S, const RateDerivatives& rates);

// Same determinant as the sum over the streamed selections of
// det(S^sel) * prod_m r[sel(m)][m].  Consumes the stream.
double jacobian_det_cauchy_binet(const IntMatrix& S,
                                 const RateDerivatives& rates,
                                 SelectionStream& stream);

// Two selections at Hamming distance 1, one good and one bad, pivoting at
// metabolite m_b.  a and b are |det| of the good and bad minors.
struct BifurcationPair {
  ChildSelection good_sel;
  ChildSelection bad_sel;
  int pivot = 0;
  mpz_class a;
  mpz_class b;
  mpz_class det_good;
  mpz_class det_bad;
};

// Scans the selection stream and probes every single-metabolite swap of
// each enumerated selection, so a pair is found even when only one member
// falls inside the budget (0 = unlimited).  Each unordered pair is emitted
// once; the callback may return false to stop early.
void find_bifurcation_pairs(
    const ReactionNetwork& net, const SelectionConstraint& constraint,
    uint64_t budget,
    const std::function<bool(const BifurcationPair&)>& yield);

// Rate maps on either side of the hyperplane a * r1 = b * r2: shared
// selected pairs at 1, the two pivot rates solving xi = +1 and xi = -1, and
// every other support rate at epsilon.  Retries with epsilon/10, up to six
// times, until the two numeric determinants straddle zero; throws
// witness-not-found when dominance never materialises.
struct SignChangeWitness {
  RateDerivatives rates_plus;
  RateDerivatives rates_minus;
  double det_plus = 0.0;
  double det_minus = 0.0;
  double epsilon = 0.0;
};

SignChangeWitness construct_sign_witness(const ReactionNetwork& net,
                                         const BifurcationPair& pair,
                                         double epsilon);

}  // namespace rnx
