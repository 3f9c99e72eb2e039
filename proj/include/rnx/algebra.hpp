// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <vector>

#include "rnx/network.hpp"
#include "rnx/selection.hpp"

namespace rnx {

// M x M minor of S whose column m is column sel(m) of S.  Validates that the
// selection is injective, in range, and that every diagonal entry is
// strictly negative (each metabolite an input of its child).
IntMatrix reshuffled_minor(const IntMatrix& S, const ChildSelection& sel);

// Exact determinant via fraction-free Bareiss elimination.  Runs on int64
// with 128-bit intermediates while the Hadamard bound stays below 2^62 and
// switches to arbitrary precision beyond that.  det of the 0 x 0 matrix is 1.
mpz_class det_exact(const IntMatrix& A);

// One nonzero Leibniz term: sgn(pi) * prod_m A[pi(m)][m], with the cycle
// decomposition of pi restricted to cycles of length > 1.  Cycles are
// canonical: smallest member first, following m -> pi(m).
struct LeibnizTerm {
  std::vector<int> permutation;
  std::vector<std::vector<int>> cycles;
  mpz_class value;
};

struct LeibnizExpansion {
  mpz_class det;
  std::vector<LeibnizTerm> terms;
};

// Full permutation expansion, reference oracle for small matrices.
// Throws too-large above 9 rows.
LeibnizExpansion leibniz_oracle(const IntMatrix& A);

}  // namespace rnx
