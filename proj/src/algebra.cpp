// Copyright 2026 the rnx authors
// SPDX-License-Identifier: Apache-2.0

#include "rnx/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rnx {

IntMatrix reshuffled_minor(const IntMatrix& S, const ChildSelection& sel) {
  const int m_count = S.rows;
  if (static_cast<int>(sel.assignment.size()) != m_count)
    fail(errc::dimension_mismatch,
         "selection covers " + std::to_string(sel.assignment.size()) +
             " metabolites, matrix has " + std::to_string(m_count) + " rows");

  std::vector<char> used(S.cols, 0);
  for (int m = 0; m < m_count; ++m) {
    int j = sel.assignment[m];
    if (j < 0 || j >= S.cols)
      fail(errc::invalid_argument, "selected reaction out of range");
    if (used[j])
      fail(errc::invalid_argument, "selection reuses a reaction column");
    used[j] = 1;
    if (S.at(m, j) >= 0)
      fail(errc::invalid_argument,
           "metabolite " + std::to_string(m) +
               " is not an input of its selected reaction");
  }

  IntMatrix A(m_count, m_count);
  for (int c = 0; c < m_count; ++c)
    for (int r = 0; r < m_count; ++r)
      A.at(r, c) = S.at(r, sel.assignment[c]);
  return A;
}

namespace {

// Fraction-free elimination; every division is exact.
template <class T>
T bareiss(std::vector<T> m, int n) {
  int sign = 1;
  T prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r * n + k] != 0) {
          p = r;
          break;
        }
      }
      if (p < 0) return T(0);
      for (int c = k; c < n; ++c) std::swap(m[k * n + c], m[p * n + c]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        if constexpr (std::is_same_v<T, long long>) {
          __int128 num = static_cast<__int128>(m[r * n + c]) * m[k * n + k] -
                         static_cast<__int128>(m[r * n + k]) * m[k * n + c];
          m[r * n + c] = static_cast<long long>(num / prev);
        } else {
          m[r * n + c] =
              (m[r * n + c] * m[k * n + k] - m[r * n + k] * m[k * n + c]) /
              prev;
        }
      }
      m[r * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  T det = m[(n - 1) * n + (n - 1)];
  return sign > 0 ? det : T(-det);
}

}  // namespace

mpz_class det_exact(const IntMatrix& A) {
  if (A.rows != A.cols)
    fail(errc::invalid_argument, "determinant requires a square matrix");
  const int n = A.rows;
  if (n == 0) return 1;

  // Hadamard bound over rows decides whether int64 suffices.
  double bound = 1.0;
  for (int r = 0; r < n; ++r) {
    double s = 0.0;
    for (int c = 0; c < n; ++c) {
      double v = static_cast<double>(A.at(r, c));
      s += v * v;
    }
    bound *= std::sqrt(std::max(1.0, s));
  }

  if (bound < 4.0e18) {
    std::vector<long long> m(A.a.begin(), A.a.end());
    return mpz_class(static_cast<long>(bareiss<long long>(std::move(m), n)));
  }
  std::vector<mpz_class> m;
  m.reserve(A.a.size());
  for (long long v : A.a) m.emplace_back(static_cast<long>(v));
  return bareiss<mpz_class>(std::move(m), n);
}

LeibnizExpansion leibniz_oracle(const IntMatrix& A) {
  if (A.rows != A.cols)
    fail(errc::invalid_argument, "determinant requires a square matrix");
  const int n = A.rows;
  if (n > 9)
    fail(errc::too_large,
         "permutation expansion limited to 9 rows, got " + std::to_string(n));

  LeibnizExpansion out;
  out.det = 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  do {
    mpz_class value = 1;
    for (int m = 0; m < n && value != 0; ++m)
      value *= static_cast<long>(A.at(perm[m], m));
    if (value == 0) continue;

    // sgn = (-1)^(n - #cycles), fixed points included.
    std::vector<char> seen(n, 0);
    int cycles_total = 0;
    std::vector<std::vector<int>> long_cycles;
    for (int m = 0; m < n; ++m) {
      if (seen[m]) continue;
      ++cycles_total;
      std::vector<int> cyc;
      for (int v = m; !seen[v]; v = perm[v]) {
        seen[v] = 1;
        cyc.push_back(v);
      }
      if (cyc.size() > 1) long_cycles.push_back(std::move(cyc));
    }
    if ((n - cycles_total) % 2 != 0) value = -value;

    out.det += value;
    out.terms.push_back({perm, std::move(long_cycles), std::move(value)});
  } while (std::next_permutation(perm.begin(), perm.end()));

  return out;
}

}  // namespace rnx
