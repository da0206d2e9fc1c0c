#ifndef ALCOMB_TESTS_JACOBI_TRUDI_HPP
#define ALCOMB_TESTS_JACOBI_TRUDI_HPP

// Test-side oracle: s_lambda = det(h_{lambda_i - i + j}) for partitions
// with at most three parts, both symbolically and by exact evaluation at
// integer points (h evaluated by its own recurrence, never through the
// tableau route being checked).

#include <vector>

#include "alcomb/symchar.hpp"

namespace alcomb_tests {

using namespace alcomb;

inline SymFunc jacobi_trudi(const std::vector<Int>& parts, int n_vars) {
  std::size_t k = parts.size();
  // Leibniz over the k x k matrix of h's (k <= 3 keeps this tiny).
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    perms.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));

  SymFunc total(n_vars);
  for (const auto& perm : perms) {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    SymFunc term = SymFunc::one(n_vars);
    bool zero = false;
    for (std::size_t i = 0; i < k && !zero; ++i) {
      Int deg = parts[i] - static_cast<Int>(i) + static_cast<Int>(perm[i]);
      if (deg < 0) {
        zero = true;
        break;
      }
      term = multiply(term, complete_h(deg, n_vars));
    }
    if (zero) continue;
    if (sign < 0) {
      SymFunc neg(n_vars);
      neg -= term;
      term = neg;
    }
    total += term;
  }
  return total;
}

// h_r(x_1..x_k) by the variable-peeling recurrence.
inline Int eval_h(Int r, const std::vector<Int>& x) {
  if (r < 0) return 0;
  std::vector<Int> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;  // h_0 of no variables
  for (Int xi : x) {
    for (Int d = 1; d <= r; ++d)
      row[static_cast<std::size_t>(d)] = checked_add(
          row[static_cast<std::size_t>(d)],
          checked_mul(xi, row[static_cast<std::size_t>(d - 1)]));
  }
  return row[static_cast<std::size_t>(r)];
}

// Exact value of a SymFunc at an integer point.
inline Int eval_at(const SymFunc& f, const std::vector<Int>& x) {
  Int total = 0;
  for (const auto& [key, c] : f.terms()) {
    SymFunc::Pattern p = key;
    std::sort(p.begin(), p.end());
    Int orbit = 0;
    do {
      Int mono = 1;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (Int e = 0; e < p[i]; ++e) mono = checked_mul(mono, x[i]);
      orbit = checked_add(orbit, mono);
    } while (std::next_permutation(p.begin(), p.end()));
    total = checked_add(total, checked_mul(c, orbit));
  }
  return total;
}

inline Int eval_jacobi_trudi(const std::vector<Int>& parts,
                             const std::vector<Int>& x) {
  std::size_t k = parts.size();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Int total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (idx[i] > idx[j]) sign = -sign;
    Int term = sign;
    for (std::size_t i = 0; i < k; ++i)
      term = checked_mul(
          term,
          eval_h(parts[i] - static_cast<Int>(i) + static_cast<Int>(idx[i]),
                 x));
    total = checked_add(total, term);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace alcomb_tests

#endif
