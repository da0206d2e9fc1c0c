#ifndef ALCOMB_SYMCHAR_HPP
#define ALCOMB_SYMCHAR_HPP

#include <map>
#include <vector>

#include "alcomb/lattice.hpp"

namespace alcomb {

// A symmetric polynomial in a fixed number of variables with integer
// coefficients, stored on the monomial symmetric basis: each key is a
// weakly decreasing nonnegative exponent pattern (padded to n_vars) and
// stands for the sum of all distinct rearrangements of that monomial.
// Zero coefficients are never stored.
class SymFunc {
 public:
  using Pattern = std::vector<Int>;

  explicit SymFunc(int n_vars);

  static SymFunc zero(int n_vars) { return SymFunc(n_vars); }
  static SymFunc one(int n_vars);

  int vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Pattern, Int>& terms() const { return terms_; }

  Int coeff(const Pattern& pattern) const;

  // Adds c * m_pattern; the pattern is sorted and padded here.
  void add_term(Pattern pattern, Int c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

  // Value at x_1 = ... = x_n = 1: each m_mu contributes the number of
  // distinct rearrangements of mu.
  Int eval_all_ones() const;

  bool operator==(const SymFunc&) const = default;

 private:
  int n_vars_;
  std::map<Pattern, Int> terms_;
};

// The Schur polynomial s_lambda in n variables, by semistandard-tableau
// enumeration (rows weakly increasing, columns strictly increasing,
// entries in 1..n).  The coefficient of m_mu is the number of tableaux of
// content mu.
SymFunc schur_polynomial(const Weight& lam, int n_vars);

// Complete homogeneous h_r: every monomial of degree r once, i.e. the sum
// of m_mu over partitions mu of r into at most n parts.
SymFunc complete_h(Int r, int n_vars);

// Elementary e_r = m_{(1^r)}; requires r <= n.
SymFunc elementary_e(Int r, int n_vars);

// Exact product.  Both factors are expanded into plain monomials, the
// convolution is collected back on sorted representatives.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// Expansion on the Schur basis by repeated leading-term elimination under
// the reverse-lexicographic order.  A nonzero remainder without a valid
// leading partition cannot arise from this representation and raises
// logic_error.
std::map<Weight, Int> to_schur_basis(const SymFunc& f);

// Character verification of the hook short exact sequence:
// h_{mc-j} * e_j = s_{(mc-j, 1^j)} + s_{(mc-j+1, 1^{j-1})} in n variables.
// This checks the character identity only.
struct PieriReport {
  Int m = 0;
  Int j = 0;
  int n = 0;
  Int c = 0;
  Weight lower_hook;  // highest weight of the sub term
  Weight upper_hook;  // highest weight of the quotient term
  std::map<Weight, Int> constituents;
  bool ok = false;
  bool operator==(const PieriReport&) const = default;
};

PieriReport verify_pieri_ses(Int m, Int j, const Context& ctx);

}  // namespace alcomb

#endif
