#ifndef ALCOMB_ALCOVES_HPP
#define ALCOMB_ALCOVES_HPP

#include <string>
#include <vector>

#include "alcomb/lattice.hpp"

namespace alcomb {

// Reflection in the hyperplane <. + rho, alpha^vee> = m*c.
struct AffineReflection {
  PosRoot alpha;
  Int m;
  bool operator==(const AffineReflection&) const = default;
};

// "s[i,j;m]"
std::string format_reflection(const AffineReflection& s);

// The generating set Sigma: simple reflections at level 0 together with
// the reflection in the highest-root wall at level 1.
std::vector<AffineReflection> sigma_generators(const Context& ctx);

// Dot action of s on lam: lam - (<lam + rho, alpha^vee> - m*c) * alpha.
Weight dot_reflect(const Weight& lam, const AffineReflection& s,
                   const Context& ctx);

// 0 < <lam + rho, alpha^vee> < c for every positive root.
bool in_fundamental_alcove(const Weight& lam, const Context& ctx);

// lam lies inside an alcove: no pairing is divisible by c.  Two
// equivalent tests (coordinate congruences and the pairing scan) are both
// evaluated and asserted to agree.
bool is_regular(const Weight& lam, const Context& ctx);

// Hyperplane distance of a dominant weight from the fundamental alcove:
// sum over i<j of floor((lam_i - lam_j - i + j - 1)/c).
Int d_closed_form(const Weight& lam, const Context& ctx);

// Same quantity counted directly: the number of pairs (alpha, m) whose
// hyperplane strictly separates lam from the base point 0 (interior to
// the fundamental alcove exactly when c >= n, hence the precondition).
// Hyperplanes through lam itself are not counted.  Any interior base
// point gives the same count, since no hyperplane meets the open alcove;
// 0 is the one that is always integral.
Int d_separating_count(const Weight& lam, const Context& ctx);

// Same W_c dot-orbit.  W_c acts on lam + rho as S_n extended by
// translations by c times the root lattice: permutations preserve the
// residue multiset mod c and translations preserve it too while keeping
// the coordinate sum; conversely, matching residues coordinate-by-
// coordinate gives a permutation after which the difference lies in
// c times the root lattice.  So: equal sums and equal residue multisets.
bool linked(const Weight& lam, const Weight& mu, const Context& ctx);

Int coxeter_number(const Context& ctx);

}  // namespace alcomb

#endif
