#ifndef ALCOMB_UPORDER_HPP
#define ALCOMB_UPORDER_HPP

#include <string>
#include <vector>

#include "alcomb/alcoves.hpp"

namespace alcomb {

// Chain domain: arbitrary weights, or dominant weights only.
enum class Domain { X, Xplus };

std::string to_string(Domain d);

// mu_0 up ... up mu_l, ascending; consecutive members differ by one
// affine reflection and the hyperplane distance d strictly increases
// along the chain.
struct Chain {
  Domain domain = Domain::X;
  std::vector<Weight> weights;

  Int length() const { return static_cast<Int>(weights.size()) - 1; }
  bool operator==(const Chain&) const = default;
};

std::string format_chain(const Chain& ch);

// One-step descents: all mu = s_{alpha,mc}.lam with mc <= <lam+rho,a^vee>,
// mu != lam and d(mu) < d(lam), restricted to dominant mu for Xplus.
//
// The d-filter makes the scan finite: m runs over [-(d(lam)+2),
// floor(pairing/c)], and a boundary candidate surviving the filter would
// mean the window is too small, so that is a hard logic error.  For a
// dominant step the d-drop is automatic (with mc = pairing - f, the
// floor losses and gains over the other roots cancel in pairs shifted by
// mc, while the reflected root loses at least one), so on X+ nothing is
// ever filtered away.
std::vector<Weight> up_covers_down(const Weight& lam, const Context& ctx,
                                   Domain domain);

// mu is reachable from lam by a (possibly empty) descending chain of
// one-step descents through X.
bool up_leq(const Weight& mu, const Weight& lam, const Context& ctx);

// Length of the longest strictly descending chain below lam in the given
// domain.  For regular dominant lam both domains give d(lam).
Int chain_length(const Weight& lam, const Context& ctx, Domain domain);

// A longest chain itself, ascending up to lam.
Chain maximal_chain(const Weight& lam, const Context& ctx, Domain domain);

// The finite saturated set of dominant weights below lam in the up-order,
// reachable through chains in X.  Chains through X and chains through X+
// reach the same dominant weights below a regular top; for singular
// members the X-chain closure is the inclusive choice and is what this
// returns.  Sorted by ascending d, ties in reverse-lexicographic order.
struct SaturatedSet {
  Weight top;
  std::vector<Weight> members;
  bool operator==(const SaturatedSet&) const = default;
};

SaturatedSet saturated_set(const Weight& lam, const Context& ctx);

// The up-order on regular linked dominant weights, which on such orbits
// is the Bruhat order of the affine Weyl group.  Rejects singular or
// unlinked input.
bool bruhat_leq(const Weight& mu, const Weight& lam, const Context& ctx);

}  // namespace alcomb

#endif
