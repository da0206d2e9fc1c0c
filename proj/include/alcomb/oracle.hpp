#ifndef ALCOMB_ORACLE_HPP
#define ALCOMB_ORACLE_HPP

#include <map>
#include <optional>
#include <string>

#include "alcomb/uporder.hpp"

namespace alcomb {

struct VerificationReport {
  std::string subject;
  Int expected = 0;
  Int observed = 0;
  std::optional<Chain> witness;
  bool ok = false;
  bool operator==(const VerificationReport&) const = default;
};

// Number of hyperplanes strictly separating two weights (hyperplanes
// through either endpoint are not counted).
Int separation_count(const Weight& a, const Weight& b, const Context& ctx);

// The wall reflections of the alcove containing a regular weight: the
// reflections in nearby hyperplane levels whose image alcove is separated
// from this one by exactly one hyperplane.  A regular alcove in type
// A_{n-1} has exactly n of them.
std::vector<AffineReflection> wall_reflections(const Weight& lam,
                                               const Context& ctx);

// Breadth-first walk of the alcove graph from the base point 0, crossing
// one wall at a time, up to the given depth.  Crossing a wall of the
// alcove w(C) is the reflection w s w^{-1} for a generator s, i.e. the
// step from w to ws, so the recorded depth of each visited weight is its
// alcove's word length over the generating set, and for every dominant
// visited weight it equals d.
std::map<Weight, Int> alcove_bfs_lengths(const Context& ctx, Int max_len);

// Recomputes d(lam) three ways: the closed form and the two chain
// searches; ok iff all agree.  A longest chain is attached as witness.
VerificationReport verify_length_equalities(const Weight& lam,
                                            const Context& ctx);

// Validates the residue linkage criterion against reflection closures:
// within the coordinate box |mu_i| <= radius, the set of weights
// generated from lam by affine reflections (computed inside an enlarged
// box so boundary paths are not cut off) must coincide with the set
// satisfying the criterion.
VerificationReport verify_orbit_linkage(const Weight& lam, const Context& ctx,
                                        Int radius);

}  // namespace alcomb

#endif
