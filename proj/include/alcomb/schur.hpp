#ifndef ALCOMB_SCHUR_HPP
#define ALCOMB_SCHUR_HPP

#include <optional>
#include <vector>

#include "alcomb/homdim.hpp"

namespace alcomb {

// Weyl filtration dimension and global dimension of the Schur algebra
// S(n, r) (classical) or S_q(n, r) (quantum), with the parameter ranges
// where the value is exact distinguished from the ranges where only the
// upper bound (n-1)*floor(r/c) is available.
struct SchurDimResult {
  int n = 0;
  Int r = 0;
  Int c = 0;
  Mode mode = Mode::classical;
  Int wfd = 0;
  Int glob = 0;
  Status status = Status::exact;
  std::optional<Weight> witness;  // present exactly for exact results
  bool operator==(const SchurDimResult&) const = default;
};

// Exact for c > n, and for n = c with c | r; upper bound otherwise.
SchurDimResult wfd_schur(const Context& ctx, Int r);

// The explicit regular partition of r attaining the maximal hyperplane
// distance over Lambda(n, r).  Defined for c > n, and for n = c with
// c | r (where it is the single-row partition).
Weight witness_weight(const Context& ctx, Int r);

// floor(lambda/c) = sum_i floor(lambda_i/c).
Int floor_lambda_over_c(const Weight& lam, const Context& ctx);

// wfd(S^r E) <= (n-1)*floor(r/c).
Int symmetric_power_wfd_bound(Int r, const Context& ctx);

// wfd(S^lambda E) <= sum_i (n-1)*floor(lambda_i/c), by tensor-product
// subadditivity applied to the degree bound factorwise.  Bound only.
Int symmetric_power_wfd_bound(const Weight& lam, const Context& ctx);

// Exhaustive maximum of d over the regular members of Lambda(n, r), with
// the full argmax list in stream order.  Empty argmax means no regular
// member exists.
struct RegularMax {
  Int value = 0;
  std::vector<Weight> argmax;
  bool operator==(const RegularMax&) const = default;
};

RegularMax max_d_over_regular(const Context& ctx, Int r);

}  // namespace alcomb

#endif
