#ifndef ALCOMB_HOMDIM_HPP
#define ALCOMB_HOMDIM_HPP

#include <string>
#include <vector>

#include "alcomb/uporder.hpp"

namespace alcomb {

enum class Family {
  nabla,
  delta,
  simple,
  tilting,
  symmetric_power,
  exterior_power
};

std::string to_string(Family f);
Family family_from_string(std::string_view s);

struct ModuleLabel {
  Family family;
  Weight weight;
  bool operator==(const ModuleLabel&) const = default;
};

enum class Status { exact, upper_bound, caveat_quantum };

std::string to_string(Status s);
Status status_from_string(std::string_view s);

// Top nonvanishing Ext degree with its multiplicity; Ext vanishes in all
// degrees above `vanishing_above`.  In quantum mode the results that rest
// on the simple/nabla computation carry `quantum_caveat`: they are
// expected rather than proved there.
struct ExtDegree {
  Int degree = 0;
  Int multiplicity = 0;
  Int vanishing_above = 0;
  bool quantum_caveat = false;
  bool operator==(const ExtDegree&) const = default;
};

struct DimReport {
  ModuleLabel label;
  std::string invariant;
  Int value = 0;
  Status status = Status::exact;
  bool operator==(const DimReport&) const = default;
};

// One row of the block dimension table for mu in Pi(lambda).
struct BlockDimRow {
  Weight mu;
  bool out_of_scope = false;  // singular member: no values emitted
  Int inj_L = 0, proj_L = 0, inj_delta = 0, proj_nabla = 0;
  Int inj_nabla = 0, proj_delta = 0;
  bool quantum_caveat = false;
  bool operator==(const BlockDimRow&) const = default;
};

struct CategoryODims {
  Int gfd_verma = 0;
  Int proj_verma = 0;
  Int proj_simple_upper = 0;
  Int glob_O = 0;
  bool operator==(const CategoryODims&) const = default;
};

// Every operation below that takes a weight demands c >= n and a regular
// dominant weight, except where noted; singular input raises ScopeError
// (the dimensions of singular weights are not covered by these formulas).

// wfd(nabla(lam)) = gfd(Delta(lam)) = d(lam).
Int wfd_nabla(const Weight& lam, const Context& ctx);
Int gfd_delta(const Weight& lam, const Context& ctx);

// wfd(L(lam)) = gfd(L(lam)) = d(lam).
Int wfd_simple(const Weight& lam, const Context& ctx);
Int gfd_simple(const Weight& lam, const Context& ctx);

// Ext^{d(lam)+d(mu)}(nabla(lam), Delta(mu)) = k for linked regular pairs.
ExtDegree top_ext_nabla_delta(const Weight& lam, const Weight& mu,
                              const Context& ctx);

// Ext^{d(lam)+d(mu)}(L(lam), L(mu)) = k for linked regular pairs.
ExtDegree top_ext_simple_simple(const Weight& lam, const Weight& mu,
                                const Context& ctx);

// Ext^{d(lam)-d(mu)}(nabla(lam), nabla(mu)) = k for mu below lam.
ExtDegree ext_nabla_nabla(const Weight& lam, const Weight& mu,
                          const Context& ctx);

// Ext^{d(lam)-d(mu)}(L(lam), nabla(mu)) = k for mu below lam, vanishing
// above that degree.
ExtDegree ext_simple_nabla(const Weight& lam, const Weight& mu,
                           const Context& ctx);

// Ext^i(N, M) = 0 for i > wfd(N) + gfd(M).
Int ext_vanishing_threshold(Int wfd_N, Int gfd_M);

// Injective/projective dimensions in the block algebra of Pi(lam):
// inj L(mu) = proj L(mu) = proj nabla(mu) = inj Delta(mu) = d(mu)+d(lam),
// inj nabla(mu) = proj Delta(mu) = d(lam)-d(mu).
std::vector<BlockDimRow> block_dimension_table(const Weight& lam,
                                               const Context& ctx);

// wfd(nabla(lam)) <= longest dominant chain below lam; valid as a bound
// for singular lam as well (regularity NOT required).
Int wfd_nabla_upper_bound(const Weight& lam, const Context& ctx);

// Category O corollaries, as plain integers: N = number of positive
// roots, l_w = length of w.
CategoryODims category_O_dims(Int num_pos_roots, Int length_w);

// CLI helper: the wfd/gfd report for one module family.
DimReport dim_report(Family f, const Weight& lam, const Context& ctx);

}  // namespace alcomb

#endif
