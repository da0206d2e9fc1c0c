#include "alcomb/homdim.hpp"

namespace alcomb {

std::string to_string(Family f) {
  switch (f) {
    case Family::nabla: return "nabla";
    case Family::delta: return "delta";
    case Family::simple: return "simple";
    case Family::tilting: return "tilting";
    case Family::symmetric_power: return "symmetric_power";
    case Family::exterior_power: return "exterior_power";
  }
  throw std::logic_error("bad family");
}

Family family_from_string(std::string_view s) {
  if (s == "nabla") return Family::nabla;
  if (s == "delta") return Family::delta;
  if (s == "simple") return Family::simple;
  if (s == "tilting") return Family::tilting;
  if (s == "symmetric_power") return Family::symmetric_power;
  if (s == "exterior_power") return Family::exterior_power;
  throw std::invalid_argument("unknown family: " + std::string(s));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::upper_bound: return "upper_bound";
    case Status::caveat_quantum: return "caveat_quantum";
  }
  throw std::logic_error("bad status");
}

Status status_from_string(std::string_view s) {
  if (s == "exact") return Status::exact;
  if (s == "upper_bound") return Status::upper_bound;
  if (s == "caveat_quantum") return Status::caveat_quantum;
  throw std::invalid_argument("unknown status: " + std::string(s));
}

namespace {

// Common gate for the equality results: c >= n, dominant, regular.
void require_regular(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n)
    throw ScopeError("dimension formulas need c >= n (the Coxeter number)");
  if (!is_dominant(lam))
    throw std::invalid_argument("dominant weight required");
  if (!is_regular(lam, ctx))
    throw ScopeError("singular weight " + format_weight_parens(lam) +
                     ": regular weights only");
}

void require_linked_pair(const Weight& lam, const Weight& mu,
                         const Context& ctx) {
  require_regular(lam, ctx);
  require_regular(mu, ctx);
  if (!linked(lam, mu, ctx))
    throw ScopeError("unlinked pair " + format_weight_parens(lam) + ", " +
                     format_weight_parens(mu));
}

}  // namespace

Int wfd_nabla(const Weight& lam, const Context& ctx) {
  require_regular(lam, ctx);
  return d_closed_form(lam, ctx);
}

Int gfd_delta(const Weight& lam, const Context& ctx) {
  return wfd_nabla(lam, ctx);
}

Int wfd_simple(const Weight& lam, const Context& ctx) {
  return wfd_nabla(lam, ctx);
}

Int gfd_simple(const Weight& lam, const Context& ctx) {
  return wfd_nabla(lam, ctx);
}

ExtDegree top_ext_nabla_delta(const Weight& lam, const Weight& mu,
                              const Context& ctx) {
  require_linked_pair(lam, mu, ctx);
  Int deg = d_closed_form(lam, ctx) + d_closed_form(mu, ctx);
  return ExtDegree{deg, 1, deg, false};
}

ExtDegree top_ext_simple_simple(const Weight& lam, const Weight& mu,
                                const Context& ctx) {
  return top_ext_nabla_delta(lam, mu, ctx);
}

namespace {

ExtDegree descending_pair_degree(const Weight& lam, const Weight& mu,
                                 const Context& ctx, bool vanish_at_top) {
  require_linked_pair(lam, mu, ctx);
  if (!up_leq(mu, lam, ctx))
    throw ScopeError("second weight is not below the first in the up-order");
  Int dl = d_closed_form(lam, ctx);
  Int deg = dl - d_closed_form(mu, ctx);
  // Rests on the simple/nabla Ext computation, which in the quantum case
  // is expected but not proved.
  return ExtDegree{deg, 1, vanish_at_top ? deg : dl,
                   ctx.mode == Mode::quantum};
}

}  // namespace

ExtDegree ext_nabla_nabla(const Weight& lam, const Weight& mu,
                          const Context& ctx) {
  // Vanishing above wfd(nabla(lam)) + gfd(nabla(mu)) = d(lam) + 0.
  return descending_pair_degree(lam, mu, ctx, false);
}

ExtDegree ext_simple_nabla(const Weight& lam, const Weight& mu,
                           const Context& ctx) {
  // Here the vanishing threshold equals the top degree itself.
  return descending_pair_degree(lam, mu, ctx, true);
}

Int ext_vanishing_threshold(Int wfd_N, Int gfd_M) {
  if (wfd_N < 0 || gfd_M < 0)
    throw std::invalid_argument("filtration dimensions are nonnegative");
  return checked_add(wfd_N, gfd_M);
}

std::vector<BlockDimRow> block_dimension_table(const Weight& lam,
                                               const Context& ctx) {
  require_regular(lam, ctx);
  Int dtop = d_closed_form(lam, ctx);
  bool caveat = ctx.mode == Mode::quantum;
  std::vector<BlockDimRow> rows;
  for (const Weight& mu : saturated_set(lam, ctx).members) {
    BlockDimRow row;
    row.mu = mu;
    row.quantum_caveat = caveat;
    if (!is_regular(mu, ctx)) {
      row.out_of_scope = true;  // no values: not covered by the formulas
    } else {
      Int dmu = d_closed_form(mu, ctx);
      Int both = dmu + dtop;
      row.inj_L = row.proj_L = row.inj_delta = row.proj_nabla = both;
      row.inj_nabla = row.proj_delta = dtop - dmu;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Int wfd_nabla_upper_bound(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n) throw ScopeError("chain bound needs c >= n");
  if (!is_dominant(lam))
    throw std::invalid_argument("dominant weight required");
  return chain_length(lam, ctx, Domain::Xplus);
}

CategoryODims category_O_dims(Int num_pos_roots, Int length_w) {
  if (num_pos_roots < 0 || length_w < 0 || length_w > num_pos_roots)
    throw std::invalid_argument("need 0 <= l_w <= number of positive roots");
  return CategoryODims{num_pos_roots - length_w, length_w,
                       2 * num_pos_roots - length_w, 2 * num_pos_roots};
}

DimReport dim_report(Family f, const Weight& lam, const Context& ctx) {
  DimReport rep;
  rep.label = ModuleLabel{f, lam};
  rep.status = Status::exact;
  switch (f) {
    case Family::nabla:
      rep.invariant = "wfd";
      rep.value = wfd_nabla(lam, ctx);
      break;
    case Family::delta:
      rep.invariant = "gfd";
      rep.value = gfd_delta(lam, ctx);
      break;
    case Family::simple:
      rep.invariant = "wfd";
      rep.value = wfd_simple(lam, ctx);
      break;
    default:
      throw std::invalid_argument(
          "dimension reports cover nabla, delta and simple");
  }
  return rep;
}

}  // namespace alcomb
