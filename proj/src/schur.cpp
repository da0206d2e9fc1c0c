#include "alcomb/schur.hpp"

namespace alcomb {

SchurDimResult wfd_schur(const Context& ctx, Int r) {
  if (r < 0) throw std::invalid_argument("degree r must be nonnegative");
  SchurDimResult res;
  res.n = ctx.n;
  res.r = r;
  res.c = ctx.c;
  res.mode = ctx.mode;
  Int bound = (ctx.n - 1) * floor_div(r, ctx.c);
  if (ctx.c > ctx.n) {
    res.wfd = bound;
    res.glob = 2 * bound;
    res.status = Status::exact;
    res.witness = witness_weight(ctx, r);
  } else if (ctx.c == ctx.n && r % ctx.c == 0) {
    res.wfd = (ctx.c - 1) * (r / ctx.c);
    res.glob = 2 * res.wfd;
    res.status = Status::exact;
    res.witness = witness_weight(ctx, r);
  } else {
    // Not covered by either exact result; the bound still holds for all c.
    res.wfd = bound;
    res.glob = 2 * bound;
    res.status = Status::upper_bound;
  }
  return res;
}

Weight witness_weight(const Context& ctx, Int r) {
  if (r < 0) throw std::invalid_argument("degree r must be nonnegative");
  int n = ctx.n;
  if (ctx.c == ctx.n) {
    if (r % ctx.c != 0)
      throw std::invalid_argument(
          "witness for n = c exists only when c divides r");
    std::vector<Int> cs(static_cast<std::size_t>(n), 0);
    cs[0] = r;
    return Weight(std::move(cs));
  }
  if (ctx.c < ctx.n)
    throw std::invalid_argument("witness weight needs c > n or n = c");
  Int r1 = r / ctx.c, r0 = r % ctx.c;
  Int b = r0 / n, a = r0 % n;  // r0 = b*n + a, 0 <= a <= n-1 (as c > n)
  std::vector<Int> cs(static_cast<std::size_t>(n), b);
  if (a >= 1) {
    cs[0] += r1 * ctx.c + 1;
    for (Int k = 1; k < a; ++k) cs[static_cast<std::size_t>(k)] += 1;
  } else {
    cs[0] += r1 * ctx.c;
  }
  return Weight(std::move(cs));
}

Int floor_lambda_over_c(const Weight& lam, const Context& ctx) {
  if (!is_partition(lam))
    throw std::invalid_argument("floor(lambda/c) needs a partition");
  Int total = 0;
  for (Int x : lam.coords) total += floor_div(x, ctx.c);
  return total;
}

Int symmetric_power_wfd_bound(Int r, const Context& ctx) {
  if (r < 0) throw std::invalid_argument("degree r must be nonnegative");
  return (ctx.n - 1) * floor_div(r, ctx.c);
}

Int symmetric_power_wfd_bound(const Weight& lam, const Context& ctx) {
  return (ctx.n - 1) * floor_lambda_over_c(lam, ctx);
}

RegularMax max_d_over_regular(const Context& ctx, Int r) {
  if (ctx.c < ctx.n)
    throw ScopeError("regular sweep requires c >= n");
  if (r < 0) throw std::invalid_argument("degree r must be nonnegative");
  RegularMax out;
  PartitionStream ps(ctx.n, r);
  while (auto lam = ps.next()) {
    if (!is_regular(*lam, ctx)) continue;
    Int d = d_closed_form(*lam, ctx);
    if (out.argmax.empty() || d > out.value) {
      out.value = d;
      out.argmax.clear();
      out.argmax.push_back(*lam);
    } else if (d == out.value) {
      out.argmax.push_back(*lam);
    }
  }
  return out;
}

}  // namespace alcomb
