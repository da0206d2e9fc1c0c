#include "alcomb/alcoves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace alcomb {

std::string format_reflection(const AffineReflection& s) {
  std::ostringstream os;
  os << "s[" << s.alpha.i << "," << s.alpha.j << ";" << s.m << "]";
  return os.str();
}

std::vector<AffineReflection> sigma_generators(const Context& ctx) {
  std::vector<AffineReflection> out;
  for (int i = 1; i < ctx.n; ++i) out.push_back({{i, i + 1}, 0});
  out.push_back({{1, ctx.n}, 1});
  return out;
}

Weight dot_reflect(const Weight& lam, const AffineReflection& s,
                   const Context& ctx) {
  Int offset = checked_sub(pairing_rho(lam, s.alpha), checked_mul(s.m, ctx.c));
  Weight out = lam;
  out[s.alpha.i - 1] = checked_sub(out[s.alpha.i - 1], offset);
  out[s.alpha.j - 1] = checked_add(out[s.alpha.j - 1], offset);
  return out;
}

bool in_fundamental_alcove(const Weight& lam, const Context& ctx) {
  for (PosRoot a : positive_roots(ctx.n)) {
    Int v = pairing_rho(lam, a);
    if (v <= 0 || v >= ctx.c) return false;
  }
  return true;
}

bool is_regular(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  bool coord_test = true;
  for (int i = 1; i <= ctx.n && coord_test; ++i)
    for (int j = i + 1; j <= ctx.n; ++j) {
      Int diff = checked_sub(lam[i - 1], lam[j - 1]);
      if (floor_mod(diff, ctx.c) == floor_mod(static_cast<Int>(i - j), ctx.c)) {
        coord_test = false;
        break;
      }
    }
  bool pairing_test = true;
  for (PosRoot a : positive_roots(ctx.n)) {
    if (floor_mod(pairing_rho(lam, a), ctx.c) == 0) {
      pairing_test = false;
      break;
    }
  }
  assert(coord_test == pairing_test);
  return coord_test && pairing_test;
}

Int d_closed_form(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (!is_dominant(lam))
    throw std::invalid_argument("d_closed_form requires a dominant weight");
  Int total = 0;
  for (PosRoot a : positive_roots(ctx.n))
    total += floor_div(pairing_rho(lam, a) - 1, ctx.c);
  return total;
}

Int d_separating_count(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n)
    throw ScopeError(
        "separation counting uses the base point 0, interior only for "
        "c >= n");
  Int total = 0;
  for (PosRoot a : positive_roots(ctx.n)) {
    Int v = pairing_rho(lam, a);
    Int v0 = a.j - a.i;  // pairing of the zero weight
    Int lo = std::min(v, v0), hi = std::max(v, v0);
    for (Int m = floor_div(lo, ctx.c); m * ctx.c <= hi; ++m) {
      Int level = m * ctx.c;
      // Strict separation; lam on the hyperplane does not count, and the
      // base point is never on one (0 < v0 < c).
      if ((v - level > 0) != (v0 - level > 0) && v != level) ++total;
    }
  }
  return total;
}

bool linked(const Weight& lam, const Weight& mu, const Context& ctx) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("linkage comparison needs equal lengths");
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  std::vector<Int> ra, rb;
  Int sa = 0, sb = 0;
  for (int i = 0; i < ctx.n; ++i) {
    Int shift = ctx.n - 1 - i;  // rho
    Int xa = checked_add(lam[i], shift);
    Int xb = checked_add(mu[i], shift);
    sa = checked_add(sa, xa);
    sb = checked_add(sb, xb);
    ra.push_back(floor_mod(xa, ctx.c));
    rb.push_back(floor_mod(xb, ctx.c));
  }
  if (sa != sb) return false;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

Int coxeter_number(const Context& ctx) { return ctx.coxeter_number(); }

}  // namespace alcomb
