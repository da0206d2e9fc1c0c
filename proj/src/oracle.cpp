#include "alcomb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace alcomb {

Int separation_count(const Weight& a, const Weight& b, const Context& ctx) {
  if (a.size() != ctx.n || b.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  Int total = 0;
  for (PosRoot root : positive_roots(ctx.n)) {
    Int va = pairing_rho(a, root);
    Int vb = pairing_rho(b, root);
    Int lo = std::min(va, vb), hi = std::max(va, vb);
    for (Int m = floor_div(lo, ctx.c); m * ctx.c <= hi; ++m) {
      Int level = m * ctx.c;
      if (va != level && vb != level && ((va > level) != (vb > level)))
        ++total;
    }
  }
  return total;
}

std::vector<AffineReflection> wall_reflections(const Weight& lam,
                                               const Context& ctx) {
  if (!is_regular(lam, ctx))
    throw ScopeError("wall reflections need a regular weight");
  std::vector<AffineReflection> walls;
  for (PosRoot a : positive_roots(ctx.n)) {
    Int v = pairing_rho(lam, a);
    Int below = floor_div(v, ctx.c);  // v is not a multiple of c
    for (Int m : {below, below + 1}) {
      AffineReflection s{a, m};
      if (separation_count(lam, dot_reflect(lam, s, ctx), ctx) == 1)
        walls.push_back(s);
    }
  }
  return walls;
}

std::map<Weight, Int> alcove_bfs_lengths(const Context& ctx, Int max_len) {
  if (ctx.c < ctx.n)
    throw ScopeError("alcove walk starts at 0, interior only for c >= n");
  if (max_len < 0) throw std::invalid_argument("negative depth");
  std::map<Weight, Int> depth;
  std::deque<Weight> frontier;
  Weight base = Weight::zero(ctx.n);
  depth[base] = 0;
  frontier.push_back(base);
  while (!frontier.empty()) {
    Weight w = frontier.front();
    frontier.pop_front();
    Int dw = depth.at(w);
    if (dw == max_len) continue;
    for (const AffineReflection& s : wall_reflections(w, ctx)) {
      Weight next = dot_reflect(w, s, ctx);
      if (depth.emplace(next, dw + 1).second) frontier.push_back(next);
    }
  }
  return depth;
}

VerificationReport verify_length_equalities(const Weight& lam,
                                            const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n) throw ScopeError("length check requires c >= n");
  if (!is_dominant(lam))
    throw std::invalid_argument("dominant weight required");
  if (!is_regular(lam, ctx))
    throw ScopeError("singular weight " + format_weight_parens(lam) +
                     ": regular weights only");
  Int d = d_closed_form(lam, ctx);
  Int len_x = chain_length(lam, ctx, Domain::X);
  Int len_xp = chain_length(lam, ctx, Domain::Xplus);
  VerificationReport rep;
  std::ostringstream subj;
  subj << "lengths of " << format_weight_parens(lam) << " at c=" << ctx.c
       << ": d=" << d << " chainX=" << len_x << " chainX+=" << len_xp;
  rep.subject = subj.str();
  rep.expected = d;
  rep.observed = len_x;
  rep.ok = (len_x == d) && (len_xp == d);
  rep.witness = maximal_chain(lam, ctx, Domain::X);
  return rep;
}

namespace {

bool in_box(const Weight& w, Int radius) {
  for (Int x : w.coords)
    if (x > radius || x < -radius) return false;
  return true;
}

// Reflection closure of lam inside |coords| <= radius.
std::set<Weight> reflection_closure(const Weight& lam, const Context& ctx,
                                    Int radius) {
  std::set<Weight> seen;
  if (!in_box(lam, radius)) return seen;
  std::deque<Weight> frontier{lam};
  seen.insert(lam);
  while (!frontier.empty()) {
    Weight w = frontier.front();
    frontier.pop_front();
    for (PosRoot a : positive_roots(ctx.n)) {
      Int v = pairing_rho(w, a);
      // An image inside the box moves each touched coordinate by at most
      // 2*radius, so |v - mc| <= 2*radius bounds the useful levels.
      Int m_lo = floor_div(v - 2 * radius, ctx.c);
      Int m_hi = floor_div(v + 2 * radius, ctx.c) + 1;
      for (Int m = m_lo; m <= m_hi; ++m) {
        Weight img = dot_reflect(w, {a, m}, ctx);
        if (img == w || !in_box(img, radius)) continue;
        if (seen.insert(img).second) frontier.push_back(img);
      }
    }
  }
  return seen;
}

}  // namespace

VerificationReport verify_orbit_linkage(const Weight& lam, const Context& ctx,
                                        Int radius) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (radius < 0) throw std::invalid_argument("negative radius");

  // Enlarged box: a reflection path between box members may overshoot the
  // box, but never further than one fundamental-domain diameter beyond
  // twice the radius at the scales checked here.
  Int radius_ext = 2 * radius + 2 * ctx.c;
  std::set<Weight> closure = reflection_closure(lam, ctx, radius_ext);

  Int criterion_count = 0;
  Int generated_count = 0;
  bool ok = true;

  // Every generated weight must satisfy the criterion.
  for (const Weight& w : closure)
    if (!linked(lam, w, ctx)) ok = false;

  // Every box weight satisfying the criterion must be generated.
  std::vector<Int> cur(static_cast<std::size_t>(ctx.n), -radius);
  while (true) {
    Weight w{cur};
    if (linked(lam, w, ctx)) {
      ++criterion_count;
      if (closure.count(w))
        ++generated_count;
      else
        ok = false;
    }
    int pos = ctx.n - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == radius) {
      cur[static_cast<std::size_t>(pos)] = -radius;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }

  VerificationReport rep;
  std::ostringstream subj;
  subj << "linkage closure of " << format_weight_parens(lam)
       << " at c=" << ctx.c << " within |coords| <= " << radius;
  rep.subject = subj.str();
  rep.expected = criterion_count;
  rep.observed = generated_count;
  rep.ok = ok && criterion_count == generated_count;
  return rep;
}

}  // namespace alcomb
