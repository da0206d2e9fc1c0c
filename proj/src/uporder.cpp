#include "alcomb/uporder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace alcomb {

std::string to_string(Domain d) { return d == Domain::X ? "X" : "Xplus"; }

std::string format_chain(const Chain& ch) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ch.weights.size(); ++k) {
    if (k) os << " ↑ ";
    os << format_weight_parens(ch.weights[k]);
  }
  return os.str();
}

namespace {

void require_scope(const Weight& lam, const Context& ctx) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n)
    throw ScopeError("up-order search requires c >= n");
}

}  // namespace

std::vector<Weight> up_covers_down(const Weight& lam, const Context& ctx,
                                   Domain domain) {
  require_scope(lam, ctx);
  Int dlam = d_separating_count(lam, ctx);
  std::set<Weight> out;
  for (PosRoot a : positive_roots(ctx.n)) {
    Int v = pairing_rho(lam, a);
    Int m_hi = floor_div(v, ctx.c);
    Int m_lo = -(dlam + 2);
    for (Int m = m_lo; m <= m_hi; ++m) {
      if (m * ctx.c == v) continue;  // fixed point
      Weight mu = dot_reflect(lam, {a, m}, ctx);
      bool drops = d_separating_count(mu, ctx) < dlam;
      if (m == m_lo && drops)
        throw std::logic_error("descent scan window too small");
      if (drops && (domain == Domain::X || is_dominant(mu))) out.insert(mu);
    }
  }
  return {out.begin(), out.end()};
}

bool up_leq(const Weight& mu, const Weight& lam, const Context& ctx) {
  require_scope(lam, ctx);
  if (mu.size() != lam.size())
    throw std::invalid_argument("up-order comparison needs equal lengths");
  if (mu == lam) return true;
  if (!linked(mu, lam, ctx)) return false;
  Int dmu = d_separating_count(mu, ctx);
  if (dmu >= d_separating_count(lam, ctx)) return false;
  std::set<Weight> seen{lam};
  std::deque<Weight> frontier{lam};
  while (!frontier.empty()) {
    Weight w = frontier.front();
    frontier.pop_front();
    for (const Weight& next : up_covers_down(w, ctx, Domain::X)) {
      if (next == mu) return true;
      // d only decreases along descents; below d(mu) is unreachable back.
      if (d_separating_count(next, ctx) <= dmu) continue;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

namespace {

struct LongestChainSearch {
  const Context& ctx;
  Domain domain;
  std::map<Weight, std::pair<Int, std::optional<Weight>>> memo;

  Int longest(const Weight& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second.first;
    Int best = 0;
    std::optional<Weight> child;
    for (const Weight& mu : up_covers_down(w, ctx, domain)) {
      Int len = longest(mu) + 1;
      if (len > best) {  // ties resolve to the sorted-first descent
        best = len;
        child = mu;
      }
    }
    memo.emplace(w, std::make_pair(best, child));
    return best;
  }
};

void check_chain_pre(const Weight& lam, const Context& ctx, Domain domain) {
  if (lam.size() != ctx.n)
    throw std::invalid_argument("weight length does not match context rank");
  if (ctx.c < ctx.n) throw ScopeError("chain search requires c >= n");
  if (domain == Domain::Xplus && !is_dominant(lam))
    throw std::invalid_argument("Xplus chains start at a dominant weight");
}

}  // namespace

Int chain_length(const Weight& lam, const Context& ctx, Domain domain) {
  check_chain_pre(lam, ctx, domain);
  LongestChainSearch search{ctx, domain, {}};
  return search.longest(lam);
}

Chain maximal_chain(const Weight& lam, const Context& ctx, Domain domain) {
  check_chain_pre(lam, ctx, domain);
  LongestChainSearch search{ctx, domain, {}};
  search.longest(lam);
  std::vector<Weight> path{lam};
  Weight cur = lam;
  while (true) {
    const auto& [len, child] = search.memo.at(cur);
    if (!child) break;
    path.push_back(*child);
    cur = *child;
  }
  std::reverse(path.begin(), path.end());
  return Chain{domain, std::move(path)};
}

SaturatedSet saturated_set(const Weight& lam, const Context& ctx) {
  require_scope(lam, ctx);
  if (!is_dominant(lam))
    throw std::invalid_argument("saturated set needs a dominant top weight");
  std::set<Weight> closure{lam};
  std::deque<Weight> frontier{lam};
  while (!frontier.empty()) {
    Weight w = frontier.front();
    frontier.pop_front();
    for (const Weight& mu : up_covers_down(w, ctx, Domain::X))
      if (closure.insert(mu).second) frontier.push_back(mu);
  }
  std::vector<Weight> members;
  for (const Weight& w : closure)
    if (is_dominant(w)) members.push_back(w);
  std::stable_sort(members.begin(), members.end(),
                   [&](const Weight& a, const Weight& b) {
                     Int da = d_separating_count(a, ctx);
                     Int db = d_separating_count(b, ctx);
                     if (da != db) return da < db;
                     return b.coords < a.coords;  // reverse-lex ties
                   });
  return SaturatedSet{lam, std::move(members)};
}

bool bruhat_leq(const Weight& mu, const Weight& lam, const Context& ctx) {
  require_scope(lam, ctx);
  if (mu.size() != lam.size())
    throw std::invalid_argument("Bruhat comparison needs equal lengths");
  if (!is_dominant(mu) || !is_dominant(lam))
    throw ScopeError("Bruhat comparison is defined on dominant weights here");
  if (!is_regular(mu, ctx) || !is_regular(lam, ctx))
    throw ScopeError(
        "singular weight: the Bruhat comparison covers regular weights only");
  if (!linked(mu, lam, ctx))
    throw ScopeError("Bruhat comparison needs linked weights");
  return up_leq(mu, lam, ctx);
}

}  // namespace alcomb
