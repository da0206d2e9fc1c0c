#include "alcomb/symchar.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace alcomb {

SymFunc::SymFunc(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) throw std::invalid_argument("need at least one variable");
}

SymFunc SymFunc::one(int n_vars) {
  SymFunc f(n_vars);
  f.add_term(Pattern{}, 1);
  return f;
}

Int SymFunc::coeff(const Pattern& pattern) const {
  Pattern key = pattern;
  std::sort(key.begin(), key.end(), std::greater<Int>());
  key.resize(static_cast<std::size_t>(n_vars_), 0);
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void SymFunc::add_term(Pattern pattern, Int c) {
  if (static_cast<int>(pattern.size()) > n_vars_)
    throw std::invalid_argument("exponent pattern has too many parts");
  for (Int e : pattern)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  std::sort(pattern.begin(), pattern.end(), std::greater<Int>());
  pattern.resize(static_cast<std::size_t>(n_vars_), 0);
  Int& slot = terms_[pattern];
  slot = checked_add(slot, c);
  if (slot == 0) terms_.erase(pattern);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.n_vars_ != n_vars_)
    throw std::invalid_argument("variable counts differ");
  for (const auto& [key, c] : other.terms_) {
    Int& slot = terms_[key];
    slot = checked_add(slot, c);
    if (slot == 0) terms_.erase(key);
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  if (other.n_vars_ != n_vars_)
    throw std::invalid_argument("variable counts differ");
  for (const auto& [key, c] : other.terms_) {
    Int& slot = terms_[key];
    slot = checked_sub(slot, c);
    if (slot == 0) terms_.erase(key);
  }
  return *this;
}

namespace {

// Number of distinct rearrangements of a sorted pattern:
// multinomial n! / (prod multiplicities!).
Int distinct_rearrangements(const SymFunc::Pattern& key) {
  Int total = 1;
  Int placed = 0;
  std::size_t i = 0;
  while (i < key.size()) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    Int run = static_cast<Int>(j - i);
    // multiply by C(placed + run, run)
    for (Int k = 1; k <= run; ++k)
      total = checked_mul(total, placed + k) / k;
    placed += run;
    i = j;
  }
  return total;
}

struct PatternHash {
  std::size_t operator()(const SymFunc::Pattern& p) const noexcept {
    std::size_t h = p.size();
    for (Int x : p)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return h;
  }
};

using RawPoly = std::unordered_map<SymFunc::Pattern, Int, PatternHash>;

RawPoly raw_expand(const SymFunc& f) {
  RawPoly out;
  for (const auto& [key, c] : f.terms()) {
    SymFunc::Pattern p = key;
    std::sort(p.begin(), p.end());  // ascending start for next_permutation
    do {
      out[p] = checked_add(out[p], c);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

}  // namespace

Int SymFunc::eval_all_ones() const {
  Int total = 0;
  for (const auto& [key, c] : terms_)
    total = checked_add(total, checked_mul(c, distinct_rearrangements(key)));
  return total;
}

SymFunc schur_polynomial(const Weight& lam, int n_vars) {
  if (!is_partition(lam))
    throw std::invalid_argument("Schur polynomial needs a partition");
  std::vector<Int> shape;
  for (Int part : lam.coords)
    if (part > 0) shape.push_back(part);
  if (static_cast<int>(shape.size()) > n_vars)
    throw std::invalid_argument("partition has more parts than variables");

  SymFunc out(n_vars);
  if (shape.empty()) return SymFunc::one(n_vars);

  // Fill row by row; row r (0-based) entries are >= r+1 by column
  // strictness, weakly increasing along the row, and strictly greater
  // than the entry above.
  std::size_t rows = shape.size();
  std::vector<std::vector<int>> tableau(rows);
  for (std::size_t r = 0; r < rows; ++r)
    tableau[r].assign(static_cast<std::size_t>(shape[r]), 0);
  std::vector<Int> content(static_cast<std::size_t>(n_vars), 0);

  std::function<void(std::size_t, std::size_t)> fill =
      [&](std::size_t r, std::size_t col) {
        if (r == rows) {
          // Only sorted contents contribute: the coefficient of m_mu is
          // the tableau count for the sorted representative mu.
          if (std::is_sorted(content.begin(), content.end(),
                             std::greater<Int>()))
            out.add_term(content, 1);
          return;
        }
        if (col == tableau[r].size()) {
          fill(r + 1, 0);
          return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tableau[r][col - 1]);
        if (r > 0 && col < tableau[r - 1].size())
          lo = std::max(lo, tableau[r - 1][col] + 1);
        for (int entry = lo; entry <= n_vars; ++entry) {
          tableau[r][col] = entry;
          ++content[static_cast<std::size_t>(entry - 1)];
          fill(r, col + 1);
          --content[static_cast<std::size_t>(entry - 1)];
        }
      };
  fill(0, 0);
  return out;
}

SymFunc complete_h(Int r, int n_vars) {
  if (r < 0) throw std::invalid_argument("h_r needs r >= 0");
  SymFunc out(n_vars);
  PartitionStream ps(n_vars, r);
  while (auto mu = ps.next()) out.add_term(mu->coords, 1);
  return out;
}

SymFunc elementary_e(Int r, int n_vars) {
  if (r < 0) throw std::invalid_argument("e_r needs r >= 0");
  if (r > n_vars)
    throw std::invalid_argument("e_r vanishes for r > number of variables");
  SymFunc out(n_vars);
  out.add_term(SymFunc::Pattern(static_cast<std::size_t>(r), 1), 1);
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.vars() != g.vars())
    throw std::invalid_argument("variable counts differ");
  int n = f.vars();
  RawPoly fa = raw_expand(f);
  RawPoly ga = raw_expand(g);
  SymFunc out(n);
  // The product is symmetric, so collecting only the monomials whose
  // exponent vector is already sorted loses nothing.
  for (const auto& [pa, ca] : fa) {
    for (const auto& [pb, cb] : ga) {
      SymFunc::Pattern sum(static_cast<std::size_t>(n));
      bool sorted = true;
      for (int i = 0; i < n; ++i) {
        sum[static_cast<std::size_t>(i)] =
            checked_add(pa[static_cast<std::size_t>(i)],
                        pb[static_cast<std::size_t>(i)]);
        if (i > 0 && sum[static_cast<std::size_t>(i)] >
                         sum[static_cast<std::size_t>(i - 1)]) {
          sorted = false;
          break;
        }
      }
      if (sorted) out.add_term(std::move(sum), checked_mul(ca, cb));
    }
  }
  return out;
}

std::map<Weight, Int> to_schur_basis(const SymFunc& f) {
  std::map<Weight, Int> out;
  SymFunc rem = f;
  while (!rem.is_zero()) {
    // Leading term: the lexicographically largest key.  By the storage
    // invariant it is a partition; anything else is a broken state.
    auto lead = std::prev(rem.terms().end());
    Weight top(lead->first);
    Int c = lead->second;
    if (!is_partition(top))
      throw std::logic_error(
          "schur basis conversion: no dominant leading term");
    SymFunc s = schur_polynomial(top, rem.vars());
    SymFunc scaled(rem.vars());
    for (const auto& [key, sc] : s.terms())
      scaled.add_term(key, checked_mul(sc, c));
    rem -= scaled;
    out[top] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

PieriReport verify_pieri_ses(Int m, Int j, const Context& ctx) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (j < 1 || j > ctx.n - 1)
    throw std::invalid_argument("need 1 <= j <= n-1");
  Int a = m * ctx.c - j;
  if (a < 1) throw std::invalid_argument("need m*c - j >= 1");

  PieriReport rep;
  rep.m = m;
  rep.j = j;
  rep.n = ctx.n;
  rep.c = ctx.c;

  auto hook = [&](Int head, Int ones) {
    std::vector<Int> cs(static_cast<std::size_t>(ctx.n), 0);
    cs[0] = head;
    for (Int k = 1; k <= ones; ++k) cs[static_cast<std::size_t>(k)] = 1;
    return Weight(std::move(cs));
  };
  rep.lower_hook = hook(a, j);
  rep.upper_hook = hook(a + 1, j - 1);

  SymFunc lhs = multiply(complete_h(a, ctx.n), elementary_e(j, ctx.n));
  rep.constituents = to_schur_basis(lhs);
  std::map<Weight, Int> expected{{rep.lower_hook, 1}, {rep.upper_hook, 1}};
  rep.ok = rep.constituents == expected;
  return rep;
}

}  // namespace alcomb
