#ifndef ALCOMB_LATTICE_HPP
#define ALCOMB_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcomb/checked.hpp"
#include "alcomb/errors.hpp"

namespace alcomb {

enum class Mode { classical, quantum };

std::string to_string(Mode m);
Mode mode_from_string(std::string_view s);

// Every computation is parametrised by (n, c, mode): the rank of GL_n and
// the characteristic p (classical) or root-of-unity order l (quantum).
// The two modes share all formulas; only labeling and caveat flags differ.
struct Context {
  int n;
  Int c;
  Mode mode;

  Context(int n_, Int c_, Mode mode_ = Mode::classical);

  // Coxeter number of type A_{n-1}.
  Int coxeter_number() const { return n; }

  bool operator==(const Context&) const = default;
};

// An integral weight for GL_n: coordinates over the standard basis e_i.
struct Weight {
  std::vector<Int> coords;

  Weight() = default;
  explicit Weight(std::vector<Int> cs) : coords(std::move(cs)) {}

  static Weight zero(int n) { return Weight(std::vector<Int>(n, 0)); }

  int size() const { return static_cast<int>(coords.size()); }
  Int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  Int sum() const;

  auto operator<=>(const Weight&) const = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// e_i - e_j with 1 <= i < j <= n.  Simple iff j == i+1; the highest root
// is (1, n).
struct PosRoot {
  int i;
  int j;
  bool operator==(const PosRoot&) const = default;
};

std::vector<PosRoot> positive_roots(int n);

// The integral rho surrogate (n-1, n-2, ..., 0).  The genuine half-sum of
// positive roots is non-integral on the GL_n lattice, but every formula
// here depends only on coordinate differences, for which the surrogate
// gives the same pairings.
Weight rho(int n);

// <lambda + rho, alpha^vee> = lambda_i - lambda_j + j - i.
Int pairing_rho(const Weight& lam, PosRoot a);

// Weakly decreasing coordinates.
bool is_dominant(const Weight& lam);

// Dominant and nonnegative: a partition of `sum()` into <= n parts.
bool is_partition(const Weight& lam);

// mu <= lam in the dominance order: lam - mu is a nonnegative integer
// combination of simple roots.  In type A this is the prefix-sum test.
bool dominance_leq(const Weight& mu, const Weight& lam);

// Streams the partitions of r into at most n parts, each padded with
// zeros to length n, in reverse-lexicographic (descending) order:
// (r,0,...,0) first.  Streams are cheap to re-create and independent.
class PartitionStream {
 public:
  PartitionStream(int n, Int r);
  std::optional<Weight> next();

 private:
  int n_;
  Int r_;
  bool done_ = false;
  bool started_ = false;
  std::vector<Int> cur_;
};

std::vector<Weight> list_partitions(int n, Int r);

// "7,0", "(7,0)" and exponent notation "3^2,1" == (3,3,1) all parse.
Weight parse_weight(std::string_view text);

// Canonical serialization: comma-separated integers.
std::string format_weight(const Weight& w);
// "(7,0)" form, used by chain output.
std::string format_weight_parens(const Weight& w);

}  // namespace alcomb

#endif
