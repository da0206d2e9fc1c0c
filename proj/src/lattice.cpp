#include "alcomb/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace alcomb {

std::string to_string(Mode m) {
  return m == Mode::classical ? "classical" : "quantum";
}

Mode mode_from_string(std::string_view s) {
  if (s == "classical") return Mode::classical;
  if (s == "quantum") return Mode::quantum;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

Context::Context(int n_, Int c_, Mode mode_) : n(n_), c(c_), mode(mode_) {
  if (n < 2) throw std::invalid_argument("context requires rank n >= 2");
  if (c < 2) throw std::invalid_argument("context requires c >= 2");
}

Int Weight::sum() const {
  Int s = 0;
  for (Int x : coords) s = checked_add(s, x);
  return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ w.coords.size();
  for (Int x : w.coords) {
    std::size_t v = static_cast<std::size_t>(x);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<PosRoot> positive_roots(int n) {
  std::vector<PosRoot> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

Weight rho(int n) {
  std::vector<Int> cs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cs[static_cast<std::size_t>(i)] = n - 1 - i;
  return Weight(std::move(cs));
}

Int pairing_rho(const Weight& lam, PosRoot a) {
  if (a.i < 1 || a.i >= a.j || a.j > lam.size())
    throw std::out_of_range("root index out of range for this weight");
  return checked_add(checked_sub(lam[a.i - 1], lam[a.j - 1]), a.j - a.i);
}

bool is_dominant(const Weight& lam) {
  for (int i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return true;
}

bool is_partition(const Weight& lam) {
  return is_dominant(lam) && (lam.size() == 0 || lam[lam.size() - 1] >= 0);
}

bool dominance_leq(const Weight& mu, const Weight& lam) {
  if (mu.size() != lam.size())
    throw std::invalid_argument("dominance comparison needs equal lengths");
  Int prefix = 0;
  for (int i = 0; i < lam.size(); ++i) {
    prefix = checked_add(prefix, checked_sub(lam[i], mu[i]));
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

PartitionStream::PartitionStream(int n, Int r) : n_(n), r_(r) {
  if (n < 1) throw std::invalid_argument("partitions: need n >= 1");
  if (r < 0) throw std::invalid_argument("partitions: need r >= 0");
}

std::optional<Weight> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    cur_.assign(static_cast<std::size_t>(n_), 0);
    cur_[0] = r_;
    return Weight(cur_);
  }
  // Find the rightmost position whose decrement still leaves enough tail
  // capacity; refill the tail greedily.  This walks the list in
  // descending lexicographic order.
  for (int i = n_ - 2; i >= 0; --i) {
    std::size_t ui = static_cast<std::size_t>(i);
    Int head = 0;
    for (int k = 0; k < i; ++k) head += cur_[static_cast<std::size_t>(k)];
    Int v = cur_[ui] - 1;
    Int rest = r_ - head - v;
    Int cap = static_cast<Int>(n_ - 1 - i) * v;
    if (v >= 0 && rest >= 0 && rest <= cap &&
        (i == 0 || v <= cur_[ui - 1])) {
      cur_[ui] = v;
      Int prev = v;
      for (int k = i + 1; k < n_; ++k) {
        Int part = std::min(prev, rest);
        cur_[static_cast<std::size_t>(k)] = part;
        rest -= part;
        prev = part;
      }
      return Weight(cur_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Weight> list_partitions(int n, Int r) {
  std::vector<Weight> out;
  PartitionStream ps(n, r);
  while (auto w = ps.next()) out.push_back(*w);
  return out;
}

namespace {

Int parse_int(std::string_view s) {
  Int value = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("cannot parse integer: '" + std::string(s) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty weight");
  std::vector<Int> cs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view item = trim(s.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos));
    if (item.empty()) throw std::invalid_argument("empty weight entry");
    std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) {
      cs.push_back(parse_int(item));
    } else {
      Int value = parse_int(trim(item.substr(0, caret)));
      Int reps = parse_int(trim(item.substr(caret + 1)));
      if (reps < 0 || reps > 1024)
        throw std::invalid_argument("bad repetition count in weight");
      for (Int k = 0; k < reps; ++k) cs.push_back(value);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(cs));
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

std::string format_weight_parens(const Weight& w) {
  return "(" + format_weight(w) + ")";
}

}  // namespace alcomb
