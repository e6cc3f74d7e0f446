#include "rhombus/lambda.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace rhombus {

namespace {

void check_n(int n) {
  if (n < 3 || n > kMaxColors)
    throw std::out_of_range("color count " + std::to_string(n) + " outside [3, " +
                            std::to_string(kMaxColors) + "]");
}

}  // namespace

Lambda::Lambda(int n) : n_(n) {
  check_n(n);
  const int side = n + 1;
  rank_table_.assign(static_cast<std::size_t>(side) * side * side, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        rank_table_[(static_cast<std::size_t>(i) * side + j) * side + k] =
            static_cast<std::int16_t>(triples_.size());
        triples_.push_back({i, j, k});
      }

  sticks_of_triple_.resize(triples_.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          Stick s;
          s.colors = {i, j, k, l};
          s.members = {rank({i, j, k}), rank({i, j, l}), rank({i, k, l}), rank({j, k, l})};
          for (std::size_t m : s.members)
            sticks_of_triple_[m].push_back(static_cast<std::uint16_t>(sticks_.size()));
          sticks_.push_back(s);
        }
}

std::size_t Lambda::rank(const Triple& t) const {
  if (!t.valid_for(n_))
    throw std::out_of_range("triple " + to_string(t) + " is not a triple of [" +
                            std::to_string(n_) + "]");
  const int side = n_ + 1;
  return static_cast<std::size_t>(
      rank_table_[(static_cast<std::size_t>(t.i) * side + t.j) * side + t.k]);
}

const Lambda& lambda(int n) {
  check_n(n);
  static const auto table = [] {
    std::array<std::unique_ptr<const Lambda>, kMaxColors + 1> all;
    for (int m = 3; m <= kMaxColors; ++m) all[m] = std::make_unique<const Lambda>(m);
    return all;
  }();
  return *table[n];
}

std::size_t triple_rank(const Triple& t, int n) { return lambda(n).rank(t); }

Triple triple_unrank(std::size_t rank, int n) { return lambda(n).triple(rank); }

std::vector<Stick> sticks(int n) {
  if (n < 4) return {};
  auto s = lambda(n).sticks();
  return {s.begin(), s.end()};
}

std::vector<std::size_t> restriction_map(std::span<const int> colors, int n) {
  if (colors.size() < 3) throw std::invalid_argument("restriction needs at least 3 colors");
  if (!std::is_sorted(colors.begin(), colors.end()) ||
      std::adjacent_find(colors.begin(), colors.end()) != colors.end())
    throw std::invalid_argument("color subset must be strictly increasing");
  if (colors.front() < 1 || colors.back() > n)
    throw std::out_of_range("color subset not contained in [n]");

  const Lambda& big = lambda(n);
  const Lambda& small = lambda(static_cast<int>(colors.size()));
  std::vector<std::size_t> map;
  map.reserve(small.size());
  for (const Triple& t : small.triples())
    map.push_back(big.rank({colors[t.i - 1], colors[t.j - 1], colors[t.k - 1]}));
  return map;
}

std::string to_string(const Triple& t) {
  if (t.k <= 9 && t.i >= 0)
    return std::string{char('0' + t.i), char('0' + t.j), char('0' + t.k)};
  return std::to_string(t.i) + "-" + std::to_string(t.j) + "-" + std::to_string(t.k);
}

std::string stick_label(const Stick& s) {
  if (s.colors[3] <= 9) {
    std::string out;
    for (int c : s.colors) out.push_back(char('0' + c));
    return out;
  }
  return std::to_string(s.colors[0]) + "-" + std::to_string(s.colors[1]) + "-" +
         std::to_string(s.colors[2]) + "-" + std::to_string(s.colors[3]);
}

}  // namespace rhombus
