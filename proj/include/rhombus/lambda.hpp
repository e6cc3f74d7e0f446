#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rhombus {

/// Hard upper bound on the number of colors; fixes the inversion-set width.
inline constexpr int kMaxColors = 12;
/// C(kMaxColors, 3).
inline constexpr std::size_t kMaxTriples = 220;

inline constexpr std::size_t choose3(int n) {
  return n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
}
inline constexpr std::size_t choose4(int n) {
  return n < 4 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
}

/// Colors i < j < k, 1-based.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  constexpr int amplitude() const { return k - i; }
  constexpr bool dense() const { return j == i + 1 && k == j + 1; }
  bool valid_for(int n) const { return 1 <= i && i < j && j < k && k <= n; }

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// The dense triple ext(j) = (j-1, j, j+1).
constexpr Triple ext(int j) { return {j - 1, j, j + 1}; }

/// The quadruple i<j<k<l together with the ranks of its members
/// ijk, ijl, ikl, jkl (lexicographic, so members[0] < ... < members[3]).
struct Stick {
  std::array<int, 4> colors{};
  std::array<std::size_t, 4> members{};
};

/// Canonical lexicographic indexing of the triples of [n].
class Lambda {
 public:
  explicit Lambda(int n);

  int n() const { return n_; }
  std::size_t size() const { return triples_.size(); }

  const Triple& triple(std::size_t rank) const { return triples_.at(rank); }
  std::span<const Triple> triples() const { return triples_; }

  /// Throws std::out_of_range if t is not a triple of [n].
  std::size_t rank(const Triple& t) const;

  std::span<const Stick> sticks() const { return sticks_; }
  /// Indices into sticks() of the n-3 sticks containing the triple.
  std::span<const std::uint16_t> sticks_containing(std::size_t rank) const {
    return sticks_of_triple_.at(rank);
  }

 private:
  int n_;
  std::vector<Triple> triples_;
  std::vector<std::int16_t> rank_table_;  // (n+1)^3, -1 where invalid
  std::vector<Stick> sticks_;
  std::vector<std::vector<std::uint16_t>> sticks_of_triple_;
};

/// Shared immutable instance for 3 <= n <= kMaxColors.
const Lambda& lambda(int n);

std::size_t triple_rank(const Triple& t, int n);
Triple triple_unrank(std::size_t rank, int n);

std::vector<Stick> sticks(int n);

/// For an increasing color subset K of [n] with |K| >= 3: entry r is the rank in
/// Λ(n) of the triple obtained by relabeling the r-th triple of Λ(|K|) through
/// the order-preserving bijection [|K|] -> K.
std::vector<std::size_t> restriction_map(std::span<const int> colors, int n);

/// "ijk" when all colors are single digits, "i-j-k" otherwise.
std::string to_string(const Triple& t);
std::string stick_label(const Stick& s);

}  // namespace rhombus
