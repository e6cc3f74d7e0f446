#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rhombus/tiling.hpp"

namespace rhombus {

inline constexpr std::size_t kMaxPairs = kMaxColors * (kMaxColors - 1) / 2;

/// Position of the pair i<j (1-based colors) in the lexicographic list of pairs of [n].
std::size_t pair_rank(int i, int j, int n);

using PairSet = std::bitset<kMaxPairs>;

/// A permutation of [n] read as a ranking, first element least: (3,4,2,1,5)
/// is 3 < 4 < 2 < 1 < 5.
class LinearOrder {
 public:
  /// Throws std::invalid_argument if seq is not a permutation of [n].
  explicit LinearOrder(std::vector<int> seq);

  static LinearOrder identity(int n);
  static LinearOrder reversal(int n);

  int n() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }
  /// 0-based position of color c in the sequence.
  int position(int c) const { return position_[static_cast<std::size_t>(c)]; }
  /// Pairs (i,j), i<j, with j placed before i.
  const PairSet& inversions() const { return inversions_; }
  bool inverted(int i, int j) const { return position(j) < position(i); }

  LinearOrder reversed() const;
  /// The order induced on an increasing color subset, relabeled onto [|K|].
  LinearOrder restricted(const std::vector<int>& colors) const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.seq_ == b.seq_; }
  friend bool operator<(const LinearOrder& a, const LinearOrder& b) { return a.seq_ < b.seq_; }

 private:
  std::vector<int> seq_;
  std::vector<int> position_;
  PairSet inversions_;
};

/// Inverted pairs of a permutation, as (i,j) with i<j, lexicographic.
std::vector<std::pair<int, int>> order_inversions(const std::vector<int>& seq);

/// For every triple i<j<k, the inverted pairs among (ij, ik, jk) form a
/// terminal segment of that sequence when ijk is in Inv(T), and an initial
/// segment when it is not.
bool is_compatible_order(const LinearOrder& order, const Tiling& t);

/// Largest n for which sigma() enumerates all n! orders.
inline constexpr int kSigmaCap = 9;

/// Σ(T): all compatible linear orders, ascending by sequence.
std::vector<LinearOrder> sigma(const Tiling& t);

struct CondorcetWitness {
  std::array<std::size_t, 3> orders{};  // indices into the domain
  std::array<int, 3> candidates{};      // a < b < c
};

/// Orders must share n. nullopt means no three orders of the domain produce a
/// majority cycle on any three candidates.
std::optional<CondorcetWitness> find_condorcet_cycle(const std::vector<LinearOrder>& domain);
inline bool is_condorcet_domain(const std::vector<LinearOrder>& domain) {
  return !find_condorcet_cycle(domain).has_value();
}

/// "3,4,2,1,5".
std::string to_string(const LinearOrder& order);

}  // namespace rhombus
