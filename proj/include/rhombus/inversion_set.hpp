#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rhombus/lambda.hpp"

namespace rhombus {

/// A subset of Λ(n) (a pseudo-tiling), one bit per lexicographic triple rank.
class InversionSet {
 public:
  static constexpr std::size_t kWords = (kMaxTriples + 63) / 64;

  InversionSet() = default;
  explicit InversionSet(int n);

  static InversionSet full(int n);
  static InversionSet from_triples(int n, const std::vector<Triple>& triples);

  int n() const { return n_; }
  std::size_t width() const { return choose3(n_); }

  bool test(std::size_t rank) const { return (words_[rank >> 6] >> (rank & 63)) & 1u; }
  void set(std::size_t rank) { words_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  void reset(std::size_t rank) { words_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63)); }
  bool contains(const Triple& t) const { return test(triple_rank(t, n_)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }

  /// Four-bit pattern of a stick, first member in the most significant bit.
  unsigned stick_pattern(const Stick& s) const {
    return (unsigned(test(s.members[0])) << 3) | (unsigned(test(s.members[1])) << 2) |
           (unsigned(test(s.members[2])) << 1) | unsigned(test(s.members[3]));
  }

  InversionSet complement() const;
  bool is_subset_of(const InversionSet& other) const;

  InversionSet& operator&=(const InversionSet& o);
  InversionSet& operator|=(const InversionSet& o);
  InversionSet& operator^=(const InversionSet& o);
  friend InversionSet operator&(InversionSet a, const InversionSet& b) { return a &= b; }
  friend InversionSet operator|(InversionSet a, const InversionSet& b) { return a |= b; }
  friend InversionSet operator^(InversionSet a, const InversionSet& b) { return a ^= b; }

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

  std::vector<Triple> triples() const;
  std::vector<std::size_t> ranks() const;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }
  std::size_t hash() const;

 private:
  void require_same_n(const InversionSet& o) const;

  int n_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order: size (rank) first, then bitstring with rank 0 leftmost.
bool canonical_less(const InversionSet& a, const InversionSet& b);

/// (a ∩ b) ∪ (b ∩ c) ∪ (c ∩ a).
InversionSet median3(const InversionSet& a, const InversionSet& b, const InversionSet& c);

/// a ∩ b ⊆ r ⊆ a ∪ b.
bool lies_between(const InversionSet& r, const InversionSet& a, const InversionSet& b);

}  // namespace rhombus

template <>
struct std::hash<rhombus::InversionSet> {
  std::size_t operator()(const rhombus::InversionSet& s) const noexcept { return s.hash(); }
};
