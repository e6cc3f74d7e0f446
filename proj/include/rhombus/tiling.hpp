#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhombus/inversion_set.hpp"
#include "rhombus/lambda.hpp"

namespace rhombus {

/// True for the eight stick patterns a tiling may show: a run of 1s anchored at
/// either end of the stick (∅ and the full stick count as both).
constexpr bool stick_pattern_ok(unsigned pattern) {
  switch (pattern & 0xFu) {
    case 0b0000: case 0b1000: case 0b1100: case 0b1110: case 0b1111:
    case 0b0001: case 0b0011: case 0b0111:
      return true;
    default:
      return false;
  }
}

struct ZieglerVerdict {
  bool holds = true;
  /// Index into lambda(n).sticks() of the first violating stick.
  std::optional<std::size_t> failing_stick;

  explicit operator bool() const { return holds; }
};

/// Ziegler's criterion, stick by stick.
ZieglerVerdict is_tiling(const InversionSet& p);

/// Adding `rank` to a tiling keeps it a tiling iff every stick through it stays valid.
bool can_add(const InversionSet& tiling, std::size_t rank);
bool can_remove(const InversionSet& tiling, std::size_t rank);

class NotATiling : public std::invalid_argument {
 public:
  NotATiling(const InversionSet& p, std::size_t stick);
  std::size_t stick() const { return stick_; }

 private:
  std::size_t stick_;
};

/// An inversion set that satisfies Ziegler's criterion.
class Tiling {
 public:
  /// Throws NotATiling.
  explicit Tiling(InversionSet inv);

  static Tiling standard(int n);
  static Tiling anti_standard(int n);

  int n() const { return inv_.n(); }
  std::size_t rank() const { return inv_.count(); }
  const InversionSet& inv() const { return inv_; }
  bool contains(const Triple& t) const { return inv_.contains(t); }

  Tiling opposite() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  struct Trusted {};
  Tiling(InversionSet inv, Trusted) : inv_(std::move(inv)) {}
  friend Tiling trusted_tiling(InversionSet inv);

  InversionSet inv_;
};

/// For inversion sets known to satisfy Ziegler (enumeration output, flips).
Tiling trusted_tiling(InversionSet inv);

inline bool canonical_less(const Tiling& a, const Tiling& b) {
  return canonical_less(a.inv(), b.inv());
}
void sort_canonical(std::vector<Tiling>& tilings);

/// P ∩ Λ(K), relabeled onto [|K|]. K strictly increasing, |K| >= 3.
InversionSet restrict(const InversionSet& p, std::span<const int> colors);
Tiling restrict(const Tiling& t, std::span<const int> colors);

/// All triples ijk with a <= i < k <= b; the standard tiling when b - a < 2.
Tiling interval_tiling(int a, int b, int n);

std::vector<Triple> raising_flips(const Tiling& t);
/// Throws std::invalid_argument if t + triple is not a tiling.
Tiling flip(const Tiling& t, const Triple& triple);

class EnumerationCapExceeded : public std::out_of_range {
 public:
  EnumerationCapExceeded(int n, int cap);
};

/// Every tiling of Z(n;2), canonical order (rank, then bitstring). Memoized.
const std::vector<Tiling>& enumerate_all(int n);

struct FlipEdge {
  std::size_t from = 0;  // vertex index, smaller inversion set
  std::size_t to = 0;
  std::size_t triple = 0;  // rank of the flipped triple
};

class FlipGraph {
 public:
  explicit FlipGraph(int n);

  int n() const { return n_; }
  const std::vector<Tiling>& vertices() const { return *vertices_; }
  const std::vector<FlipEdge>& edges() const { return edges_; }
  std::optional<std::size_t> index_of(const InversionSet& inv) const;
  /// Undirected adjacency, ascending vertex indices.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  /// Breadth-first distances in the undirected graph.
  std::vector<int> distances_from(std::size_t source) const;

 private:
  int n_;
  const std::vector<Tiling>* vertices_;
  std::vector<FlipEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Memoized per n, like enumerate_all.
const FlipGraph& flip_graph(int n);

/// Vertices labeled by bitstring, edges by the flipped triple.
std::string to_dot(const FlipGraph& g);

/// All tilings R with T ∩ T' ⊆ R ⊆ T ∪ T'.
std::vector<Tiling> lattice_interval(const Tiling& a, const Tiling& b);
/// All tilings on some shortest flip-graph path between a and b.
std::vector<Tiling> geodesic_interval(const Tiling& a, const Tiling& b);

/// Dense triples ext(j) contained in the tiling, ascending j.
std::vector<Triple> basis(const Tiling& t);

}  // namespace rhombus
