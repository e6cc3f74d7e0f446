#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhombus/csd.hpp"

namespace rhombus {

enum class Orientation : std::uint8_t { direct, reverse };

/// One orientation per stick of [n], sticks in lexicographic order of quadruples.
class StickOrientations {
 public:
  StickOrientations(int n, std::vector<Orientation> per_stick);

  static StickOrientations uniform(int n, Orientation o);
  /// Bit s set means stick s is reversed. Needs C(n,4) <= 64.
  static StickOrientations from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  std::size_t size() const { return per_stick_.size(); }
  Orientation operator[](std::size_t stick) const { return per_stick_[stick]; }
  std::uint64_t mask() const;

  friend bool operator==(const StickOrientations&, const StickOrientations&) = default;

 private:
  int n_;
  std::vector<Orientation> per_stick_;
};

/// Edges between consecutive stick members, in each stick's orientation, sorted
/// and deduplicated (pairs of triple ranks).
std::vector<std::pair<std::size_t, std::size_t>> precedence_edges(const StickOrientations& o);

/// A directed cycle of the precedence digraph as triple ranks (first vertex not
/// repeated at the end), or nullopt when the digraph is acyclic.
std::optional<std::vector<std::size_t>> find_orientation_cycle(const StickOrientations& o);

class OrientationCycle : public std::invalid_argument {
 public:
  OrientationCycle(int n, std::vector<std::size_t> cycle);
  const std::vector<std::size_t>& cycle() const { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

/// The admissible partial order induced by acyclic stick orientations.
class AdmissibleOrder {
 public:
  /// Throws OrientationCycle.
  explicit AdmissibleOrder(const StickOrientations& o);

  int n() const { return orientations_.n(); }
  const StickOrientations& orientations() const { return orientations_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Strict: a ≺ b in the transitive closure.
  bool precedes(std::size_t a, std::size_t b) const { return above_[a].test(b); }
  /// Triples strictly above a.
  const InversionSet& above(std::size_t a) const { return above_[a]; }

 private:
  StickOrientations orientations_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<InversionSet> above_;
};

inline AdmissibleOrder precedence_digraph(const StickOrientations& o) { return AdmissibleOrder(o); }

/// Vertices labeled "ijk".
std::string to_dot(const AdmissibleOrder& order);

/// T(⪯): tilings whose intersection with every stick is an initial segment of
/// the stick read in its orientation. Throws OrientationCycle.
SuperDomain cubillage_csd(const StickOrientations& o);

struct AdmissibilityResult {
  std::optional<StickOrientations> orientations;
  /// First stick whose members appear neither lexicographically nor anti-lexicographically.
  std::optional<std::size_t> failing_stick;
  explicit operator bool() const { return orientations.has_value(); }
};

/// seq lists every triple of Λ(n) exactly once (n inferred from its length).
/// Throws std::invalid_argument otherwise.
AdmissibilityResult validate_admissible(const std::vector<Triple>& seq);

/// The C(n,3)+1 prefixes of an admissible linear order on Λ.
/// Throws std::invalid_argument for an inadmissible sequence.
std::vector<Tiling> chain_from_linear(const std::vector<Triple>& seq);

/// The lexicographic order on Λ(n).
std::vector<Triple> lexicographic_order(int n);

/// Lines "ijkl:D" or "ijkl:R", every stick exactly once.
StickOrientations read_orientations(std::istream& in, int n);
StickOrientations read_orientations(const std::string& path, int n);
void write_orientations(std::ostream& out, const StickOrientations& o);

}  // namespace rhombus
