#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rhombus/tiling.hpp"

namespace rhombus {

/// One tiling per voter, all over the same n.
class Profile {
 public:
  /// Throws std::invalid_argument on an empty vote list or mixed n.
  explicit Profile(std::vector<Tiling> votes);

  int n() const { return votes_.front().n(); }
  std::size_t size() const { return votes_.size(); }
  const std::vector<Tiling>& votes() const { return votes_; }

  /// Every vote replaced by its opposite.
  Profile opposite() const;

 private:
  std::vector<Tiling> votes_;
};

/// Triples held by strictly more than half the voters. The voter count must be odd.
InversionSet simple_majority(const Profile& p);

/// A coalition is a bitmask over voters 0..voter_count-1.
using Coalition = std::uint32_t;

inline constexpr int kMaxVoters = 16;

/// A family of "big" coalitions, stored as a membership table over all 2^|V| subsets.
class MajoritySystem {
 public:
  MajoritySystem(int voter_count, const std::vector<Coalition>& big_coalitions);

  static MajoritySystem dictatorship(int voter_count, int dictator);
  /// Big iff more than half the voters; |V| odd.
  static MajoritySystem simple(int voter_count);
  /// Big iff the coalition's weight exceeds half the total weight.
  static MajoritySystem weighted(const std::vector<int>& weights);

  int voter_count() const { return voters_; }
  Coalition everyone() const { return static_cast<Coalition>((std::uint64_t{1} << voters_) - 1); }
  bool is_big(Coalition s) const { return big_[s] != 0; }
  std::vector<Coalition> big_coalitions() const;

 private:
  int voters_;
  std::vector<char> big_;
};

struct SystemVerdict {
  bool holds = true;
  std::string axiom;                  // "monotonicity" or "deciding" on failure
  std::optional<Coalition> witness;   // lowest failing coalition
  explicit operator bool() const { return holds; }
};

/// Monotone (supersets of big coalitions are big) and deciding (S big iff its
/// complement is not).
SystemVerdict validate_majority_system(const MajoritySystem& f);

/// Triple set iff the coalition of voters holding it is big.
InversionSet aggregate_with_system(const Profile& p, const MajoritySystem& f);

/// ∪ over big M of ∩_{v∈M} Inv(T_v): the same aggregate, computed coalition-wise.
InversionSet aggregate_union_of_intersections(const Profile& p, const MajoritySystem& f);

/// Header "n=<k>", one tiling per line. Non-tilings raise NotATiling.
Profile read_profile(std::istream& in);
Profile read_profile(const std::string& path);

/// One coalition per line written as a 0/1 string, character v for voter v.
/// All lines must have equal length, which fixes |V|.
MajoritySystem read_majority_system(std::istream& in);
MajoritySystem read_majority_system(const std::string& path);
std::string coalition_to_string(Coalition s, int voter_count);

}  // namespace rhombus
