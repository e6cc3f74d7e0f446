#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rhombus/kernels.hpp"
#include "rhombus/tiling.hpp"

namespace rhombus {

/// A set of tilings of one zonogon, deduplicated and in canonical order.
class SuperDomain {
 public:
  SuperDomain(int n, std::vector<Tiling> members);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Tiling>& members() const { return members_; }
  const Tiling& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const Tiling& t) const;
  std::vector<InversionSet> inversion_sets() const;

  /// The restricted members {T|K}, deduplicated.
  SuperDomain restricted(std::span<const int> colors) const;
  SuperDomain with(const Tiling& extra) const;

  friend bool operator==(const SuperDomain&, const SuperDomain&) = default;

 private:
  int n_;
  std::vector<Tiling> members_;
};

/// T ∩ T' and T ∪ T' are both tilings.
bool compatible(const Tiling& a, const Tiling& b);

struct PairWitness {
  std::size_t a = 0;
  std::size_t b = 0;
};
std::optional<PairWitness> find_incompatible_pair(const SuperDomain& d);
inline bool is_clique(const SuperDomain& d) { return !find_incompatible_pair(d).has_value(); }

/// Contains the standard and anti-standard tilings.
bool is_normal(const SuperDomain& d);

/// Members a < b < c (canonical positions) and their median.
struct MedianWitness {
  std::array<std::size_t, 3> members{};
  InversionSet median;
};

/// First triple of distinct members whose median is not a tiling.
std::optional<MedianWitness> find_csd_violation(const SuperDomain& d,
                                                kernels::Exec exec = kernels::Exec::parallel);
inline bool is_csd(const SuperDomain& d) { return !find_csd_violation(d).has_value(); }

/// First color quadruple whose restricted super-domain (at n=4) is not a CSD.
std::optional<std::array<int, 4>> find_quadruple_violation(const SuperDomain& d);
inline bool is_csd_via_quadruples(const SuperDomain& d) {
  return !find_quadruple_violation(d).has_value();
}

/// First triple of distinct members whose median is not itself a member.
std::optional<MedianWitness> find_closure_violation(const SuperDomain& d,
                                                    kernels::Exec exec = kernels::Exec::parallel);
inline bool is_closed(const SuperDomain& d) { return !find_closure_violation(d).has_value(); }

enum class Verdict { holds, fails, unknown };
std::string to_string(Verdict v);

struct MaximalityResult {
  Verdict verdict = Verdict::holds;
  bool is_csd = true;
  /// When the domain is a CSD but not maximal: the canonically first addable tiling.
  std::optional<Tiling> extension;
  /// When the domain is not a CSD at all.
  std::optional<MedianWitness> violation;
};

/// Exhaustive over enumerate_all(n). With a budget, stops with Verdict::unknown
/// once it is exceeded.
MaximalityResult is_maximal_csd(const SuperDomain& d,
                                std::optional<std::chrono::duration<double>> budget = {});

/// All inclusion-maximal CSDs of Z(n;2) by exhaustive search over subsets of
/// the tilings. Feasible for n <= 4 only.
std::vector<SuperDomain> enumerate_maximal_csds(int n);

/// Header "n=<k>", one tiling per line.
SuperDomain read_super_domain(std::istream& in);
SuperDomain read_super_domain(const std::string& path);
void write_super_domain(std::ostream& out, const SuperDomain& d);

}  // namespace rhombus
