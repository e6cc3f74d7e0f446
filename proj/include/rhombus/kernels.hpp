#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rhombus/inversion_set.hpp"

// Data-parallel inner loops. Every kernel has a serial reference path with the
// same output; the parallel path must return identical results (including the
// choice of witness) so callers can switch freely.
namespace rhombus::kernels {

enum class Exec { serial, parallel };

/// Closure of the standard tiling under raising flips, canonical order.
std::vector<InversionSet> bfs_tilings(int n, Exec exec);

/// Ziegler filter over all 2^C(n,3) subsets of Λ, canonical order. n <= 6.
std::vector<InversionSet> brute_force_tilings(int n, Exec exec);

/// Positions a < b < c into a member list.
struct Triad {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  friend bool operator==(const Triad&, const Triad&) = default;
};

/// Lexicographically first triad of distinct members whose median fails
/// `accept`. nullopt when every median is accepted.
std::optional<Triad> first_rejected_median(
    std::span<const InversionSet> members,
    const std::function<bool(const InversionSet&)>& accept, Exec exec);

/// first_rejected_median with Ziegler's criterion as the acceptance test.
std::optional<Triad> first_non_tiling_median(std::span<const InversionSet> members, Exec exec);

/// Indices of the items for which keep(item) holds, ascending.
std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep,
                                        Exec exec);

}  // namespace rhombus::kernels
