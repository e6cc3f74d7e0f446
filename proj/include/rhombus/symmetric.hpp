#pragma once

#include <map>
#include <string>
#include <vector>

#include "rhombus/csd.hpp"

namespace rhombus {

/// A permutation of the inner colors [2..n-1].
class SplitSequence {
 public:
  /// Throws std::invalid_argument unless seq is a permutation of [2..n-1].
  SplitSequence(int n, std::vector<int> seq);

  int n() const { return n_; }
  const std::vector<int>& seq() const { return seq_; }

 private:
  int n_;
  std::vector<int> seq_;
};

/// {abc : p <= a < b < c <= q, a < j < c}. Requires p < j < q.
InversionSet straddle_part(int j, int p, int q, int n);

/// Parts keyed by their defining inner color j.
struct LambdaPartition {
  int n = 0;
  std::map<int, Tiling> parts;

  friend bool operator==(const LambdaPartition&, const LambdaPartition&) = default;
};

/// Splits Λ into n-2 tilings. Each j, in sequence order, takes the straddle
/// part of the active interval I containing it (spanning ext(I)), and I is
/// replaced by its pieces left and right of j.
LambdaPartition symmetric_partition(const SplitSequence& s);

/// Throws std::invalid_argument unless the parts are pairwise disjoint tilings covering Λ.
void validate_partition(const LambdaPartition& p);

/// {∪_{j∈S} T_j : S ⊆ parts}.
SuperDomain boolean_csd(const LambdaPartition& p);

/// "j: <triple list>" per part, ascending j.
std::string format_partition(const LambdaPartition& p);

}  // namespace rhombus
