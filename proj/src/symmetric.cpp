#include "rhombus/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

#include "rhombus/config.hpp"
#include "rhombus/text_io.hpp"

namespace rhombus {

SplitSequence::SplitSequence(int n, std::vector<int> seq) : n_(n), seq_(std::move(seq)) {
  require_color_count(n);
  std::vector<int> sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == static_cast<std::size_t>(n - 2);
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i) + 2;
  if (!ok)
    throw std::invalid_argument("sequence " + join_ints(seq_) + " is not a permutation of [2.." +
                                std::to_string(n - 1) + "]");
}

InversionSet straddle_part(int j, int p, int q, int n) {
  require_color_count(n);
  if (!(1 <= p && p < j && j < q && q <= n))
    throw std::invalid_argument("straddle part needs 1 <= p < j < q <= n");
  InversionSet s(n);
  const Lambda& lam = lambda(n);
  for (std::size_t r = 0; r < lam.size(); ++r) {
    const Triple& t = lam.triple(r);
    if (p <= t.i && t.k <= q && t.i < j && j < t.k) s.set(r);
  }
  return s;
}

LambdaPartition symmetric_partition(const SplitSequence& s) {
  const int n = s.n();
  LambdaPartition out{n, {}};
  // Active intervals of inner colors, as [lo, hi].
  std::vector<std::pair<int, int>> active{{2, n - 1}};
  for (int j : s.seq()) {
    const auto it = std::find_if(active.begin(), active.end(),
                                 [j](const auto& iv) { return iv.first <= j && j <= iv.second; });
    const auto [lo, hi] = *it;
    active.erase(it);
    out.parts.emplace(j, Tiling(straddle_part(j, lo - 1, hi + 1, n)));
    if (lo <= j - 1) active.emplace_back(lo, j - 1);
    if (j + 1 <= hi) active.emplace_back(j + 1, hi);
  }
  return out;
}

void validate_partition(const LambdaPartition& p) {
  InversionSet seen(p.n);
  for (const auto& [j, part] : p.parts) {
    if (part.n() != p.n) throw std::invalid_argument("partition part over a different n");
    if (!(part.inv() & seen).empty())
      throw std::invalid_argument("partition part " + std::to_string(j) + " overlaps another");
    seen |= part.inv();
  }
  if (seen != InversionSet::full(p.n)) throw std::invalid_argument("partition does not cover Λ");
}

SuperDomain boolean_csd(const LambdaPartition& p) {
  validate_partition(p);
  std::vector<const Tiling*> parts;
  for (const auto& [j, part] : p.parts) parts.push_back(&part);
  if (parts.size() > 20) throw std::out_of_range("too many parts");

  std::vector<Tiling> members;
  const std::uint32_t subsets = std::uint32_t{1} << parts.size();
  for (std::uint32_t s = 0; s < subsets; ++s) {
    InversionSet u(p.n);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (s >> i & 1u) u |= parts[i]->inv();
    members.emplace_back(std::move(u));
  }
  return SuperDomain(p.n, std::move(members));
}

std::string format_partition(const LambdaPartition& p) {
  std::string out;
  for (const auto& [j, part] : p.parts)
    out += std::to_string(j) + ": " + to_triple_list(part.inv()) + "\n";
  return out;
}

}  // namespace rhombus
