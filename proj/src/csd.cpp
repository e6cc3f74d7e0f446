#include "rhombus/csd.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "rhombus/text_io.hpp"

namespace rhombus {

SuperDomain::SuperDomain(int n, std::vector<Tiling> members)
    : n_(n), members_(std::move(members)) {
  for (const auto& t : members_)
    if (t.n() != n_) throw std::invalid_argument("super-domain member over a different n");
  sort_canonical(members_);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SuperDomain::contains(const Tiling& t) const {
  return std::binary_search(members_.begin(), members_.end(), t,
                            [](const Tiling& a, const Tiling& b) { return canonical_less(a, b); });
}

std::vector<InversionSet> SuperDomain::inversion_sets() const {
  std::vector<InversionSet> out;
  out.reserve(members_.size());
  for (const auto& t : members_) out.push_back(t.inv());
  return out;
}

SuperDomain SuperDomain::restricted(std::span<const int> colors) const {
  std::vector<Tiling> out;
  out.reserve(members_.size());
  for (const auto& t : members_) out.push_back(restrict(t, colors));
  return SuperDomain(static_cast<int>(colors.size()), std::move(out));
}

SuperDomain SuperDomain::with(const Tiling& extra) const {
  auto members = members_;
  members.push_back(extra);
  return SuperDomain(n_, std::move(members));
}

bool compatible(const Tiling& a, const Tiling& b) {
  return is_tiling(a.inv() & b.inv()).holds && is_tiling(a.inv() | b.inv()).holds;
}

std::optional<PairWitness> find_incompatible_pair(const SuperDomain& d) {
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b)
      if (!compatible(d[a], d[b])) return PairWitness{a, b};
  return std::nullopt;
}

bool is_normal(const SuperDomain& d) {
  return d.contains(Tiling::standard(d.n())) && d.contains(Tiling::anti_standard(d.n()));
}

namespace {

std::optional<MedianWitness> as_witness(const std::vector<InversionSet>& sets,
                                        const std::optional<kernels::Triad>& t) {
  if (!t) return std::nullopt;
  return MedianWitness{{t->a, t->b, t->c}, median3(sets[t->a], sets[t->b], sets[t->c])};
}

}  // namespace

std::optional<MedianWitness> find_csd_violation(const SuperDomain& d, kernels::Exec exec) {
  const auto sets = d.inversion_sets();
  return as_witness(sets, kernels::first_non_tiling_median(sets, exec));
}

std::optional<std::array<int, 4>> find_quadruple_violation(const SuperDomain& d) {
  if (d.n() < 4) {
    // Λ has a single triple, so every median is a tiling.
    return std::nullopt;
  }
  const int n = d.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const std::array<int, 4> quad{i, j, k, l};
          const SuperDomain small = d.restricted(quad);
          if (find_csd_violation(small, kernels::Exec::serial)) return quad;
        }
  return std::nullopt;
}

std::optional<MedianWitness> find_closure_violation(const SuperDomain& d, kernels::Exec exec) {
  const auto sets = d.inversion_sets();
  std::unordered_set<InversionSet> members(sets.begin(), sets.end());
  return as_witness(sets, kernels::first_rejected_median(
                              sets, [&](const InversionSet& m) { return members.count(m) > 0; },
                              exec));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

MaximalityResult is_maximal_csd(const SuperDomain& d,
                                std::optional<std::chrono::duration<double>> budget) {
  MaximalityResult result;
  if (auto v = find_csd_violation(d)) {
    result.verdict = Verdict::fails;
    result.is_csd = false;
    result.violation = std::move(v);
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto& all = enumerate_all(d.n());
  const auto sets = d.inversion_sets();

  // d is already a CSD, so only triples through the candidate need checking.
  auto addable = [&](const Tiling& cand) {
    for (std::size_t a = 0; a < sets.size(); ++a)
      for (std::size_t b = a + 1; b < sets.size(); ++b)
        if (!is_tiling(median3(sets[a], sets[b], cand.inv()))) return false;
    return true;
  };

  constexpr std::size_t chunk = 256;
  for (std::size_t lo = 0; lo < all.size(); lo += chunk) {
    if (budget && std::chrono::steady_clock::now() - start > *budget) {
      result.verdict = Verdict::unknown;
      return result;
    }
    const std::size_t hi = std::min(all.size(), lo + chunk);
    const auto hits = kernels::filter_indices(
        hi - lo,
        [&](std::size_t i) {
          const Tiling& cand = all[lo + i];
          return !d.contains(cand) && addable(cand);
        },
        kernels::Exec::parallel);
    if (!hits.empty()) {
      result.verdict = Verdict::fails;
      result.extension = all[lo + hits.front()];
      return result;
    }
  }
  return result;
}

std::vector<SuperDomain> enumerate_maximal_csds(int n) {
  const auto& all = enumerate_all(n);
  if (all.size() > 20)
    throw std::out_of_range("exhaustive maximal-CSD search is limited to n <= 4");
  const std::size_t count = all.size();
  const std::uint32_t subsets = std::uint32_t{1} << count;

  auto domain_of = [&](std::uint32_t mask) {
    std::vector<Tiling> members;
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1u) members.push_back(all[i]);
    return SuperDomain(n, std::move(members));
  };

  std::vector<char> csd(subsets, 0);
  for (std::uint32_t mask = 0; mask < subsets; ++mask)
    csd[mask] = find_csd_violation(domain_of(mask), kernels::Exec::serial) ? 0 : 1;

  std::vector<SuperDomain> out;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!csd[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < count && maximal; ++i)
      if (!(mask >> i & 1u) && csd[mask | (std::uint32_t{1} << i)]) maximal = false;
    if (maximal) out.push_back(domain_of(mask));
  }
  return out;
}

SuperDomain read_super_domain(std::istream& in) {
  SetFile file = read_set_file(in);
  std::vector<Tiling> members;
  for (auto& s : file.sets) members.emplace_back(std::move(s));
  return SuperDomain(file.n, std::move(members));
}

SuperDomain read_super_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_super_domain(in);
}

void write_super_domain(std::ostream& out, const SuperDomain& d) {
  write_set_file(out, d.n(), d.inversion_sets());
}

}  // namespace rhombus
