#include "rhombus/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "rhombus/tiling.hpp"

namespace rhombus::kernels {

namespace {

void sort_unique(std::vector<InversionSet>& v) {
  std::sort(v.begin(), v.end(),
            [](const InversionSet& a, const InversionSet& b) { return canonical_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<InversionSet> bfs_serial(int n) {
  const std::size_t width = choose3(n);
  std::unordered_set<InversionSet> seen;
  std::deque<InversionSet> queue;
  InversionSet start(n);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    InversionSet cur = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < width; ++r) {
      if (cur.test(r) || !can_add(cur, r)) continue;
      InversionSet next = cur;
      next.set(r);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<InversionSet> out(seen.begin(), seen.end());
  sort_unique(out);
  return out;
}

// Raising flips move rank r to r+1, so the closure is built one rank level at
// a time; each level is expanded in parallel and deduplicated by sorting.
std::vector<InversionSet> bfs_parallel(int n) {
  const std::size_t width = choose3(n);
  std::vector<InversionSet> all;
  std::vector<InversionSet> level{InversionSet(n)};
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::vector<InversionSet> next;
#pragma omp parallel
    {
      std::vector<InversionSet> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(level.size()); ++idx) {
        const InversionSet& cur = level[static_cast<std::size_t>(idx)];
        for (std::size_t r = 0; r < width; ++r) {
          if (cur.test(r) || !can_add(cur, r)) continue;
          InversionSet up = cur;
          up.set(r);
          local.push_back(up);
        }
      }
#pragma omp critical(rhombus_bfs_merge)
      next.insert(next.end(), local.begin(), local.end());
    }
    sort_unique(next);
    level = std::move(next);
  }
  return all;
}

InversionSet from_mask(int n, std::uint64_t mask) {
  InversionSet s(n);
  for (std::size_t r = 0; mask != 0; ++r, mask >>= 1)
    if (mask & 1u) s.set(r);
  return s;
}

}  // namespace

std::vector<InversionSet> bfs_tilings(int n, Exec exec) {
  return exec == Exec::serial ? bfs_serial(n) : bfs_parallel(n);
}

std::vector<InversionSet> brute_force_tilings(int n, Exec exec) {
  if (n < 3 || n > 6) throw std::out_of_range("brute-force enumeration supports 3 <= n <= 6");
  const std::uint64_t total = std::uint64_t{1} << choose3(n);
  const auto& stick_list = lambda(n).sticks();

  auto ok = [&](std::uint64_t mask) {
    for (const Stick& s : stick_list) {
      const unsigned p = unsigned((mask >> s.members[0]) & 1u) << 3 |
                         unsigned((mask >> s.members[1]) & 1u) << 2 |
                         unsigned((mask >> s.members[2]) & 1u) << 1 |
                         unsigned((mask >> s.members[3]) & 1u);
      if (!stick_pattern_ok(p)) return false;
    }
    return true;
  };

  std::vector<std::uint64_t> masks;
  if (exec == Exec::serial) {
    for (std::uint64_t m = 0; m < total; ++m)
      if (ok(m)) masks.push_back(m);
  } else {
    const int threads = omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> per_thread(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m)
        if (ok(static_cast<std::uint64_t>(m))) local.push_back(static_cast<std::uint64_t>(m));
    }
    for (auto& v : per_thread) masks.insert(masks.end(), v.begin(), v.end());
  }

  std::vector<InversionSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(from_mask(n, m));
  sort_unique(out);
  return out;
}

std::optional<Triad> first_rejected_median(
    std::span<const InversionSet> members,
    const std::function<bool(const InversionSet&)>& accept, Exec exec) {
  const std::size_t size = members.size();
  if (size < 3) return std::nullopt;

  auto scan_from = [&](std::size_t a) -> std::optional<Triad> {
    for (std::size_t b = a + 1; b < size; ++b)
      for (std::size_t c = b + 1; c < size; ++c)
        if (!accept(median3(members[a], members[b], members[c]))) return Triad{a, b, c};
    return std::nullopt;
  };

  if (exec == Exec::serial) {
    for (std::size_t a = 0; a + 2 < size; ++a)
      if (auto hit = scan_from(a)) return hit;
    return std::nullopt;
  }

  // Each outer index finds its own first failure; the smallest outer index wins.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_a{none};
  std::vector<std::optional<Triad>> found(size);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(size) - 2; ++ia) {
    const auto a = static_cast<std::size_t>(ia);
    if (a > best_a.load(std::memory_order_relaxed)) continue;
    if (auto hit = scan_from(a)) {
      found[a] = hit;
      std::size_t cur = best_a.load();
      while (a < cur && !best_a.compare_exchange_weak(cur, a)) {
      }
    }
  }
  const std::size_t a = best_a.load();
  if (a == none) return std::nullopt;
  return found[a];
}

std::optional<Triad> first_non_tiling_median(std::span<const InversionSet> members, Exec exec) {
  return first_rejected_median(
      members, [](const InversionSet& m) { return is_tiling(m).holds; }, exec);
}

std::vector<std::size_t> filter_indices(std::size_t count,
                                        const std::function<bool(std::size_t)>& keep,
                                        Exec exec) {
  std::vector<std::size_t> out;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (keep(i)) out.push_back(i);
    return out;
  }
  std::vector<char> flags(count, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i)
    flags[static_cast<std::size_t>(i)] = keep(static_cast<std::size_t>(i)) ? 1 : 0;
  for (std::size_t i = 0; i < count; ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

}  // namespace rhombus::kernels
