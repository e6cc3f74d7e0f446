#include "rhombus/tiling.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "rhombus/config.hpp"
#include "rhombus/kernels.hpp"
#include "rhombus/text_io.hpp"

namespace rhombus {

ZieglerVerdict is_tiling(const InversionSet& p) {
  const auto stick_list = lambda(p.n()).sticks();
  for (std::size_t s = 0; s < stick_list.size(); ++s)
    if (!stick_pattern_ok(p.stick_pattern(stick_list[s]))) return {false, s};
  return {};
}

bool can_add(const InversionSet& tiling, std::size_t rank) {
  const Lambda& lam = lambda(tiling.n());
  InversionSet up = tiling;
  up.set(rank);
  for (auto s : lam.sticks_containing(rank))
    if (!stick_pattern_ok(up.stick_pattern(lam.sticks()[s]))) return false;
  return true;
}

bool can_remove(const InversionSet& tiling, std::size_t rank) {
  const Lambda& lam = lambda(tiling.n());
  InversionSet down = tiling;
  down.reset(rank);
  for (auto s : lam.sticks_containing(rank))
    if (!stick_pattern_ok(down.stick_pattern(lam.sticks()[s]))) return false;
  return true;
}

NotATiling::NotATiling(const InversionSet& p, std::size_t stick)
    : std::invalid_argument("pseudo-tiling " + to_bits(p) + " violates Ziegler on stick " +
                            stick_label(lambda(p.n()).sticks()[stick])),
      stick_(stick) {}

Tiling::Tiling(InversionSet inv) : inv_(std::move(inv)) {
  const auto verdict = is_tiling(inv_);
  if (!verdict) throw NotATiling(inv_, *verdict.failing_stick);
}

Tiling trusted_tiling(InversionSet inv) { return Tiling(std::move(inv), Tiling::Trusted{}); }

Tiling Tiling::standard(int n) { return trusted_tiling(InversionSet(n)); }

Tiling Tiling::anti_standard(int n) { return trusted_tiling(InversionSet::full(n)); }

Tiling Tiling::opposite() const { return trusted_tiling(inv_.complement()); }

void sort_canonical(std::vector<Tiling>& tilings) {
  std::sort(tilings.begin(), tilings.end(),
            [](const Tiling& a, const Tiling& b) { return canonical_less(a, b); });
}

InversionSet restrict(const InversionSet& p, std::span<const int> colors) {
  const auto map = restriction_map(colors, p.n());
  InversionSet out(static_cast<int>(colors.size()));
  for (std::size_t r = 0; r < map.size(); ++r)
    if (p.test(map[r])) out.set(r);
  return out;
}

Tiling restrict(const Tiling& t, std::span<const int> colors) {
  return trusted_tiling(restrict(t.inv(), colors));
}

Tiling interval_tiling(int a, int b, int n) {
  require_color_count(n);
  if (a < 1 || b > n || a > b)
    throw std::out_of_range("interval [" + std::to_string(a) + ".." + std::to_string(b) +
                            "] not contained in [1.." + std::to_string(n) + "]");
  InversionSet s(n);
  const Lambda& lam = lambda(n);
  for (std::size_t r = 0; r < lam.size(); ++r) {
    const Triple& t = lam.triple(r);
    if (a <= t.i && t.k <= b) s.set(r);
  }
  return trusted_tiling(s);
}

std::vector<Triple> raising_flips(const Tiling& t) {
  std::vector<Triple> out;
  const Lambda& lam = lambda(t.n());
  for (std::size_t r = 0; r < lam.size(); ++r)
    if (!t.inv().test(r) && can_add(t.inv(), r)) out.push_back(lam.triple(r));
  return out;
}

Tiling flip(const Tiling& t, const Triple& triple) {
  const std::size_t r = triple_rank(triple, t.n());
  if (t.inv().test(r) || !can_add(t.inv(), r))
    throw std::invalid_argument("triple " + to_string(triple) + " is not a raising flip of " +
                                to_bits(t.inv()));
  InversionSet up = t.inv();
  up.set(r);
  return trusted_tiling(up);
}

EnumerationCapExceeded::EnumerationCapExceeded(int n, int cap)
    : std::out_of_range("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(cap)) {}

namespace {

template <typename T>
class PerNCache {
 public:
  template <typename Make>
  const T& get(int n, Make make) {
    std::lock_guard lock(mutex_);
    auto& slot = slots_.at(static_cast<std::size_t>(n));
    if (!slot) slot = std::make_unique<const T>(make());
    return *slot;
  }

 private:
  std::mutex mutex_;
  std::array<std::unique_ptr<const T>, kMaxColors + 1> slots_;
};

void require_enumerable(int n) {
  require_color_count(n);
  if (n > enumeration_cap()) throw EnumerationCapExceeded(n, enumeration_cap());
}

}  // namespace

const std::vector<Tiling>& enumerate_all(int n) {
  require_enumerable(n);
  static PerNCache<std::vector<Tiling>> cache;
  return cache.get(n, [n] {
    std::vector<Tiling> out;
    for (auto& inv : kernels::bfs_tilings(n, kernels::Exec::parallel))
      out.push_back(trusted_tiling(std::move(inv)));
    return out;
  });
}

FlipGraph::FlipGraph(int n) : n_(n), vertices_(&enumerate_all(n)) {
  const auto& verts = *vertices_;
  std::unordered_map<InversionSet, std::size_t> index;
  index.reserve(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) index.emplace(verts[v].inv(), v);

  adjacency_.resize(verts.size());
  const std::size_t width = choose3(n);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const InversionSet& inv = verts[v].inv();
    for (std::size_t r = 0; r < width; ++r) {
      if (inv.test(r) || !can_add(inv, r)) continue;
      InversionSet up = inv;
      up.set(r);
      const std::size_t w = index.at(up);
      edges_.push_back({v, w, r});
      adjacency_[v].push_back(w);
      adjacency_[w].push_back(v);
    }
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<std::size_t> FlipGraph::index_of(const InversionSet& inv) const {
  if (inv.n() != n_) return std::nullopt;
  const auto& verts = *vertices_;
  auto it = std::lower_bound(
      verts.begin(), verts.end(), inv,
      [](const Tiling& t, const InversionSet& key) { return canonical_less(t.inv(), key); });
  if (it == verts.end() || it->inv() != inv) return std::nullopt;
  return static_cast<std::size_t>(it - verts.begin());
}

std::vector<int> FlipGraph::distances_from(std::size_t source) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adjacency_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

const FlipGraph& flip_graph(int n) {
  require_enumerable(n);
  static PerNCache<FlipGraph> cache;
  return cache.get(n, [n] { return FlipGraph(n); });
}

std::string to_dot(const FlipGraph& g) {
  std::string out = "digraph flips_n" + std::to_string(g.n()) + " {\n";
  const auto& verts = g.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + to_bits(verts[v].inv()) + "\"];\n";
  const Lambda& lam = lambda(g.n());
  for (const FlipEdge& e : g.edges())
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
           to_string(lam.triple(e.triple)) + "\"];\n";
  out += "}\n";
  return out;
}

std::vector<Tiling> lattice_interval(const Tiling& a, const Tiling& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tilings over different color counts");
  const auto& all = enumerate_all(a.n());
  const InversionSet lo = a.inv() & b.inv();
  const InversionSet hi = a.inv() | b.inv();
  std::vector<Tiling> out;
  for (const Tiling& t : all)
    if (lo.is_subset_of(t.inv()) && t.inv().is_subset_of(hi)) out.push_back(t);
  return out;
}

std::vector<Tiling> geodesic_interval(const Tiling& a, const Tiling& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tilings over different color counts");
  const FlipGraph& g = flip_graph(a.n());
  const std::size_t ia = *g.index_of(a.inv());
  const std::size_t ib = *g.index_of(b.inv());
  const auto from_a = g.distances_from(ia);
  const auto from_b = g.distances_from(ib);
  const int d = from_a[ib];
  std::vector<Tiling> out;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (from_a[v] + from_b[v] == d) out.push_back(g.vertices()[v]);
  return out;
}

std::vector<Triple> basis(const Tiling& t) {
  std::vector<Triple> out;
  for (int j = 2; j <= t.n() - 1; ++j)
    if (t.contains(ext(j))) out.push_back(ext(j));
  return out;
}

}  // namespace rhombus
