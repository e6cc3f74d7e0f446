#include "rhombus/cubillage.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "rhombus/config.hpp"
#include "rhombus/kernels.hpp"
#include "rhombus/text_io.hpp"

namespace rhombus {

StickOrientations::StickOrientations(int n, std::vector<Orientation> per_stick)
    : n_(n), per_stick_(std::move(per_stick)) {
  require_color_count(n);
  if (per_stick_.size() != choose4(n))
    throw std::invalid_argument("expected " + std::to_string(choose4(n)) +
                                " stick orientations, got " + std::to_string(per_stick_.size()));
}

StickOrientations StickOrientations::uniform(int n, Orientation o) {
  return StickOrientations(n, std::vector<Orientation>(choose4(n), o));
}

StickOrientations StickOrientations::from_mask(int n, std::uint64_t mask) {
  const std::size_t count = choose4(n);
  if (count > 64) throw std::out_of_range("orientation masks need C(n,4) <= 64");
  if (count < 64 && (mask >> count) != 0) throw std::out_of_range("mask names a missing stick");
  std::vector<Orientation> per_stick(count);
  for (std::size_t s = 0; s < count; ++s)
    per_stick[s] = (mask >> s & 1u) ? Orientation::reverse : Orientation::direct;
  return StickOrientations(n, std::move(per_stick));
}

std::uint64_t StickOrientations::mask() const {
  if (per_stick_.size() > 64) throw std::out_of_range("orientation masks need C(n,4) <= 64");
  std::uint64_t m = 0;
  for (std::size_t s = 0; s < per_stick_.size(); ++s)
    if (per_stick_[s] == Orientation::reverse) m |= std::uint64_t{1} << s;
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> precedence_edges(const StickOrientations& o) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto stick_list = lambda(o.n()).sticks();
  for (std::size_t s = 0; s < stick_list.size(); ++s) {
    const auto& m = stick_list[s].members;
    for (std::size_t q = 0; q + 1 < 4; ++q) {
      if (o[s] == Orientation::direct)
        edges.emplace_back(m[q], m[q + 1]);
      else
        edges.emplace_back(m[q + 1], m[q]);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(int n,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(choose3(n));
  for (auto [a, b] : edges) adj[a].push_back(b);
  return adj;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_orientation_cycle(const StickOrientations& o) {
  const auto adj = adjacency(o.n(), precedence_edges(o));
  const std::size_t count = adj.size();
  enum : char { white, grey, black };
  std::vector<char> color(count, white);
  std::vector<std::size_t> parent(count, count);

  // Iterative DFS; vertices and edges visited in ascending order.
  for (std::size_t root = 0; root < count; ++root) {
    if (color[root] != white) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        color[v] = black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][next++];
      if (color[w] == grey) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == white) {
        color[w] = grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string cycle_text(int n, const std::vector<std::size_t>& cycle) {
  const Lambda& lam = lambda(n);
  std::string out;
  for (std::size_t r : cycle) out += to_string(lam.triple(r)) + " -> ";
  out += to_string(lam.triple(cycle.front()));
  return out;
}

}  // namespace

OrientationCycle::OrientationCycle(int n, std::vector<std::size_t> cycle)
    : std::invalid_argument("stick orientations induce a cycle: " + cycle_text(n, cycle)),
      cycle_(std::move(cycle)) {}

AdmissibleOrder::AdmissibleOrder(const StickOrientations& o)
    : orientations_(o), edges_(precedence_edges(o)) {
  if (auto cycle = find_orientation_cycle(o)) throw OrientationCycle(o.n(), std::move(*cycle));
  const auto adj = adjacency(o.n(), edges_);
  const std::size_t count = adj.size();

  // Reverse topological order so every successor's closure is final first.
  std::vector<std::size_t> indegree(count, 0);
  for (auto [a, b] : edges_) ++indegree[b];
  std::vector<std::size_t> topo;
  for (std::size_t v = 0; v < count; ++v)
    if (indegree[v] == 0) topo.push_back(v);
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t w : adj[topo[i]])
      if (--indegree[w] == 0) topo.push_back(w);

  above_.assign(count, InversionSet(o.n()));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (std::size_t w : adj[*it]) {
      above_[*it].set(w);
      above_[*it] |= above_[w];
    }
}

std::string to_dot(const AdmissibleOrder& order) {
  const Lambda& lam = lambda(order.n());
  std::string out = "digraph precedence_n" + std::to_string(order.n()) + " {\n";
  for (std::size_t r = 0; r < lam.size(); ++r)
    out += "  t" + std::to_string(r) + " [label=\"" + to_string(lam.triple(r)) + "\"];\n";
  for (auto [a, b] : order.edges())
    out += "  t" + std::to_string(a) + " -> t" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

namespace {

constexpr bool initial_segment(unsigned p) {
  return p == 0b0000 || p == 0b1000 || p == 0b1100 || p == 0b1110 || p == 0b1111;
}
constexpr bool final_segment(unsigned p) {
  return p == 0b0000 || p == 0b0001 || p == 0b0011 || p == 0b0111 || p == 0b1111;
}

}  // namespace

SuperDomain cubillage_csd(const StickOrientations& o) {
  if (auto cycle = find_orientation_cycle(o)) throw OrientationCycle(o.n(), std::move(*cycle));
  const auto& all = enumerate_all(o.n());
  const auto stick_list = lambda(o.n()).sticks();
  const auto keep = kernels::filter_indices(
      all.size(),
      [&](std::size_t i) {
        const InversionSet& inv = all[i].inv();
        for (std::size_t s = 0; s < stick_list.size(); ++s) {
          const unsigned p = inv.stick_pattern(stick_list[s]);
          if (o[s] == Orientation::direct ? !initial_segment(p) : !final_segment(p)) return false;
        }
        return true;
      },
      kernels::Exec::parallel);
  std::vector<Tiling> members;
  members.reserve(keep.size());
  for (std::size_t i : keep) members.push_back(all[i]);
  return SuperDomain(o.n(), std::move(members));
}

namespace {

int n_for_lambda_size(std::size_t size) {
  for (int n = 3; n <= kMaxColors; ++n)
    if (choose3(n) == size) return n;
  throw std::invalid_argument("sequence length " + std::to_string(size) +
                              " is not C(n,3) for any supported n");
}

}  // namespace

AdmissibilityResult validate_admissible(const std::vector<Triple>& seq) {
  const int n = n_for_lambda_size(seq.size());
  const Lambda& lam = lambda(n);
  std::vector<std::size_t> position(lam.size(), lam.size());
  for (std::size_t p = 0; p < seq.size(); ++p) {
    const std::size_t r = lam.rank(seq[p]);
    if (position[r] != lam.size())
      throw std::invalid_argument("triple " + to_string(seq[p]) + " appears twice");
    position[r] = p;
  }

  const auto stick_list = lam.sticks();
  std::vector<Orientation> per_stick(stick_list.size());
  for (std::size_t s = 0; s < stick_list.size(); ++s) {
    const auto& m = stick_list[s].members;
    const bool up = position[m[0]] < position[m[1]] && position[m[1]] < position[m[2]] &&
                    position[m[2]] < position[m[3]];
    const bool down = position[m[0]] > position[m[1]] && position[m[1]] > position[m[2]] &&
                      position[m[2]] > position[m[3]];
    if (!up && !down) return {std::nullopt, s};
    per_stick[s] = up ? Orientation::direct : Orientation::reverse;
  }
  return {StickOrientations(n, std::move(per_stick)), std::nullopt};
}

std::vector<Tiling> chain_from_linear(const std::vector<Triple>& seq) {
  const auto verdict = validate_admissible(seq);
  if (!verdict) {
    const int n = n_for_lambda_size(seq.size());
    throw std::invalid_argument("sequence is not admissible on stick " +
                                stick_label(lambda(n).sticks()[*verdict.failing_stick]));
  }
  const int n = verdict.orientations->n();
  std::vector<Tiling> chain;
  InversionSet prefix(n);
  chain.push_back(Tiling(prefix));
  for (const Triple& t : seq) {
    prefix.set(triple_rank(t, n));
    chain.push_back(Tiling(prefix));
  }
  return chain;
}

std::vector<Triple> lexicographic_order(int n) {
  auto triples = lambda(n).triples();
  return {triples.begin(), triples.end()};
}

StickOrientations read_orientations(std::istream& in, int n) {
  require_color_count(n);
  const auto stick_list = lambda(n).sticks();
  std::vector<std::optional<Orientation>> seen(stick_list.size());
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw FormatError("expected 'ijkl:D' or 'ijkl:R'");
    const std::string label(trim(body.substr(0, colon)));
    const std::string_view tag = trim(body.substr(colon + 1));
    if (tag != "D" && tag != "R") throw FormatError("orientation must be D or R");
    const auto it = std::find_if(stick_list.begin(), stick_list.end(),
                                 [&](const Stick& s) { return stick_label(s) == label; });
    if (it == stick_list.end())
      throw FormatError("'" + label + "' is not a stick of [" + std::to_string(n) + "]");
    auto& slot = seen[static_cast<std::size_t>(it - stick_list.begin())];
    if (slot) throw FormatError("stick " + label + " listed twice");
    slot = tag == "D" ? Orientation::direct : Orientation::reverse;
  }
  std::vector<Orientation> per_stick;
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) throw FormatError("stick " + stick_label(stick_list[s]) + " has no orientation");
    per_stick.push_back(*seen[s]);
  }
  return StickOrientations(n, std::move(per_stick));
}

StickOrientations read_orientations(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_orientations(in, n);
}

void write_orientations(std::ostream& out, const StickOrientations& o) {
  const auto stick_list = lambda(o.n()).sticks();
  for (std::size_t s = 0; s < stick_list.size(); ++s)
    out << stick_label(stick_list[s]) << ':' << (o[s] == Orientation::direct ? 'D' : 'R') << '\n';
}

}  // namespace rhombus
