#include "rhombus/snakes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rhombus/text_io.hpp"

namespace rhombus {

std::size_t pair_rank(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("invalid pair");
  // Pairs with first element < i come first.
  const int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

LinearOrder::LinearOrder(std::vector<int> seq) : seq_(std::move(seq)) {
  const int n = static_cast<int>(seq_.size());
  if (n < 1 || n > kMaxColors) throw std::invalid_argument("linear order size out of range");
  position_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int p = 0; p < n; ++p) {
    const int c = seq_[static_cast<std::size_t>(p)];
    if (c < 1 || c > n || position_[static_cast<std::size_t>(c)] != -1)
      throw std::invalid_argument("sequence " + join_ints(seq_) + " is not a permutation of [" +
                                  std::to_string(n) + "]");
    position_[static_cast<std::size_t>(c)] = p;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (inverted(i, j)) inversions_.set(pair_rank(i, j, n));
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversal(int n) { return identity(n).reversed(); }

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<int>(seq_.rbegin(), seq_.rend()));
}

LinearOrder LinearOrder::restricted(const std::vector<int>& colors) const {
  std::vector<int> by_position = colors;
  std::sort(by_position.begin(), by_position.end(),
            [this](int a, int b) { return position(a) < position(b); });
  std::vector<int> seq;
  for (int c : by_position) {
    const auto it = std::find(colors.begin(), colors.end(), c);
    seq.push_back(static_cast<int>(it - colors.begin()) + 1);
  }
  return LinearOrder(std::move(seq));
}

std::vector<std::pair<int, int>> order_inversions(const std::vector<int>& seq) {
  const LinearOrder order(seq);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= order.n(); ++i)
    for (int j = i + 1; j <= order.n(); ++j)
      if (order.inverted(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

// Bits (ij, ik, jk) with ij most significant.
unsigned triple_pattern(const LinearOrder& o, const Triple& t) {
  return (unsigned(o.inverted(t.i, t.j)) << 2) | (unsigned(o.inverted(t.i, t.k)) << 1) |
         unsigned(o.inverted(t.j, t.k));
}

constexpr bool initial_segment(unsigned p) {
  return p == 0b000 || p == 0b100 || p == 0b110 || p == 0b111;
}
constexpr bool terminal_segment(unsigned p) {
  return p == 0b000 || p == 0b001 || p == 0b011 || p == 0b111;
}

}  // namespace

bool is_compatible_order(const LinearOrder& order, const Tiling& t) {
  if (order.n() != t.n()) throw std::invalid_argument("order and tiling over different n");
  const Lambda& lam = lambda(t.n());
  for (std::size_t r = 0; r < lam.size(); ++r) {
    const unsigned p = triple_pattern(order, lam.triple(r));
    if (t.inv().test(r) ? !terminal_segment(p) : !initial_segment(p)) return false;
  }
  return true;
}

std::vector<LinearOrder> sigma(const Tiling& t) {
  if (t.n() > kSigmaCap)
    throw std::out_of_range("sigma enumerates n! orders and is capped at n=" +
                            std::to_string(kSigmaCap));
  std::vector<int> seq(static_cast<std::size_t>(t.n()));
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<LinearOrder> out;
  do {
    LinearOrder order(seq);
    if (is_compatible_order(order, t)) out.push_back(std::move(order));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::optional<CondorcetWitness> find_condorcet_cycle(const std::vector<LinearOrder>& domain) {
  if (domain.size() < 3) return std::nullopt;
  const int n = domain.front().n();
  for (const auto& o : domain)
    if (o.n() != n) throw std::invalid_argument("orders over different n");

  // A cycle among three distinct ballots on candidates a<b<c happens exactly
  // when the three restricted rankings are the three rotations of one cyclic
  // order. Ranking ids: 0 abc, 1 bca, 2 cab (rotations); 3 acb, 4 cba, 5 bac.
  auto ranking_id = [](const LinearOrder& o, int a, int b, int c) {
    const int pa = o.position(a), pb = o.position(b), pc = o.position(c);
    if (pa < pb && pb < pc) return 0;
    if (pb < pc && pc < pa) return 1;
    if (pc < pa && pa < pb) return 2;
    if (pa < pc && pc < pb) return 3;
    if (pc < pb && pb < pa) return 4;
    return 5;
  };

  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        std::array<std::optional<std::size_t>, 6> first{};
        for (std::size_t v = 0; v < domain.size(); ++v) {
          const int id = ranking_id(domain[v], a, b, c);
          if (!first[static_cast<std::size_t>(id)]) first[static_cast<std::size_t>(id)] = v;
        }
        for (int cls = 0; cls < 2; ++cls) {
          const auto& x = first[static_cast<std::size_t>(3 * cls)];
          const auto& y = first[static_cast<std::size_t>(3 * cls + 1)];
          const auto& z = first[static_cast<std::size_t>(3 * cls + 2)];
          if (x && y && z) {
            std::array<std::size_t, 3> ids{*x, *y, *z};
            std::sort(ids.begin(), ids.end());
            return CondorcetWitness{ids, {a, b, c}};
          }
        }
      }
  return std::nullopt;
}

std::string to_string(const LinearOrder& order) { return join_ints(order.seq()); }

}  // namespace rhombus
