#include "rhombus/inversion_set.hpp"

#include <stdexcept>

namespace rhombus {

InversionSet::InversionSet(int n) : n_(n) { (void)lambda(n); }

InversionSet InversionSet::full(int n) {
  InversionSet s(n);
  const std::size_t w = s.width();
  for (std::size_t word = 0; word < kWords; ++word) {
    const std::size_t lo = word * 64;
    if (lo >= w) break;
    const std::size_t bits = std::min<std::size_t>(64, w - lo);
    s.words_[word] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  return s;
}

InversionSet InversionSet::from_triples(int n, const std::vector<Triple>& triples) {
  InversionSet s(n);
  const Lambda& lam = lambda(n);
  for (const Triple& t : triples) s.set(lam.rank(t));
  return s;
}

std::size_t InversionSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

InversionSet InversionSet::complement() const {
  InversionSet full_set = full(n_);
  for (std::size_t w = 0; w < kWords; ++w) full_set.words_[w] &= ~words_[w];
  return full_set;
}

bool InversionSet::is_subset_of(const InversionSet& other) const {
  require_same_n(other);
  for (std::size_t w = 0; w < kWords; ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

void InversionSet::require_same_n(const InversionSet& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("inversion sets over different color counts (" +
                                std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
}

InversionSet& InversionSet::operator&=(const InversionSet& o) {
  require_same_n(o);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
  return *this;
}

InversionSet& InversionSet::operator|=(const InversionSet& o) {
  require_same_n(o);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
  return *this;
}

InversionSet& InversionSet::operator^=(const InversionSet& o) {
  require_same_n(o);
  for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
  return *this;
}

std::vector<std::size_t> InversionSet::ranks() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < width(); ++r)
    if (test(r)) out.push_back(r);
  return out;
}

std::vector<Triple> InversionSet::triples() const {
  std::vector<Triple> out;
  if (n_ < 3) return out;
  const Lambda& lam = lambda(n_);
  for (std::size_t r : ranks()) out.push_back(lam.triple(r));
  return out;
}

std::size_t InversionSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const InversionSet& a, const InversionSet& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  // Leftmost differing position decides; '0' < '1' there.
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < InversionSet::kWords; ++w) {
    const std::uint64_t diff = wa[w] ^ wb[w];
    if (diff) {
      const int bit = std::countr_zero(diff);
      return ((wa[w] >> bit) & 1u) == 0;
    }
  }
  return false;
}

InversionSet median3(const InversionSet& a, const InversionSet& b, const InversionSet& c) {
  return (a & b) | (b & c) | (c & a);
}

bool lies_between(const InversionSet& r, const InversionSet& a, const InversionSet& b) {
  return (a & b).is_subset_of(r) && r.is_subset_of(a | b);
}

}  // namespace rhombus
