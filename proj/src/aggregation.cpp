#include "rhombus/aggregation.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>

#include "rhombus/text_io.hpp"

namespace rhombus {

Profile::Profile(std::vector<Tiling> votes) : votes_(std::move(votes)) {
  if (votes_.empty()) throw std::invalid_argument("a profile needs at least one voter");
  for (const auto& v : votes_)
    if (v.n() != votes_.front().n()) throw std::invalid_argument("votes over different n");
}

Profile Profile::opposite() const {
  std::vector<Tiling> flipped;
  flipped.reserve(votes_.size());
  for (const auto& v : votes_) flipped.push_back(v.opposite());
  return Profile(std::move(flipped));
}

InversionSet simple_majority(const Profile& p) {
  if (p.size() % 2 == 0)
    throw std::invalid_argument("simple majority needs an odd number of voters, got " +
                                std::to_string(p.size()));
  const int n = p.n();
  InversionSet out(n);
  const std::size_t width = choose3(n);
  for (std::size_t r = 0; r < width; ++r) {
    std::size_t support = 0;
    for (const auto& v : p.votes()) support += v.inv().test(r) ? 1 : 0;
    if (2 * support > p.size()) out.set(r);
  }
  return out;
}

MajoritySystem::MajoritySystem(int voter_count, const std::vector<Coalition>& big_coalitions)
    : voters_(voter_count) {
  if (voter_count < 1 || voter_count > kMaxVoters)
    throw std::out_of_range("voter count must lie in [1, " + std::to_string(kMaxVoters) + "]");
  big_.assign(std::size_t{1} << voter_count, 0);
  for (Coalition s : big_coalitions) {
    if (s > everyone()) throw std::out_of_range("coalition names a voter outside V");
    big_[s] = 1;
  }
}

MajoritySystem MajoritySystem::dictatorship(int voter_count, int dictator) {
  if (dictator < 0 || dictator >= voter_count) throw std::out_of_range("dictator outside V");
  std::vector<Coalition> family;
  const Coalition all = static_cast<Coalition>((std::uint64_t{1} << voter_count) - 1);
  for (Coalition s = 0; s <= all; ++s)
    if (s & (Coalition{1} << dictator)) family.push_back(s);
  return MajoritySystem(voter_count, family);
}

MajoritySystem MajoritySystem::simple(int voter_count) {
  if (voter_count % 2 == 0) throw std::invalid_argument("simple majority needs odd |V|");
  return weighted(std::vector<int>(static_cast<std::size_t>(voter_count), 1));
}

MajoritySystem MajoritySystem::weighted(const std::vector<int>& weights) {
  const int voters = static_cast<int>(weights.size());
  if (voters < 1 || voters > kMaxVoters)
    throw std::out_of_range("voter count must lie in [1, " + std::to_string(kMaxVoters) + "]");
  const long total = std::accumulate(weights.begin(), weights.end(), 0L);
  std::vector<Coalition> family;
  const Coalition all = static_cast<Coalition>((std::uint64_t{1} << voters) - 1);
  for (Coalition s = 0; s <= all; ++s) {
    long w = 0;
    for (int v = 0; v < voters; ++v)
      if (s & (Coalition{1} << v)) w += weights[static_cast<std::size_t>(v)];
    if (2 * w > total) family.push_back(s);
  }
  return MajoritySystem(voters, family);
}

std::vector<Coalition> MajoritySystem::big_coalitions() const {
  std::vector<Coalition> out;
  for (Coalition s = 0; s <= everyone(); ++s)
    if (is_big(s)) out.push_back(s);
  return out;
}

SystemVerdict validate_majority_system(const MajoritySystem& f) {
  const Coalition all = f.everyone();
  // Single-voter additions suffice for monotonicity.
  for (Coalition s = 0; s <= all; ++s) {
    if (!f.is_big(s)) continue;
    for (int v = 0; v < f.voter_count(); ++v) {
      const Coalition up = s | (Coalition{1} << v);
      if (!f.is_big(up)) return {false, "monotonicity", s};
    }
  }
  for (Coalition s = 0; s <= all; ++s)
    if (f.is_big(s) == f.is_big(all & ~s)) return {false, "deciding", s};
  return {};
}

namespace {

void require_matching(const Profile& p, const MajoritySystem& f) {
  if (static_cast<int>(p.size()) != f.voter_count())
    throw std::invalid_argument("profile has " + std::to_string(p.size()) +
                                " voters, majority system has " +
                                std::to_string(f.voter_count()));
  const auto verdict = validate_majority_system(f);
  if (!verdict)
    throw std::invalid_argument("majority system violates " + verdict.axiom + " at coalition " +
                                coalition_to_string(*verdict.witness, f.voter_count()));
}

}  // namespace

InversionSet aggregate_with_system(const Profile& p, const MajoritySystem& f) {
  require_matching(p, f);
  const int n = p.n();
  InversionSet out(n);
  for (std::size_t r = 0; r < choose3(n); ++r) {
    Coalition supporters = 0;
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p.votes()[v].inv().test(r)) supporters |= Coalition{1} << v;
    if (f.is_big(supporters)) out.set(r);
  }
  return out;
}

InversionSet aggregate_union_of_intersections(const Profile& p, const MajoritySystem& f) {
  require_matching(p, f);
  const int n = p.n();
  InversionSet out(n);
  const InversionSet full = InversionSet::full(n);
  for (Coalition m = 0; m <= f.everyone(); ++m) {
    if (!f.is_big(m)) continue;
    InversionSet meet = full;
    for (std::size_t v = 0; v < p.size(); ++v)
      if (m & (Coalition{1} << v)) meet &= p.votes()[v].inv();
    out |= meet;
  }
  return out;
}

Profile read_profile(std::istream& in) {
  SetFile file = read_set_file(in);
  std::vector<Tiling> votes;
  for (auto& s : file.sets) votes.emplace_back(std::move(s));
  if (votes.empty()) throw FormatError("profile file lists no tilings");
  return Profile(std::move(votes));
}

Profile read_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_profile(in);
}

MajoritySystem read_majority_system(std::istream& in) {
  std::vector<Coalition> family;
  int voters = -1;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (voters < 0) voters = static_cast<int>(body.size());
    if (static_cast<int>(body.size()) != voters)
      throw FormatError("coalition lines must all have length " + std::to_string(voters));
    if (voters > kMaxVoters) throw FormatError("too many voters");
    Coalition s = 0;
    for (int v = 0; v < voters; ++v) {
      const char c = body[static_cast<std::size_t>(v)];
      if (c != '0' && c != '1') throw FormatError("coalition must be a 0/1 string");
      if (c == '1') s |= Coalition{1} << v;
    }
    family.push_back(s);
  }
  if (voters < 1) throw FormatError("majority system file lists no coalitions");
  return MajoritySystem(voters, family);
}

MajoritySystem read_majority_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_majority_system(in);
}

std::string coalition_to_string(Coalition s, int voter_count) {
  std::string out(static_cast<std::size_t>(voter_count), '0');
  for (int v = 0; v < voter_count; ++v)
    if (s & (Coalition{1} << v)) out[static_cast<std::size_t>(v)] = '1';
  return out;
}

}  // namespace rhombus
