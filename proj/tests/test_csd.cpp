#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "rhombus/aggregation.hpp"
#include "rhombus/csd.hpp"

using namespace rhombus;
using fixtures::domain;
using fixtures::tiling;

namespace {

std::set<std::string> bit_strings(const SuperDomain& d) {
  std::set<std::string> out;
  for (const auto& t : d.members()) out.insert(to_bits(t.inv()));
  return out;
}

SuperDomain random_domain(std::mt19937& rng, int n, std::size_t size) {
  const auto& all = enumerate_all(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<Tiling> members;
  while (members.size() < size) members.push_back(all[pick(rng)]);
  return SuperDomain(n, members);
}

}  // namespace

TEST_CASE("super-domain basics") {
  const auto d = domain(4, {"1111", "0000", "1100", "0000"});
  CHECK(d.size() == 3);
  CHECK(to_bits(d[0].inv()) == "0000");
  CHECK(to_bits(d[2].inv()) == "1111");
  CHECK(d.contains(tiling("1100")));
  CHECK_FALSE(d.contains(tiling("0001")));
  CHECK(is_normal(d));
  CHECK_FALSE(is_normal(domain(4, {"0000", "1100"})));
  CHECK(d.with(tiling("0001")).size() == 4);
  CHECK_THROWS_AS(SuperDomain(5, {tiling("0000")}), std::invalid_argument);
}

TEST_CASE("compatibility and cliques") {
  CHECK_FALSE(compatible(tiling("1000"), tiling("0001")));
  CHECK(compatible(tiling("1000"), tiling("1110")));
  CHECK(compatible(tiling("0011"), tiling("1100")));
  CHECK(is_clique(domain(4, {"0000", "1000", "1100", "1110", "1111"})));
  const auto w = find_incompatible_pair(domain(4, {"0000", "0001", "1000"}));
  REQUIRE(w);
  CHECK(w->a == 1);
  CHECK(w->b == 2);
}

TEST_CASE("CSD checks at n=4") {
  const auto bad = domain(4, {"1100", "0111", "0001"});
  const auto w = find_csd_violation(bad);
  REQUIRE(w);
  CHECK(to_bits(w->median) == "0101");
  CHECK_FALSE(is_csd_via_quadruples(bad));

  const auto paradox = domain(4, {"1110", "0000", "0111"});
  const auto w2 = find_csd_violation(paradox);
  REQUIRE(w2);
  CHECK(to_bits(w2->median) == "0110");
  CHECK_FALSE(is_tiling(w2->median));

  CHECK(is_csd(domain(4, {"0000", "1000", "1100", "1110", "1111"})));
  CHECK(is_csd(domain(4, {"0001", "0011", "1100", "1110"})));
  CHECK(is_csd(domain(4, {"0000"})));
  CHECK(is_csd(domain(4, {"0000", "1111"})));
}

TEST_CASE("Example 3: median, union and domain verdicts") {
  const Tiling t1 = tiling("234,235,245", 5);
  const Tiling t2 = tiling("234,134,124", 5);
  const Tiling t3 = tiling("234,235,134,135", 5);
  CHECK(median3(t1.inv(), t2.inv(), t3.inv()) == parse_triple_list("234,134,235", 5));

  InversionSet u = t1.inv();
  u |= t2.inv();
  const auto z = is_tiling(u);
  CHECK_FALSE(z.holds);
  REQUIRE(z.failing_stick);
  CHECK(stick_label(sticks(5)[*z.failing_stick]) == "1245");
  CHECK(median3(t1.inv(), t2.inv(), Tiling::anti_standard(5).inv()) == u);

  const auto d = fixtures::example3_domain();
  REQUIRE(d.size() == 16);
  CHECK(is_csd(d));
  CHECK(is_csd_via_quadruples(d));
  CHECK(is_closed(d));
  CHECK(is_normal(d) == false);
  const auto m = is_maximal_csd(d);
  CHECK(m.verdict == Verdict::holds);
  CHECK_FALSE(m.extension.has_value());
  CHECK_FALSE(is_csd(d.with(Tiling::anti_standard(5))));
}

TEST_CASE("maximality") {
  const auto chain4 = domain(4, {"0000", "1000", "1100", "1110"});
  const auto m = is_maximal_csd(chain4);
  CHECK(m.verdict == Verdict::fails);
  REQUIRE(m.extension);
  CHECK(to_bits(m.extension->inv()) == "0001");
  CHECK(is_csd(chain4.with(*m.extension)));
  CHECK(is_csd(chain4.with(tiling("1111"))));

  const auto pair5 = SuperDomain(5, {Tiling::standard(5), Tiling::anti_standard(5)});
  CHECK(is_maximal_csd(pair5).verdict == Verdict::fails);

  const auto not_csd = is_maximal_csd(domain(4, {"1100", "0111", "0001"}));
  CHECK(not_csd.verdict == Verdict::fails);
  CHECK_FALSE(not_csd.is_csd);
  CHECK(not_csd.violation.has_value());

  CHECK(is_maximal_csd(domain(4, {"0000", "1000", "1100", "1110", "1111"})).verdict == Verdict::holds);
  CHECK(to_string(Verdict::unknown) == "unknown");
}

TEST_CASE("maximal CSDs of the octagon") {
  const auto all = enumerate_maximal_csds(4);
  CHECK(all.size() == 14);
  const std::set<std::set<std::string>> expected{
      {"0000", "0001", "1000", "1100", "1110"}, {"0000", "0001", "0011", "1000", "1100"},
      {"0000", "0001", "0011", "0111", "1000"}, {"0000", "1000", "1100", "1110", "1111"},
      {"0111", "1000", "1100", "1110", "1111"}, {"0011", "0111", "1100", "1110", "1111"},
      {"0000", "0001", "0011", "0111", "1111"}, {"0001", "0011", "0111", "1110", "1111"},
      {"0001", "0011", "1100", "1110"},         {"0001", "0111", "1000", "1110"},
      {"0011", "0111", "1000", "1100"},         {"0000", "0001", "1110", "1111"},
      {"0000", "0011", "1100", "1111"},         {"0000", "0111", "1000", "1111"}};
  std::set<std::set<std::string>> got;
  std::size_t five = 0, four = 0;
  for (const auto& d : all) {
    got.insert(bit_strings(d));
    five += d.size() == 5;
    four += d.size() == 4;
    CHECK(is_maximal_csd(d).verdict == Verdict::holds);
  }
  CHECK(got == expected);
  CHECK(five == 8);
  CHECK(four == 6);
  CHECK_THROWS(enumerate_maximal_csds(5));
}

TEST_CASE("odd profiles over an octagon CSD aggregate to a voter's tiling") {
  for (const auto& d : enumerate_maximal_csds(4)) {
    const auto& m = d.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b)
        for (std::size_t c = 0; c < m.size(); ++c) {
          const InversionSet s = simple_majority(Profile({m[a], m[b], m[c]}));
          CHECK((s == m[a].inv() || s == m[b].inv() || s == m[c].inv()));
        }
  }
}

TEST_CASE("triple-median route agrees with the quadruple route") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = random_domain(rng, 5, 2 + trial % 9);
    CHECK(is_csd(d) == is_csd_via_quadruples(d));
    CHECK(find_csd_violation(d, kernels::Exec::serial).has_value() ==
          find_csd_violation(d, kernels::Exec::parallel).has_value());
  }
}

TEST_CASE("normal domains: clique iff CSD") {
  std::mt19937 rng(31);
  int cliques = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = random_domain(rng, 5, 1 + trial % 5)
                       .with(Tiling::standard(5))
                       .with(Tiling::anti_standard(5));
    CHECK(is_clique(d) == is_csd(d));
    cliques += is_clique(d);
  }
  CHECK(cliques > 0);
}

TEST_CASE("compatibility propagates to meets and joins") {
  const auto& all = enumerate_all(5);
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 300; ++trial) {
    const Tiling& t = all[pick(rng)];
    const Tiling& q = all[pick(rng)];
    const Tiling& r = all[pick(rng)];
    if (!compatible(t, q) || !compatible(t, r) || !compatible(q, r)) continue;
    ++checked;
    InversionSet meet = t.inv(), join = t.inv();
    meet &= q.inv();
    join |= q.inv();
    CHECK(compatible(r, Tiling(meet)));
    CHECK(compatible(r, Tiling(join)));
    InversionSet lhs = r.inv(), a = r.inv(), b = r.inv();
    lhs &= join;
    a &= t.inv();
    b &= q.inv();
    a |= b;
    CHECK(lhs == a);
  }
  CHECK(checked == 300);
}

TEST_CASE("adding a majority outcome keeps a CSD") {
  const auto d = fixtures::example3_domain();
  const auto& m = d.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c) {
        const Tiling s(simple_majority(Profile({m[a], m[b], m[c]})));
        CHECK(is_csd(d.with(s)));
      }
}

TEST_CASE("restriction to a quadruple") {
  const auto d = fixtures::example3_domain();
  const std::vector<int> k{1, 2, 4, 5};
  const auto r = d.restricted(k);
  CHECK(r.n() == 4);
  CHECK(is_csd(r));
}

TEST_CASE("super-domain files round-trip") {
  std::ostringstream out;
  write_super_domain(out, fixtures::example3_domain());
  std::istringstream in(out.str());
  CHECK(read_super_domain(in) == fixtures::example3_domain());
  std::istringstream bad("n=4\n0110\n");
  CHECK_THROWS_AS(read_super_domain(bad), NotATiling);
}
