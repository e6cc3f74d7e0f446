#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rhombus/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rhombus::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RHOMBUS_TEST_DATA) + "/" + name; }

}  // namespace

using rhombus::cli::kFails;
using rhombus::cli::kHolds;
using rhombus::cli::kUsage;

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "5", "--count"}).out == "62\n");
  const auto r = run({"enumerate", "--n", "3"});
  CHECK(r.code == kHolds);
  CHECK(r.out == "n=3\n0\n1\n");
  CHECK(run({"enumerate", "--n", "3", "--format", "triples"}).out == "n=3\n{}\n123\n");
  CHECK(run({"enumerate"}).code == kUsage);
  CHECK(run({"enumerate", "--n", "13"}).code == kUsage);
}

TEST_CASE("validate and median") {
  CHECK(run({"validate", "1100"}).out == "1100 tiling\n");
  const auto bad = run({"validate", "0110"});
  CHECK(bad.code == kFails);
  CHECK(bad.out == "0110 not-a-tiling stick 1234\n");
  CHECK(run({"validate", "--n", "5", "234,235"}).code == kHolds);

  const auto m = run({"median", "1110", "0000", "0111"});
  CHECK(m.code == kFails);
  CHECK(m.out == "0110 not-a-tiling stick 1234\n");
  CHECK(run({"median", "1100", "0000"}).code == kUsage);
}

TEST_CASE("aggregate") {
  const auto r = run({"aggregate", "--input", data("paradox_profile.txt")});
  CHECK(r.code == kFails);
  CHECK(r.out == "0110 not-a-tiling stick 1234\n");
  const auto d = run({"aggregate", "--input", data("paradox_profile.txt"), "--system",
                      data("dictator3_system.txt")});
  CHECK(d.code == kHolds);
  CHECK(d.out == "0111 tiling\n");
  CHECK(run({"aggregate", "--input", data("paradox_profile.txt"), "--system",
             data("simple3_system.txt")})
            .out == "0110 not-a-tiling stick 1234\n");
}

TEST_CASE("snakes and cd-check") {
  CHECK(run({"snakes", "0"}).out == "1,2,3\n2,1,3\n2,3,1\n3,2,1\n");
  CHECK(run({"snakes", "--n", "5", "{}", "--seq", "3,4,2,1,5"}).code == kHolds);
  CHECK(run({"snakes", "--n", "5", "{}", "--seq", "1,3,2,4,5"}).code == kFails);
  CHECK(run({"cd-check", "--input", data("cyclic_orders.txt")}).code == kFails);
  CHECK(run({"cd-check", "--input", data("single_peaked_orders.txt")}).code == kHolds);
  CHECK(run({"cd-check", "1100"}).code == kHolds);
}

TEST_CASE("csd verbs") {
  const auto bad = run({"csd-check", "--input", data("octagon_bad.txt")});
  CHECK(bad.code == kFails);
  CHECK(bad.out == "not a CSD (3 tilings)\nwitness: 0001 1100 0111 -> 0101\n");
  CHECK(run({"csd-check", "--input", data("example3_domain.txt")}).code == kHolds);
  CHECK(run({"csd-closed", "--input", data("example3_domain.txt")}).code == kHolds);
  const auto max = run({"csd-maximal", "--input", data("example3_domain.txt")});
  CHECK(max.code == kHolds);
  CHECK(max.out == "maximal CSD (16 tilings)\n");
  const auto chain = run({"csd-maximal", "--input", data("octagon_chain.txt")});
  CHECK(chain.code == kFails);
  CHECK(chain.out == "not maximal; extends by 0001\n");
}

TEST_CASE("builders") {
  CHECK(run({"build-symmetric", "--n", "4", "--seq", "3,2"}).out == "n=4\n0000\n1000\n0111\n1111\n");
  CHECK(run({"build-symmetric", "--n", "5", "--seq", "3,2,4", "--partition", "--format", "triples"})
            .out == "2: 123\n3: 124,125,134,135,145,234,235,245\n4: 345\n");
  CHECK(run({"build-symmetric", "--n", "5", "--seq", "3,3,4"}).code == kUsage);

  CHECK(run({"build-cubillage", "--n", "4"}).out == "n=4\n0000\n1000\n1100\n1110\n1111\n");
  const auto cub = run({"build-cubillage", "--n", "5", "--orient", data("orient_n5_mask24.txt")});
  CHECK(cub.code == kHolds);
  CHECK(cub.out.substr(0, 4) == "n=5\n");
  CHECK(run({"build-cubillage", "--n", "5", "--orient", data("orient_n5_cyclic.txt")}).code == kFails);

  const auto chain = run({"build-chain", "--n", "4"});
  CHECK(chain.out == "n=4\n0000\n1000\n1100\n1110\n1111\n");
  const auto bad = run({"build-chain", "--n", "4", "--seq", "124,123,134,234"});
  CHECK(bad.code == kFails);
  CHECK(bad.out == "inadmissible on stick 1234\n");
  CHECK(run({"build-chain", "--n", "4", "--seq", "123,124"}).code == kUsage);
}

TEST_CASE("export-graph") {
  const auto g = run({"export-graph", "--n", "3"});
  CHECK(g.code == kHolds);
  CHECK(g.out == "digraph flips_n3 {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v0 -> v1 [label=\"123\"];\n}\n");
  const auto p = run({"export-graph", "--n", "5", "--orient", data("orient_n5_mask24.txt")});
  CHECK(p.code == kHolds);
  CHECK(p.out.find("digraph") == 0);
}

TEST_CASE("json output") {
  const auto r = run({"csd-check", "--input", data("octagon_bad.txt"), "--format", "json"});
  CHECK(r.code == kFails);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verb"] == "csd-check");
  CHECK(j["n"] == 4);
  CHECK(j["verdict"] == "fails");
  CHECK(j["witness"]["median"] == "0101");
  CHECK(j["data"]["quadruple_route"] == "fails");

  const auto e = nlohmann::json::parse(run({"enumerate", "--n", "4", "--count", "--format", "json"}).out);
  CHECK(e["data"]["count"] == 8);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"no-such-verb"}).code == kUsage);
  CHECK(run({"validate", "01x0"}).code == kUsage);
  CHECK(run({"csd-check", "--input", data("missing.txt")}).code == kUsage);
  CHECK(run({"validate", "--format", "yaml", "0000"}).code == kUsage);
  CHECK_FALSE(run({"validate", "01x0"}).err.empty());
}
