#include <doctest.h>

#include <sstream>

#include "rhombus/text_io.hpp"

using namespace rhombus;

TEST_CASE("bitstrings") {
  const auto s = parse_bits("0110");
  CHECK(s.n() == 4);
  CHECK(to_bits(s) == "0110");
  CHECK(to_triple_list(s) == "124,134");
  CHECK(parse_bits("0000000000").n() == 5);
  CHECK_THROWS_AS(parse_bits("011"), FormatError);
  CHECK_THROWS_AS(parse_bits("01a0"), FormatError);
  CHECK_THROWS_AS(parse_bits(""), FormatError);
}

TEST_CASE("triple lists") {
  CHECK(to_bits(parse_triple_list("234,124", 4)) == "0101");
  CHECK(parse_triple_list("", 5).empty());
  CHECK(parse_triple_list("{}", 5).empty());
  CHECK(parse_triple_list(" 123 , 345 ", 5).count() == 2);
  CHECK(to_triple_list(parse_triple_list("1-2-10", 10)) == "1-2-10");
  CHECK_THROWS_AS(parse_triple_list("126", 5), FormatError);
  CHECK_THROWS_AS(parse_triple_list("132", 5), FormatError);
  CHECK_THROWS_AS(parse_triple_list("12", 5), FormatError);
  CHECK_THROWS_AS(parse_triple_list("123,123", 5), FormatError);
}

TEST_CASE("parse_inversion_set picks the right reading") {
  CHECK(to_bits(parse_inversion_set("1100")) == "1100");
  CHECK(to_bits(parse_inversion_set("1100", 4)) == "1100");
  CHECK(to_bits(parse_inversion_set("234", 4)) == "0001");
  CHECK_THROWS_AS(parse_inversion_set("234"), FormatError);
}

TEST_CASE("triples and integer lists") {
  CHECK(parse_triple("245") == Triple{2, 4, 5});
  CHECK(parse_triple("3-7-11") == Triple{3, 7, 11});
  CHECK_THROWS_AS(parse_triple("2x5"), FormatError);
  CHECK(parse_int_list("3,4,2,1,5") == std::vector<int>{3, 4, 2, 1, 5});
  CHECK(join_ints({3, 2, 4}) == "3,2,4");
  CHECK(join_ints({1, 2}, ' ') == "1 2");
  CHECK_THROWS_AS(parse_int_list("3,,4"), FormatError);
}

TEST_CASE("set files") {
  std::istringstream in("# header follows\nn=4\n\n1100\n134,234\n");
  const SetFile f = read_set_file(in);
  CHECK(f.n == 4);
  REQUIRE(f.sets.size() == 2);
  CHECK(to_bits(f.sets[1]) == "0011");

  std::ostringstream out;
  write_set_file(out, f.n, f.sets);
  CHECK(out.str() == "n=4\n1100\n0011\n");

  std::istringstream no_header("1100\n");
  CHECK_THROWS_AS(read_set_file(no_header), FormatError);
  std::istringstream wrong_n("n=5\n1100\n");
  CHECK_THROWS_AS(read_set_file(wrong_n), FormatError);
  CHECK_THROWS_AS(read_set_file(std::string("/nonexistent/file")), FormatError);
}

TEST_CASE("trim and split") {
  CHECK(trim("  ab \t") == "ab");
  CHECK(trim("   ").empty());
  const auto parts = split("a,b,,c", ',');
  REQUIRE(parts.size() == 4);
  CHECK(parts[2].empty());
}
