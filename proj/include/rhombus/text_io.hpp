#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhombus/inversion_set.hpp"

namespace rhombus {

/// Malformed textual input. The CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly C(n,3) characters, leftmost = lexicographic rank 0.
std::string to_bits(const InversionSet& s);
/// Comma-separated triples in rank order, e.g. "123,124"; "" for ∅.
std::string to_triple_list(const InversionSet& s);

/// Infers n from the length; throws FormatError.
InversionSet parse_bits(std::string_view text);
/// Accepts "ijk" (single-digit colors) or "i-j-k" entries; "" and "{}" denote ∅.
InversionSet parse_triple_list(std::string_view text, int n);
/// Bitstring when the text is all 0/1 of a valid length (matching n when
/// given); otherwise a triple list, which needs n.
InversionSet parse_inversion_set(std::string_view text, std::optional<int> n = std::nullopt);

Triple parse_triple(std::string_view text);

/// "3,4,2,1,5" -> {3,4,2,1,5}.
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(const std::vector<int>& values, char sep = ',');

/// Header "n=<k>" followed by one inversion set per line. Blank lines and
/// lines starting with '#' are ignored.
struct SetFile {
  int n = 0;
  std::vector<InversionSet> sets;
};
SetFile read_set_file(std::istream& in);
SetFile read_set_file(const std::string& path);
void write_set_file(std::ostream& out, int n, const std::vector<InversionSet>& sets);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace rhombus
