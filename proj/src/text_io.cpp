#include "rhombus/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "rhombus/config.hpp"

namespace rhombus {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

namespace {

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw FormatError("expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::optional<int> n_for_width(std::size_t width) {
  for (int n = 3; n <= color_cap(); ++n)
    if (choose3(n) == width) return n;
  return std::nullopt;
}

bool all_binary(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

std::string to_bits(const InversionSet& s) {
  std::string out(s.width(), '0');
  for (std::size_t r = 0; r < s.width(); ++r)
    if (s.test(r)) out[r] = '1';
  return out;
}

std::string to_triple_list(const InversionSet& s) {
  std::string out;
  for (const Triple& t : s.triples()) {
    if (!out.empty()) out.push_back(',');
    out += to_string(t);
  }
  return out;
}

InversionSet parse_bits(std::string_view text) {
  text = trim(text);
  if (!all_binary(text)) throw FormatError("bitstring must consist of '0' and '1'");
  const auto n = n_for_width(text.size());
  if (!n)
    throw FormatError("bitstring length " + std::to_string(text.size()) +
                      " is not C(n,3) for any supported n");
  InversionSet s(*n);
  for (std::size_t r = 0; r < text.size(); ++r)
    if (text[r] == '1') s.set(r);
  return s;
}

Triple parse_triple(std::string_view text) {
  text = trim(text);
  Triple t;
  if (text.find('-') != std::string_view::npos) {
    const auto parts = split(text, '-');
    if (parts.size() != 3) throw FormatError("malformed triple '" + std::string(text) + "'");
    t = {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
  } else {
    if (text.size() != 3 || !std::all_of(text.begin(), text.end(), ::isdigit))
      throw FormatError("malformed triple '" + std::string(text) + "'");
    t = {text[0] - '0', text[1] - '0', text[2] - '0'};
  }
  if (!(t.i >= 1 && t.i < t.j && t.j < t.k))
    throw FormatError("triple '" + std::string(text) + "' is not increasing");
  return t;
}

InversionSet parse_triple_list(std::string_view text, int n) {
  require_color_count(n);
  text = trim(text);
  InversionSet s(n);
  if (text.empty() || text == "{}") return s;
  if (text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  for (std::string_view item : split(text, ',')) {
    const Triple t = parse_triple(item);
    if (!t.valid_for(n))
      throw FormatError("triple " + to_string(t) + " exceeds n=" + std::to_string(n));
    if (s.test(triple_rank(t, n))) throw FormatError("triple " + to_string(t) + " listed twice");
    s.set(triple_rank(t, n));
  }
  return s;
}

InversionSet parse_inversion_set(std::string_view text, std::optional<int> n) {
  text = trim(text);
  if (all_binary(text)) {
    const auto inferred = n_for_width(text.size());
    if (inferred && (!n || *n == *inferred)) return parse_bits(text);
    if (n && text.size() != 3)
      throw FormatError("bitstring length " + std::to_string(text.size()) + " does not match n=" +
                        std::to_string(*n));
  }
  if (!n) throw FormatError("triple list '" + std::string(text) + "' needs an explicit n");
  return parse_triple_list(text, *n);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_int(item));
  return out;
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

SetFile read_set_file(std::istream& in) {
  SetFile file;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_header) {
      if (body.substr(0, 2) != "n=") throw FormatError("expected header line 'n=<k>'");
      file.n = parse_int(body.substr(2));
      try {
        require_color_count(file.n);
      } catch (const std::out_of_range& e) {
        throw FormatError(e.what());
      }
      have_header = true;
      continue;
    }
    file.sets.push_back(parse_inversion_set(body, file.n));
  }
  if (!have_header) throw FormatError("missing header line 'n=<k>'");
  return file;
}

SetFile read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_set_file(in);
}

void write_set_file(std::ostream& out, int n, const std::vector<InversionSet>& sets) {
  out << "n=" << n << '\n';
  for (const auto& s : sets) out << to_bits(s) << '\n';
}

}  // namespace rhombus
