#include "rhombus/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhombus/aggregation.hpp"
#include "rhombus/config.hpp"
#include "rhombus/csd.hpp"
#include "rhombus/cubillage.hpp"
#include "rhombus/snakes.hpp"
#include "rhombus/symmetric.hpp"
#include "rhombus/text_io.hpp"

namespace rhombus::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { bits, triples, json };

struct Options {
  int n = 0;
  std::string input;
  Format format = Format::bits;
  std::string seq;
  std::string orient;
  std::string system;
  double budget = 0.0;
  bool count = false;
  bool partition = false;
  std::vector<std::string> items;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> given_n(const Options& o) {
  return o.n > 0 ? std::optional<int>(o.n) : std::nullopt;
}

int require_n(const Options& o) {
  if (o.n <= 0) throw UsageError("--n is required");
  require_color_count(o.n);
  return o.n;
}

std::string show(const InversionSet& s, Format f) {
  if (f == Format::triples) {
    const std::string list = to_triple_list(s);
    return list.empty() ? "{}" : list;
  }
  return to_bits(s);
}

// Sets named on the command line or read from --input (header "n=<k>").
std::vector<InversionSet> read_sets(const Options& o, int& n) {
  if (!o.input.empty()) {
    SetFile file = read_set_file(o.input);
    if (o.n > 0 && o.n != file.n) throw UsageError("--n disagrees with the file header");
    n = file.n;
    return std::move(file.sets);
  }
  std::vector<InversionSet> out;
  for (const auto& item : o.items) out.push_back(parse_inversion_set(item, given_n(o)));
  if (out.empty()) throw UsageError("no input: pass tilings or --input FILE");
  n = out.front().n();
  for (const auto& s : out)
    if (s.n() != n) throw UsageError("inputs over different n");
  return out;
}

std::vector<Tiling> as_tilings(std::vector<InversionSet> sets) {
  std::vector<Tiling> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  return out;
}

class Emitter {
 public:
  Emitter(std::string verb, Format f, std::ostream& out) : verb_(std::move(verb)), f_(f), out_(out) {}

  bool json_mode() const { return f_ == Format::json; }
  Format format() const { return f_; }
  std::ostream& text() { return out_; }

  void result(int n, const std::string& verdict, const json& witness, const json& data) {
    json j;
    j["verb"] = verb_;
    j["n"] = n;
    j["verdict"] = verdict;
    if (!witness.is_null()) j["witness"] = witness;
    if (!data.is_null()) j["data"] = data;
    out_ << j.dump() << '\n';
  }

 private:
  std::string verb_;
  Format f_;
  std::ostream& out_;
};

json stick_json(int n, std::size_t stick) { return {{"stick", stick_label(lambda(n).sticks()[stick])}}; }

void print_domain(Emitter& e, const SuperDomain& d) {
  e.text() << "n=" << d.n() << '\n';
  for (const auto& t : d.members()) e.text() << show(t.inv(), e.format()) << '\n';
}

json domain_json(const SuperDomain& d, Format f) {
  json members = json::array();
  for (const auto& t : d.members()) members.push_back(show(t.inv(), f == Format::json ? Format::bits : f));
  return members;
}

json median_witness_json(const SuperDomain& d, const MedianWitness& w) {
  json members = json::array();
  for (auto idx : w.members) members.push_back(to_bits(d[idx].inv()));
  return {{"members", members}, {"median", to_bits(w.median)}};
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& o, Emitter& e) {
  const int n = require_n(o);
  const auto& all = enumerate_all(n);
  if (e.json_mode()) {
    json data;
    data["count"] = all.size();
    if (!o.count) data["tilings"] = domain_json(SuperDomain(n, all), Format::bits);
    e.result(n, "ok", nullptr, data);
  } else if (o.count) {
    e.text() << all.size() << '\n';
  } else {
    print_domain(e, SuperDomain(n, all));
  }
  return kHolds;
}

int cmd_validate(const Options& o, Emitter& e) {
  int n = 0;
  const auto sets = read_sets(o, n);
  int code = kHolds;
  for (const auto& s : sets) {
    const auto v = is_tiling(s);
    if (!v) code = kFails;
    if (e.json_mode()) {
      e.result(n, v ? "holds" : "fails", v ? json(nullptr) : stick_json(n, *v.failing_stick),
               {{"set", to_bits(s)}});
    } else {
      e.text() << show(s, e.format()) << (v ? " tiling" : " not-a-tiling");
      if (!v) e.text() << " stick " << stick_label(lambda(n).sticks()[*v.failing_stick]);
      e.text() << '\n';
    }
  }
  return code;
}

int cmd_aggregate(const Options& o, Emitter& e) {
  if (o.input.empty()) throw UsageError("aggregate needs --input PROFILE");
  const Profile profile = read_profile(o.input);
  InversionSet result;
  if (o.system.empty()) {
    result = simple_majority(profile);
  } else {
    result = aggregate_with_system(profile, read_majority_system(o.system));
  }
  const int n = profile.n();
  const auto v = is_tiling(result);
  if (e.json_mode()) {
    e.result(n, v ? "holds" : "fails", v ? json(nullptr) : stick_json(n, *v.failing_stick),
             {{"aggregate", to_bits(result)}, {"voters", profile.size()}});
  } else {
    e.text() << show(result, e.format()) << (v ? " tiling" : " not-a-tiling");
    if (!v) e.text() << " stick " << stick_label(lambda(n).sticks()[*v.failing_stick]);
    e.text() << '\n';
  }
  return v ? kHolds : kFails;
}

int cmd_median(const Options& o, Emitter& e) {
  int n = 0;
  const auto sets = read_sets(o, n);
  if (sets.size() != 3) throw UsageError("median takes exactly three inversion sets");
  const InversionSet m = median3(sets[0], sets[1], sets[2]);
  const auto v = is_tiling(m);
  if (e.json_mode()) {
    e.result(n, v ? "holds" : "fails", v ? json(nullptr) : stick_json(n, *v.failing_stick),
             {{"median", to_bits(m)}});
  } else {
    e.text() << show(m, e.format()) << (v ? " tiling" : " not-a-tiling");
    if (!v) e.text() << " stick " << stick_label(lambda(n).sticks()[*v.failing_stick]);
    e.text() << '\n';
  }
  return v ? kHolds : kFails;
}

int cmd_snakes(const Options& o, Emitter& e) {
  int n = 0;
  const auto sets = read_sets(o, n);
  if (sets.size() != 1) throw UsageError("snakes takes exactly one tiling");
  const Tiling t(sets.front());
  if (!o.seq.empty()) {
    const LinearOrder order(parse_int_list(o.seq));
    const bool member = is_compatible_order(order, t);
    if (e.json_mode())
      e.result(n, member ? "holds" : "fails", nullptr, {{"order", to_string(order)}});
    else
      e.text() << to_string(order) << (member ? " in" : " not-in") << " sigma\n";
    return member ? kHolds : kFails;
  }
  const auto orders = sigma(t);
  if (e.json_mode()) {
    json list = json::array();
    for (const auto& ord : orders) list.push_back(to_string(ord));
    e.result(n, "ok", nullptr, {{"count", orders.size()}, {"orders", list}});
  } else {
    for (const auto& ord : orders) e.text() << to_string(ord) << '\n';
  }
  return kHolds;
}

std::vector<LinearOrder> read_orders(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::vector<LinearOrder> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      out.emplace_back(parse_int_list(body));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return out;
}

int cmd_cd_check(const Options& o, Emitter& e) {
  std::vector<LinearOrder> domain;
  if (!o.input.empty() && o.items.empty()) {
    domain = read_orders(o.input);
  } else {
    int n = 0;
    const auto sets = read_sets(o, n);
    if (sets.size() != 1) throw UsageError("cd-check takes one tiling or --input ORDERS");
    domain = sigma(Tiling(sets.front()));
  }
  if (domain.empty()) throw UsageError("empty domain");
  const int n = domain.front().n();
  for (const auto& ord : domain)
    if (ord.n() != n) throw FormatError("orders over different n");
  const auto cycle = find_condorcet_cycle(domain);
  if (e.json_mode()) {
    json witness = nullptr;
    if (cycle) {
      json orders = json::array();
      for (auto idx : cycle->orders) orders.push_back(to_string(domain[idx]));
      witness = {{"orders", orders},
                 {"candidates", {cycle->candidates[0], cycle->candidates[1], cycle->candidates[2]}}};
    }
    e.result(n, cycle ? "fails" : "holds", witness, {{"size", domain.size()}});
  } else if (cycle) {
    e.text() << "not a Condorcet domain: orders";
    for (auto idx : cycle->orders) e.text() << ' ' << to_string(domain[idx]);
    e.text() << " cycle on candidates " << cycle->candidates[0] << ',' << cycle->candidates[1]
             << ',' << cycle->candidates[2] << '\n';
  } else {
    e.text() << "Condorcet domain of " << domain.size() << " orders\n";
  }
  return cycle ? kFails : kHolds;
}

SuperDomain read_domain(const Options& o) {
  int n = 0;
  auto sets = read_sets(o, n);
  return SuperDomain(n, as_tilings(std::move(sets)));
}

void print_median_witness(Emitter& e, const SuperDomain& d, const MedianWitness& w) {
  e.text() << "witness:";
  for (auto idx : w.members) e.text() << ' ' << show(d[idx].inv(), e.format());
  e.text() << " -> " << show(w.median, e.format()) << '\n';
}

int cmd_csd_check(const Options& o, Emitter& e) {
  const SuperDomain d = read_domain(o);
  const auto violation = find_csd_violation(d);
  const bool via_quads = is_csd_via_quadruples(d);
  const bool agree = via_quads == !violation.has_value();
  if (e.json_mode()) {
    e.result(d.n(), violation ? "fails" : "holds",
             violation ? median_witness_json(d, *violation) : json(nullptr),
             {{"size", d.size()}, {"quadruple_route", via_quads ? "holds" : "fails"}});
  } else {
    e.text() << (violation ? "not a CSD" : "CSD") << " (" << d.size() << " tilings)\n";
    if (violation) print_median_witness(e, d, *violation);
  }
  if (!agree) throw std::logic_error("median and quadruple routes disagree");
  return violation ? kFails : kHolds;
}

int cmd_csd_closed(const Options& o, Emitter& e) {
  const SuperDomain d = read_domain(o);
  const auto violation = find_closure_violation(d);
  if (e.json_mode()) {
    e.result(d.n(), violation ? "fails" : "holds",
             violation ? median_witness_json(d, *violation) : json(nullptr), {{"size", d.size()}});
  } else {
    e.text() << (violation ? "not closed" : "closed") << " (" << d.size() << " tilings)\n";
    if (violation) print_median_witness(e, d, *violation);
  }
  return violation ? kFails : kHolds;
}

int cmd_csd_maximal(const Options& o, Emitter& e) {
  const SuperDomain d = read_domain(o);
  std::optional<std::chrono::duration<double>> budget;
  if (o.budget > 0) budget = std::chrono::duration<double>(o.budget);
  const auto r = is_maximal_csd(d, budget);
  if (e.json_mode()) {
    json witness = nullptr;
    if (r.extension) witness = {{"extension", to_bits(r.extension->inv())}};
    if (r.violation) witness = median_witness_json(d, *r.violation);
    e.result(d.n(), to_string(r.verdict), witness, {{"size", d.size()}, {"csd", r.is_csd}});
  } else {
    if (!r.is_csd) {
      e.text() << "not a CSD\n";
      print_median_witness(e, d, *r.violation);
    } else if (r.verdict == Verdict::holds) {
      e.text() << "maximal CSD (" << d.size() << " tilings)\n";
    } else if (r.verdict == Verdict::unknown) {
      e.text() << "unknown: budget exhausted\n";
    } else {
      e.text() << "not maximal; extends by " << show(r.extension->inv(), e.format()) << '\n';
    }
  }
  return r.verdict == Verdict::holds ? kHolds : kFails;
}

StickOrientations orientations_for(const Options& o, int n) {
  if (o.orient.empty()) return StickOrientations::uniform(n, Orientation::direct);
  return read_orientations(o.orient, n);
}

json cycle_json(int n, const std::vector<std::size_t>& cycle) {
  json list = json::array();
  for (auto r : cycle) list.push_back(to_string(lambda(n).triple(r)));
  return {{"cycle", list}};
}

int cmd_build_cubillage(const Options& o, Emitter& e) {
  const int n = require_n(o);
  const auto orient = orientations_for(o, n);
  if (auto cycle = find_orientation_cycle(orient)) {
    if (e.json_mode())
      e.result(n, "fails", cycle_json(n, *cycle), nullptr);
    else
      e.text() << OrientationCycle(n, *cycle).what() << '\n';
    return kFails;
  }
  const SuperDomain d = cubillage_csd(orient);
  if (e.json_mode())
    e.result(n, "ok", nullptr, {{"size", d.size()}, {"members", domain_json(d, e.format())}});
  else
    print_domain(e, d);
  return kHolds;
}

int cmd_build_chain(const Options& o, Emitter& e) {
  const int n = require_n(o);
  std::vector<Triple> seq = lexicographic_order(n);
  if (!o.seq.empty()) {
    seq.clear();
    for (std::string_view item : split(o.seq, ',')) {
      const Triple t = parse_triple(item);
      if (!t.valid_for(n)) throw FormatError("triple " + to_string(t) + " exceeds n");
      seq.push_back(t);
    }
    if (seq.size() != choose3(n))
      throw UsageError("--seq must list all " + std::to_string(choose3(n)) + " triples");
  }
  const auto verdict = validate_admissible(seq);
  if (!verdict) {
    const auto label = stick_label(lambda(n).sticks()[*verdict.failing_stick]);
    if (e.json_mode())
      e.result(n, "fails", {{"stick", label}}, nullptr);
    else
      e.text() << "inadmissible on stick " << label << '\n';
    return kFails;
  }
  const auto chain = chain_from_linear(seq);
  if (e.json_mode()) {
    json list = json::array();
    for (const auto& t : chain) list.push_back(to_bits(t.inv()));
    e.result(n, "ok", nullptr, {{"length", chain.size()}, {"chain", list}});
  } else {
    e.text() << "n=" << n << '\n';
    for (const auto& t : chain) e.text() << show(t.inv(), e.format()) << '\n';
  }
  return kHolds;
}

int cmd_build_symmetric(const Options& o, Emitter& e) {
  const int n = require_n(o);
  if (o.seq.empty()) throw UsageError("build-symmetric needs --seq");
  const LambdaPartition partition = symmetric_partition(SplitSequence(n, parse_int_list(o.seq)));
  const SuperDomain d = boolean_csd(partition);
  if (e.json_mode()) {
    json parts = json::object();
    for (const auto& [j, part] : partition.parts) parts[std::to_string(j)] = to_triple_list(part.inv());
    e.result(n, "ok", nullptr,
             {{"size", d.size()}, {"partition", parts}, {"members", domain_json(d, e.format())}});
  } else if (o.partition) {
    e.text() << format_partition(partition);
  } else {
    print_domain(e, d);
  }
  return kHolds;
}

int cmd_export_graph(const Options& o, Emitter& e) {
  const int n = require_n(o);
  std::string dot;
  if (!o.orient.empty()) {
    const auto orient = read_orientations(o.orient, n);
    if (auto cycle = find_orientation_cycle(orient)) {
      e.text() << OrientationCycle(n, *cycle).what() << '\n';
      return kFails;
    }
    dot = to_dot(AdmissibleOrder(orient));
  } else {
    dot = to_dot(flip_graph(n));
  }
  if (e.json_mode())
    e.result(n, "ok", nullptr, {{"dot", dot}});
  else
    e.text() << dot;
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rhombus tilings of Z(n;2), majority aggregation and Condorcet super-domains",
               "rhombus"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Format> formats{
      {"bits", Format::bits}, {"triples", Format::triples}, {"json", Format::json}};

  struct Verb {
    const char* name;
    const char* help;
    int (*fn)(const Options&, Emitter&);
  };
  const std::vector<Verb> verbs{
      {"enumerate", "list or count all tilings", cmd_enumerate},
      {"validate", "check Ziegler's criterion", cmd_validate},
      {"aggregate", "majority aggregate of a profile", cmd_aggregate},
      {"median", "median of three inversion sets", cmd_median},
      {"snakes", "compatible linear orders of a tiling", cmd_snakes},
      {"cd-check", "Condorcet-domain check for linear orders", cmd_cd_check},
      {"csd-check", "Condorcet super-domain check", cmd_csd_check},
      {"csd-closed", "closedness under medians", cmd_csd_closed},
      {"csd-maximal", "maximality among CSDs", cmd_csd_maximal},
      {"build-cubillage", "CSD from stick orientations", cmd_build_cubillage},
      {"build-chain", "maximal chain from an admissible order", cmd_build_chain},
      {"build-symmetric", "Boolean symmetric CSD from a split sequence", cmd_build_symmetric},
      {"export-graph", "DOT export of the flip graph or precedence digraph", cmd_export_graph},
  };

  std::map<CLI::App*, const Verb*> dispatch;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--n", o.n, "color count");
    sub->add_option("--input", o.input, "input file");
    sub->add_option("--format", o.format, "bits, triples or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--seq", o.seq, "comma-separated sequence");
    sub->add_option("--orient", o.orient, "stick orientation file");
    sub->add_option("--system", o.system, "majority system file");
    sub->add_option("--budget", o.budget, "time budget in seconds");
    sub->add_flag("--count", o.count, "print only the number of results");
    sub->add_flag("--partition", o.partition, "print the partition instead of the domain");
    sub->add_option("items", o.items, "inversion sets (bitstrings or triple lists)");
    dispatch[sub] = &v;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  const Verb* verb = nullptr;
  for (auto* sub : app.get_subcommands()) verb = dispatch.at(sub);
  Emitter emitter(verb->name, o.format, out);
  try {
    return verb->fn(o, emitter);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const FormatError& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const NotATiling& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
  }
  return kUsage;
}

}  // namespace rhombus::cli
