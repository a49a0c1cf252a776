#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dthresh/cartesian.hpp"
#include "dthresh/errors.hpp"
#include "dthresh/families.hpp"
#include "dthresh/graph6.hpp"
#include "dthresh/oracle.hpp"
#include "dthresh/thresholds.hpp"

namespace dthresh::cli {
namespace {

constexpr const char* kGrammar =
    "Families: path:N cycle:N complete:N biclique:M,N star:M doublestar:N kneser:N[,2] "
    "circulant:N:S1,S2,... empty:N. Anything without ':' is read as graph6.";

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// One output line. Records print key=value (and key.method=...); the human
// form prints "label: value (method)".
struct Entry {
  std::string key;
  std::string label;
  std::string value;
  std::string method;
};

class Output {
 public:
  Output(std::ostream& out, bool records) : out_(out), records_(records) {}

  void add(std::string key, std::string label, std::string value, std::string method = {}) {
    entries_.push_back({std::move(key), std::move(label), std::move(value), std::move(method)});
  }

  void flush() {
    std::size_t width = 0;
    for (const auto& e : entries_) width = std::max(width, e.label.size());
    for (const auto& e : entries_) {
      if (records_) {
        out_ << e.key << '=' << e.value << '\n';
        if (!e.method.empty()) out_ << e.key << ".method=" << e.method << '\n';
      } else {
        out_ << e.label << ':' << std::string(width - e.label.size() + 1, ' ') << e.value;
        if (!e.method.empty()) out_ << " (" << e.method << ')';
        out_ << '\n';
      }
    }
    entries_.clear();
  }

 private:
  std::ostream& out_;
  bool records_;
  std::vector<Entry> entries_;
};

struct ModeInfo {
  Mode mode;
  const char* key;
  const char* label;
};

constexpr ModeInfo kModes[] = {
    {Mode::Vertex, "theta", "theta"},
    {Mode::Edge, "theta_prime", "theta'"},
    {Mode::Total, "theta_total", "theta''"},
};

std::vector<Mode> selected_modes(const std::string& text) {
  if (text == "all") return {Mode::Vertex, Mode::Edge, Mode::Total};
  const auto mode = parse_mode(text);
  if (!mode) throw CLI::ValidationError("--mode", "expected vertex, edge, total or all");
  return {*mode};
}

const ModeInfo& info(Mode mode) {
  for (const auto& m : kModes)
    if (m.mode == mode) return m;
  return kModes[0];
}

Graph parse_factor(const std::string& token) {
  if (token.find(':') != std::string::npos) return build_family(parse_family(token));
  return parse_graph6(token);
}

struct ProductInput {
  ProductSpec spec;
  std::string descriptor;
};

ProductInput parse_power(const std::string& text) {
  const auto caret = text.rfind('^');
  if (caret == std::string::npos || !all_digits(std::string_view(text).substr(caret + 1))) {
    throw ParameterOutOfRange("power must look like BASE^K, got '" + text + "'");
  }
  const std::string base = text.substr(0, caret);
  const int k = std::stoi(text.substr(caret + 1));
  return {ProductSpec::power(parse_factor(base), k), base + "^" + std::to_string(k)};
}

ProductInput parse_factors(const std::vector<std::string>& raw) {
  std::vector<std::string> tokens;
  for (const auto& r : raw)
    for (auto& t : split_factor_list(r)) tokens.push_back(std::move(t));
  std::vector<Graph> factors;
  std::string descriptor;
  for (const auto& t : tokens) {
    factors.push_back(parse_factor(t));
    descriptor += (descriptor.empty() ? "" : " x ") + t;
  }
  return {ProductSpec::distinct(std::move(factors)), descriptor};
}

ProductInput parse_product_expression(const std::string& text) {
  if (text.find('^') != std::string::npos) {
    const auto caret = text.rfind('^');
    if (all_digits(std::string_view(text).substr(caret + 1))) return parse_power(text);
  }
  return parse_factors({text});
}

std::string format_permutation(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p(i));
  return s + "]";
}

void warn_limits(const OracleLimits& limits, std::ostream& err) {
  const OracleLimits defaults;
  if (limits.max_domain > defaults.max_domain) {
    err << "warning: oracle domain limit raised to " << limits.max_domain
        << "; run time grows exponentially with the domain size\n";
  }
}

// ---- threshold -----------------------------------------------------------

struct ThresholdArgs {
  std::string family;
  std::string graph6;
  std::string product;
  std::string mode = "all";
  std::string format = "human";
  bool check = false;
  bool dist = false;
  bool extremes = false;
  bool timing = false;
  std::size_t cap = kDefaultAutomorphismCap;
  OracleLimits limits;
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out, std::ostream& err) {
  const int sources = !a.family.empty() + !a.graph6.empty() + !a.product.empty();
  if (sources != 1) {
    err << "error: give exactly one of --family, --graph6, --product\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto modes = selected_modes(a.mode);
  warn_limits(a.limits, err);

  Graph g;
  std::string descriptor;
  std::optional<FamilySpec> family;
  if (!a.family.empty()) {
    family = parse_family(a.family);
    g = build_family(*family);
    descriptor = "family " + to_string(*family);
  } else if (!a.graph6.empty()) {
    g = parse_graph6(a.graph6);
    descriptor = "graph6 " + emit_graph6(g);
  } else {
    auto p = parse_product_expression(a.product);
    g = p.spec.assemble();
    descriptor = "product " + p.descriptor;
  }
  if (g.order() == 0) {
    err << "error: the graph has no vertices\n";
    return kUsage;
  }

  Output o(out, a.format == "records");
  o.add("input", "input", descriptor);
  o.add("order", "order", std::to_string(g.order()));
  o.add("size", "size", std::to_string(g.size()));

  std::optional<AutomorphismGroup> group;
  std::optional<ThresholdReport> report;
  try {
    group = enumerate_automorphisms(g, a.cap);
    ReportOptions options;
    options.vertex = options.edge = options.total = false;
    for (Mode m : modes) {
      if (m == Mode::Vertex) options.vertex = true;
      if (m == Mode::Edge) options.edge = true;
      if (m == Mode::Total) options.total = true;
    }
    options.distinguishing_numbers = a.dist;
    options.automorphism_cap = a.cap;
    options.limits = a.limits;
    report = threshold_report(g, options);
  } catch (const CapExceeded& e) {
    if (!family) throw;
    err << "note: " << e.what() << '\n';
  }

  if (report) o.add("automorphisms", "automorphisms", std::to_string(report->automorphism_count));
  bool disagreement = false;
  for (Mode m : modes) {
    const auto& mi = info(m);
    std::optional<Threshold> lemma;
    if (report) {
      const auto& tagged = m == Mode::Vertex ? report->theta
                           : m == Mode::Edge ? report->theta_prime
                                             : report->theta_total;
      lemma = tagged->value;
      o.add(mi.key, mi.label, tagged->value.to_string(), std::string(to_string(tagged->method)));
    }
    std::optional<Threshold> closed;
    if (family && m != Mode::Total) {
      try {
        closed = Threshold::of(threshold_closed_form(*family, m));
        o.add(std::string(mi.key) + ".closed_form", std::string(mi.label) + " closed form",
              closed->to_string(), std::string(to_string(Method::ClosedForm)));
      } catch (const OutOfTheoremRange&) {
      }
    }
    if (a.extremes && report) {
      const auto& x = report->extremes;
      const auto& arg = m == Mode::Vertex ? x.vertex_argmax
                        : m == Mode::Edge ? x.edge_argmax
                                          : x.total_argmax;
      const int cycles = m == Mode::Vertex ? x.max.vertex_cycles
                         : m == Mode::Edge ? x.max.edge_cycles
                                           : x.max.total_cycles;
      if (arg) {
        o.add(std::string(mi.key) + ".max_cycles", std::string(mi.label) + " max cycles",
              std::to_string(cycles));
        o.add(std::string(mi.key) + ".argmax", std::string(mi.label) + " argmax",
              format_permutation(*arg));
      }
    }
    if (a.check) {
      const std::string key = std::string(mi.key) + ".check";
      const std::string label = std::string(mi.label) + " check";
      const int d = domain_size(g, m);
      if (!group) {
        o.add(key, label, "skipped: automorphism cap exceeded");
      } else if (d > a.limits.max_domain) {
        o.add(key, label,
              "skipped: " + std::string(to_string(m)) + " domain has " + std::to_string(d) +
                  " elements, above --max-domain " + std::to_string(a.limits.max_domain));
      } else {
        const auto exact = exact_threshold(g, *group, m, a.limits).threshold;
        const bool agree = (!lemma || *lemma == exact) && (!closed || *closed == exact);
        disagreement = disagreement || !agree;
        o.add(std::string(mi.key) + ".oracle", std::string(mi.label) + " oracle", exact.to_string(),
              std::string(to_string(Method::Oracle)));
        o.add(key, label, agree ? "agree" : "disagree");
      }
    }
  }
  if (report && report->dist_number)
    o.add("dist_number", "D", report->dist_number->value.to_string(),
          std::string(to_string(report->dist_number->method)));
  if (report && report->dist_index)
    o.add("dist_index", "D'", report->dist_index->value.to_string(),
          std::string(to_string(report->dist_index->method)));
  if (report && std::find(modes.begin(), modes.end(), Mode::Edge) != modes.end())
    o.add("breakable_by_edges", "breakable by edges", report->breakable_by_edges ? "yes" : "no");
  if (a.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << ms.count();
    o.add("time_ms", "time (ms)", t.str());
  }
  o.flush();
  return disagreement ? kDisagreement : kOk;
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
  std::string file;
  std::string filter;
  std::string format = "human";
  std::size_t cap = kDefaultAutomorphismCap;
};

struct Filter {
  Mode mode;
  Threshold value;
};

std::optional<Filter> parse_filter(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto eq = text.find('=');
  const std::string key = text.substr(0, eq);
  const std::string value = eq == std::string::npos ? "" : text.substr(eq + 1);
  Filter f{Mode::Vertex, Threshold::undefined()};
  if (key == "theta") f.mode = Mode::Vertex;
  else if (key == "theta-prime") f.mode = Mode::Edge;
  else if (key == "theta-total") f.mode = Mode::Total;
  else throw CLI::ValidationError("--filter", "key must be theta, theta-prime or theta-total");
  if (value == "undefined") return f;
  if (!all_digits(value)) throw CLI::ValidationError("--filter", "value must be a count or 'undefined'");
  f.value = Threshold::of(std::stoll(value));
  return f;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const auto filter = parse_filter(a.filter);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (a.file != "-") {
    file.open(a.file);
    if (!file) {
      err << "error: cannot open " << a.file << '\n';
      return kUsage;
    }
    in = &file;
  }
  const bool records = a.format == "records";
  if (!records) out << "line  graph6      order  size  |Aut|     theta    theta'   theta''\n";

  long graphs = 0, matched = 0, errors = 0, line_no = 0;
  for (std::string line; std::getline(*in, line);) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = parse_graph6(line);
      if (g.order() == 0) throw PreconditionViolated("graph has no vertices");
      const auto r = threshold_report(g, {.automorphism_cap = a.cap});
      ++graphs;
      const Threshold values[] = {r.theta->value, r.theta_prime->value, r.theta_total->value};
      if (filter && values[static_cast<int>(filter->mode)] != filter->value) continue;
      ++matched;
      if (records) {
        out << "line=" << line_no << " graph6=" << line << " order=" << g.order()
            << " size=" << g.size() << " aut=" << r.automorphism_count
            << " theta=" << values[0] << " theta_prime=" << values[1]
            << " theta_total=" << values[2] << '\n';
      } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-5ld %-11s %5d %5d %6zu %9s %9s %9s\n", line_no,
                      line.c_str(), g.order(), g.size(), r.automorphism_count,
                      values[0].to_string().c_str(), values[1].to_string().c_str(),
                      values[2].to_string().c_str());
        out << buf;
      }
    } catch (const std::exception& e) {
      ++errors;
      err << "line " << line_no << ": " << e.what() << '\n';
    }
  }
  if (records) {
    out << "graphs=" << graphs << " matched=" << matched << " errors=" << errors << '\n';
  } else {
    out << graphs << " graphs";
    if (filter) out << ", " << matched << " matched";
    if (errors) out << ", " << errors << " errors";
    out << '\n';
  }
  return errors ? kUsage : kOk;
}

// ---- product -------------------------------------------------------------

struct ProductArgs {
  std::vector<std::string> factors;
  std::string power;
  std::string mode = "all";
  std::string term = "half-edges";
  std::string format = "human";
  bool assemble = false;
  int max_order = 4096;
  std::size_t cap = kDefaultAutomorphismCap;
};

int cmd_product(const ProductArgs& a, std::ostream& out, std::ostream& err) {
  if (a.factors.empty() == a.power.empty()) {
    err << "error: give exactly one of --factors, --power\n";
    return kUsage;
  }
  std::vector<Mode> modes;
  if (a.mode == "all") {
    modes = {Mode::Vertex, Mode::Edge};
  } else {
    const auto m = parse_mode(a.mode);
    if (!m || *m == Mode::Total) {
      err << "error: product formulas exist for vertex and edge modes only\n";
      return kUsage;
    }
    modes = {*m};
  }
  TranspositionTerm term = TranspositionTerm::HalfEdgeCount;
  if (a.term == "transposition-cycles") {
    term = TranspositionTerm::TranspositionCycles;
  } else if (a.term != "half-edges") {
    err << "error: --term must be half-edges or transposition-cycles\n";
    return kUsage;
  }

  const auto input = a.power.empty() ? parse_factors(a.factors) : parse_power(a.power);
  const auto& spec = input.spec;
  if (!spec.is_power() && spec.factors.size() < 2) {
    err << "error: a product needs at least two factors\n";
    return kUsage;
  }

  Output o(out, a.format == "records");
  o.add("input", "product", input.descriptor);
  std::int64_t order = 1;
  for (const auto& f : spec.expanded()) {
    if (order > (std::int64_t{1} << 40) / std::max(1, f.order())) {
      order = -1;
      break;
    }
    order *= f.order();
  }
  o.add("order", "order", order < 0 ? "overflow" : std::to_string(order));

  std::vector<std::int64_t> formula;
  for (Mode m : modes) {
    const auto value = m == Mode::Vertex ? theta_product(spec) : theta_prime_product(spec, term);
    formula.push_back(value);
    o.add(std::string(info(m).key) + ".formula", std::string(info(m).label) + " formula",
          std::to_string(value), std::string(to_string(Method::ClosedForm)));
  }

  bool disagreement = false;
  if (a.assemble) {
    if (order < 0 || order > a.max_order) {
      o.add("direct", "direct",
            "skipped: product has " + (order < 0 ? std::string("too many") : std::to_string(order)) +
                " vertices, above --max-order " + std::to_string(a.max_order));
    } else {
      const Graph g = spec.assemble();
      const auto group = enumerate_automorphisms(g, a.cap);
      for (std::size_t i = 0; i < modes.size(); ++i) {
        const auto& mi = info(modes[i]);
        const Threshold direct = modes[i] == Mode::Vertex ? Threshold::of(theta_by_lemma(g, group))
                                                          : theta_prime_by_lemma(g, group);
        const bool agree = direct == Threshold::of(formula[i]);
        disagreement = disagreement || !agree;
        o.add(std::string(mi.key) + ".direct", std::string(mi.label) + " direct",
              direct.to_string(), std::string(to_string(Method::CycleLemma)));
        o.add(std::string(mi.key) + ".verdict", std::string(mi.label) + " verdict",
              agree ? "agree" : "disagree");
      }
    }
  }
  o.flush();
  return disagreement ? kDisagreement : kOk;
}

}  // namespace

std::vector<std::string> split_factor_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto token = text.substr(start, comma - start);
    if (all_digits(token) && !out.empty()) {
      out.back() += ",";
      out.back() += token;
    } else if (!token.empty()) {
      out.emplace_back(token);
    }
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing thresholds of small graphs", "dthresh"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  ThresholdArgs ta;
  auto* threshold = app.add_subcommand("threshold", "thresholds of one graph");
  threshold->add_option("--family", ta.family, "family spec, e.g. path:4");
  threshold->add_option("--graph6", ta.graph6, "graph6 string");
  threshold->add_option("--product", ta.product, "factor list or power, e.g. path:2,path:3 or path:3^2");
  threshold->add_option("--mode", ta.mode, "vertex, edge, total or all")->capture_default_str();
  threshold->add_flag("--check", ta.check, "cross-check against the brute-force oracle");
  threshold->add_flag("--dist", ta.dist, "also compute D and D' with the oracle");
  threshold->add_flag("--extremes", ta.extremes, "print a maximising automorphism per mode");
  threshold->add_flag("--timing", ta.timing, "print elapsed time");
  threshold->add_option("--format", ta.format, "human or records")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
  threshold->add_option("--max-domain", ta.limits.max_domain, "oracle domain limit")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  threshold->add_option("--automorphism-cap", ta.cap, "automorphism enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "thresholds of every graph in a graph6 file");
  scan->add_option("file", sa.file, "graph6 file, one graph per line ('-' for stdin)")->required();
  scan->add_option("--filter", sa.filter, "theta=K, theta-prime=K or theta-total=K (K may be 'undefined')");
  scan->add_option("--format", sa.format, "human or records")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
  scan->add_option("--automorphism-cap", sa.cap, "automorphism enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ProductArgs pa;
  auto* product = app.add_subcommand("product", "Cartesian product formulas");
  product->add_option("--factors", pa.factors, "comma-separated factors (family specs or graph6)");
  product->add_option("--power", pa.power, "BASE^K, e.g. path:3^2");
  product->add_option("--mode", pa.mode, "vertex, edge or all")->capture_default_str();
  product->add_option("--term", pa.term, "power transposition term: half-edges or transposition-cycles")
      ->capture_default_str();
  product->add_flag("--assemble", pa.assemble, "build the product and compare with the cycle lemma");
  product->add_option("--max-order", pa.max_order, "largest product to assemble")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  product->add_option("--automorphism-cap", pa.cap, "automorphism enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  product->add_option("--format", pa.format, "human or records")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*threshold) return cmd_threshold(ta, out, err);
    if (*scan) return cmd_scan(sa, out, err);
    return cmd_product(pa, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace dthresh::cli
