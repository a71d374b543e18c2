#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ordsemi/enumeration.hpp"
#include "ordsemi/io.hpp"
#include "ordsemi/oracle.hpp"
#include "ordsemi/properties.hpp"
#include "ordsemi/structure.hpp"
#include "ordsemi/theorems.hpp"

namespace ordsemi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(Report const& report, std::string const& format, std::ostream& out) {
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
}

NamedStructure load(std::string const& path) {
  return parse_structure(read_text_file(path));
}

Element resolve_element(NamedStructure const& ns, std::string const& tok) {
  auto it = std::find(ns.names.begin(), ns.names.end(), tok);
  if (it != ns.names.end()) {
    return static_cast<Element>(it - ns.names.begin());
  }
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() ||
      v >= ns.algebra.order()) {
    throw UsageError("unknown element '" + tok + "'");
  }
  return static_cast<Element>(v);
}

int cmd_validate(std::string const& path, bool use_opposite,
                 std::string const& format, std::ostream& out) {
  auto ns = load(path);
  auto s = use_opposite ? opposite(ns.algebra) : ns.algebra;
  auto r = validate(s);
  Report rep{"validate"};
  rep.options["file"] = path;
  rep.options["opposite"] = use_opposite;
  rep.findings.push_back(validation_finding(s, r, ns.names));
  emit(rep, format, out);
  return r.valid ? kOk : kFindings;
}

int cmd_analyze(std::string const& path, std::string const& format,
                std::ostream& out) {
  auto ns = load(path);
  auto r = validate(ns.algebra);
  Report rep{"analyze"};
  rep.options["file"] = path;
  rep.findings.push_back(validation_finding(ns.algebra, r, ns.names));
  if (r.valid) {
    for (auto& f : analysis_findings(ns.algebra, ns.names)) {
      rep.findings.push_back(std::move(f));
    }
  }
  emit(rep, format, out);
  return r.valid ? kOk : kFindings;
}

int cmd_inverses(std::string const& path, std::string const& element,
                 std::string const& format, std::ostream& out) {
  auto ns = load(path);
  auto r = validate(ns.algebra);
  Report rep{"inverses"};
  rep.options["file"] = path;
  rep.options["element"] = element;
  if (!r.valid) {
    rep.findings.push_back(validation_finding(ns.algebra, r, ns.names));
    emit(rep, format, out);
    return kFindings;
  }
  Element a = resolve_element(ns, element);
  auto const& s = ns.algebra;
  auto inv = inverses_of(s, a);
  Json f;
  f["kind"] = "inverses";
  f["structure"] = canonical_form(s).str();
  f["element"] = ns.names.at(a);
  f["inverses"] = names_of(inv, ns.names);
  auto idem = ordered_idempotents(s);
  Json products = Json::array();
  for (Element b : inv.elements()) {
    Json one;
    one["inverse"] = ns.names.at(b);
    one["a_inverse"] = ns.names.at(s.mul(a, b));
    one["inverse_a"] = ns.names.at(s.mul(b, a));
    one["both_idempotent"] =
        idem.contains(s.mul(a, b)) && idem.contains(s.mul(b, a));
    products.push_back(std::move(one));
  }
  f["products"] = std::move(products);
  rep.findings.push_back(std::move(f));
  emit(rep, format, out);
  return kOk;
}

struct EnumerateArgs {
  std::size_t order = 0;
  bool up_to_iso = false;
  bool table_first = false;
  bool allow_order_5 = false;
  std::vector<std::string> filters;
  std::string out_path;
  std::string shard;
};

EnumerationOptions to_options(std::size_t order, bool up_to_iso,
                              std::vector<std::string> filters,
                              std::string const& shard, bool allow_order_5) {
  EnumerationOptions o;
  o.order = order;
  o.mode = up_to_iso ? EnumerationMode::up_to_iso : EnumerationMode::labelled;
  o.filters = std::move(filters);
  if (!shard.empty()) {
    o.shard = parse_shard(shard);
  }
  if (allow_order_5) {
    o.max_order = kHardMaxEnumerationOrder;
  }
  try {
    check_options(o);
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  return o;
}

std::string describe(EnumerationOptions const& o) {
  std::ostringstream s;
  s << "order=" << o.order << " mode="
    << (o.mode == EnumerationMode::labelled ? "labelled" : "up_to_iso")
    << " shard=" << o.shard.index << "/" << o.shard.count;
  for (auto const& f : o.filters) {
    s << " filter=" << f;
  }
  return s.str();
}

int cmd_enumerate(EnumerateArgs const& a, std::string const& format,
                  std::ostream& out, std::ostream& err) {
  auto o = to_options(a.order, a.up_to_iso, a.filters, a.shard,
                      a.allow_order_5);
  auto structures = a.table_first ? enumerate_ordered_semigroups_table_first(o)
                                  : enumerate_ordered_semigroups(o);
  auto corpus = serialize_corpus(
      structures, {"ordsemi corpus " + describe(o),
                   "count=" + std::to_string(structures.size())});
  Report rep{"enumerate"};
  rep.options["order"] = o.order;
  rep.options["up_to_iso"] = a.up_to_iso;
  rep.options["filters"] = o.filters;
  rep.options["shard"] = std::to_string(o.shard.index) + "/" +
                         std::to_string(o.shard.count);
  Json f;
  f["kind"] = "enumeration";
  f["count"] = structures.size();
  Json forms = Json::array();
  for (auto const& s : structures) {
    forms.push_back(canonical_form(s).str());
  }
  f["structures"] = std::move(forms);
  rep.findings.push_back(std::move(f));

  if (a.out_path.empty()) {
    if (format == "json") {
      emit(rep, format, out);
    } else {
      out << corpus;
    }
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot write " + a.out_path);
    }
    file << corpus;
    emit(rep, format, out);
  }
  err << structures.size() << " ordered semigroups (" << describe(o) << ")\n";
  return kOk;
}

struct CheckArgs {
  std::size_t order = 0;
  bool labelled = false;
  bool allow_order_5 = false;
  std::string corpus_path;
  std::vector<std::string> theorems;
  std::string shard;
  std::size_t threads = 1;
};

int cmd_check(CheckArgs const& a, std::string const& format,
              std::ostream& out) {
  if ((a.order == 0) == a.corpus_path.empty()) {
    throw UsageError("check-theorems needs exactly one of --order or --corpus");
  }
  auto theorems = a.theorems.empty() ? all_theorem_ids() : a.theorems;
  for (auto const& id : theorems) {
    try {
      theorem_info(id);
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
  }
  Report rep{"check-theorems"};
  rep.options["theorems"] = theorems;
  std::vector<OrderedSemigroup> corpus;
  std::string summary;
  if (a.order != 0) {
    auto o = to_options(a.order, !a.labelled, {}, a.shard, a.allow_order_5);
    corpus = enumerate_ordered_semigroups(o);
    rep.options["order"] = a.order;
    rep.options["labelled"] = a.labelled;
    rep.options["shard"] = std::to_string(o.shard.index) + "/" +
                           std::to_string(o.shard.count);
    if (a.labelled && o.shard.count == 1) {
      summary = std::to_string(labelled_candidate_pairs(a.order)) +
                " candidate pairs";
    } else {
      summary = std::to_string(corpus.size()) +
                (a.labelled ? " labelled structures" : " structures up to isomorphism");
    }
  } else {
    if (!a.shard.empty()) {
      throw UsageError("--shard applies to --order runs");
    }
    for (auto& ns : parse_corpus(read_text_file(a.corpus_path))) {
      corpus.push_back(std::move(ns.algebra));
    }
    rep.options["corpus"] = a.corpus_path;
    summary = std::to_string(corpus.size()) + " corpus structures";
  }
  SweepOptions so;
  so.threads = a.threads;
  auto report = sweep(corpus, theorems, so);
  auto const bad = report.total_inconsistent();
  summary += bad == 0 ? ", all groupings consistent"
                      : ", " + std::to_string(bad) + " inconsistencies";

  Json sf;
  sf["kind"] = "summary";
  sf["message"] = summary;
  sf["structures"] = corpus.size();
  sf["skipped_invalid"] = report.skipped_invalid;
  sf["inconsistent"] = bad;
  rep.findings.push_back(std::move(sf));
  for (auto& f : sweep_findings(report)) {
    rep.findings.push_back(std::move(f));
  }
  if (format == "json") {
    emit(rep, format, out);
  } else {
    out << summary << '\n';
    for (auto const& t : report.theorems) {
      out << "  " << t.theorem << ": checked " << t.checked
          << ", hypothesis met " << t.hypothesis_met << ", inconsistent "
          << t.inconsistent << ", outside-hypothesis disagreements "
          << t.outside_disagreements << "/" << t.outside_hypothesis << '\n';
      for (auto const& inc : t.inconsistencies) {
        out << "  inconsistency in " << t.theorem << ":\n";
        for (auto const& v : inc.report.vector) {
          out << "    " << v.id << " = " << (v.holds ? "true" : "false")
              << '\n';
        }
        out << inc.structure_text;
      }
    }
  }
  return bad == 0 ? kOk : kFindings;
}

int cmd_oracle(std::string const& suite, std::string const& format,
               std::ostream& out) {
  std::string text;
  try {
    text = oracle::run_suite(suite);
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    Report rep{"oracle"};
    rep.options["suite"] = suite;
    Json f;
    f["kind"] = "oracle";
    f["suite"] = suite;
    Json lines = Json::array();
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      lines.push_back(line);
    }
    f["lines"] = std::move(lines);
    rep.findings.push_back(std::move(f));
    emit(rep, format, out);
  } else {
    out << text;
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ordsemi: finite ordered semigroup workbench", "ordsemi"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  bool use_opposite = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms");
  validate_cmd->add_option("file", file, "Structure file")->required();
  validate_cmd->add_flag("--opposite", use_opposite,
                         "Validate the reversed multiplication");

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Ideals, Green's relations, properties");
  analyze_cmd->add_option("file", file, "Structure file")->required();

  std::string element;
  auto* inverses_cmd = app.add_subcommand("inverses", "Inverses of an element");
  inverses_cmd->add_option("file", file, "Structure file")->required();
  inverses_cmd->add_option("element", element, "Element name or index")
      ->required();

  EnumerateArgs ea;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Enumerate ordered semigroups");
  enumerate_cmd->add_option("--order", ea.order, "Order n")->required();
  enumerate_cmd->add_flag("--up-to-iso", ea.up_to_iso,
                          "One structure per isomorphism class");
  enumerate_cmd->add_option("--filter", ea.filters, "Keep only if id holds");
  enumerate_cmd->add_option("--out", ea.out_path, "Corpus output file");
  enumerate_cmd->add_option("--shard", ea.shard, "Shard i/k");
  enumerate_cmd->add_flag("--table-first", ea.table_first,
                          "Pair every associative table with every order");
  enumerate_cmd->add_flag("--allow-order-5", ea.allow_order_5,
                          "Permit order 5");

  CheckArgs ca;
  auto* check_cmd =
      app.add_subcommand("check-theorems", "Sweep theorem groupings");
  check_cmd->add_option("--order", ca.order, "Enumerate structures of order n");
  check_cmd->add_flag("--labelled", ca.labelled,
                      "Use labelled structures rather than classes");
  check_cmd->add_option("--corpus", ca.corpus_path, "Corpus file");
  check_cmd->add_option("--theorem", ca.theorems, "Theorem id (repeatable)");
  check_cmd->add_option("--shard", ca.shard, "Shard i/k");
  check_cmd->add_option("--threads", ca.threads, "Worker threads")
      ->check(CLI::Range(1, 256));
  check_cmd->add_flag("--allow-order-5", ca.allow_order_5, "Permit order 5");

  std::string suite;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Run a brute-force reference computation");
  oracle_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(oracle::suite_names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*validate_cmd) {
      return cmd_validate(file, use_opposite, format, out);
    }
    if (*analyze_cmd) {
      return cmd_analyze(file, format, out);
    }
    if (*inverses_cmd) {
      return cmd_inverses(file, element, format, out);
    }
    if (*enumerate_cmd) {
      return cmd_enumerate(ea, format, out, err);
    }
    if (*check_cmd) {
      return cmd_check(ca, format, out);
    }
    if (*oracle_cmd) {
      return cmd_oracle(suite, format, out);
    }
  } catch (ParseError const& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ordsemi::cli
