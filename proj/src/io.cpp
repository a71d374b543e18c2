#include "ordsemi/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ordsemi/ideals.hpp"

namespace ordsemi {

std::string read_text_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<NamedStructure> parse_corpus(std::string const& text) {
  std::vector<NamedStructure> out;
  std::string record;
  std::size_t record_start = 1;  // file line of the record's first line
  std::size_t line_no = 0;
  bool has_content = false;

  auto flush = [&] {
    if (has_content) {
      try {
        out.push_back(parse_structure(record));
      } catch (ParseError const& e) {
        // Re-anchor the record-relative line to the file.
        std::string msg = e.what();
        auto colon = msg.find(": ");
        throw ParseError(record_start + e.line() - 1,
                         colon == std::string::npos ? msg
                                                    : msg.substr(colon + 2));
      }
    }
    record.clear();
    has_content = false;
  };

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line == "---" || line == "---\r") {
      flush();
      record_start = line_no + 1;
      continue;
    }
    auto body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") != std::string::npos) {
      has_content = true;
    }
    record += line;
    record += '\n';
  }
  flush();
  return out;
}

std::string serialize_corpus(std::vector<OrderedSemigroup> const& structures,
                             std::vector<std::string> const& header) {
  std::string out;
  for (auto const& h : header) {
    out += "# " + h + "\n";
  }
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (i != 0) {
      out += "---\n";
    }
    out += serialize_structure(structures[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["options"] = options;
  j["findings"] = Json::array();
  for (auto const& f : findings) {
    j["findings"].push_back(f);
  }
  return j;
}

namespace {

std::string render_value(Json const& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_object(std::ostringstream& out, Json const& obj, int indent) {
  for (auto const& [key, value] : obj.items()) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << key << ":";
    if (value.is_object()) {
      out << '\n';
      render_object(out, value, indent + 2);
    } else if (value.is_array() && !value.empty() &&
               value.front().is_object()) {
      out << '\n';
      for (auto const& item : value) {
        out << std::string(static_cast<std::size_t>(indent + 2), ' ')
            << "-\n";
        render_object(out, item, indent + 4);
      }
    } else {
      out << ' ' << render_value(value) << '\n';
    }
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << '\n';
  for (auto const& f : findings) {
    Json rest = f;
    std::string kind = f.value("kind", "finding");
    rest.erase("kind");
    out << "[" << kind << "]\n";
    render_object(out, rest, 2);
  }
  return out.str();
}

Json names_of(ElementSubset x, std::vector<std::string> const& names) {
  Json arr = Json::array();
  for (Element e : x.elements()) {
    arr.push_back(names.at(e));
  }
  return arr;
}

Json names_of(std::vector<Element> const& tuple,
              std::vector<std::string> const& names) {
  Json arr = Json::array();
  for (Element e : tuple) {
    arr.push_back(names.at(e));
  }
  return arr;
}

Json classes_json(Partition const& p, std::vector<std::string> const& names) {
  Json arr = Json::array();
  for (auto const& cls : p.classes()) {
    arr.push_back(names_of(cls, names));
  }
  return arr;
}

Json validation_finding(OrderedSemigroup const& s, ValidationReport const& r,
                        std::vector<std::string> const& names) {
  Json f;
  f["kind"] = "validation";
  f["structure"] = s.order() <= kMaxCanonicalOrder
                       ? canonical_form(s).str()
                       : std::string{};
  f["valid"] = r.valid;
  Json failures = Json::array();
  for (auto const& fail : r.failures) {
    Json one;
    one["axiom"] = std::string(to_string(fail.axiom));
    one["witness"] = names_of(fail.witness, names);
    auto const& w = fail.witness;
    auto nm = [&](Element e) { return names.at(e); };
    switch (fail.axiom) {
      case Axiom::associativity:
        one["detail"] = "(" + nm(w[0]) + nm(w[1]) + ")" + nm(w[2]) + " = " +
                        nm(s.mul(s.mul(w[0], w[1]), w[2])) + " but " +
                        nm(w[0]) + "(" + nm(w[1]) + nm(w[2]) + ") = " +
                        nm(s.mul(w[0], s.mul(w[1], w[2])));
        break;
      case Axiom::compatibility:
        one["detail"] =
            nm(w[0]) + " <= " + nm(w[1]) + " but " +
            (fail.left_factor
                 ? nm(w[2]) + nm(w[0]) + " = " + nm(s.mul(w[2], w[0])) +
                       " is not <= " + nm(w[2]) + nm(w[1]) + " = " +
                       nm(s.mul(w[2], w[1]))
                 : nm(w[0]) + nm(w[2]) + " = " + nm(s.mul(w[0], w[2])) +
                       " is not <= " + nm(w[1]) + nm(w[2]) + " = " +
                       nm(s.mul(w[1], w[2])));
        break;
      default:
        break;
    }
    failures.push_back(std::move(one));
  }
  f["failures"] = std::move(failures);
  return f;
}

Json property_finding(OrderedSemigroup const& s, PropertyReport const& r,
                      std::vector<std::string> const& names) {
  Json f;
  f["kind"] = "property";
  f["structure"] = canonical_form(s).str();
  f["property"] = r.property;
  f["holds"] = r.holds;
  f["applicable"] = r.applicable;
  f["witness"] = names_of(r.witness, names);
  if (!r.notes.empty()) {
    f["notes"] = r.notes;
  }
  return f;
}

Json theorem_finding(TheoremReport const& r,
                     std::vector<std::string> const& names) {
  Json f;
  f["kind"] = "theorem";
  f["structure"] = r.structure.str();
  f["theorem"] = r.theorem;
  f["hypothesis_met"] = r.hypothesis_met;
  f["consistent"] = r.consistent;
  Json verdicts = Json::array();
  for (auto const& v : r.vector) {
    Json one;
    one["condition"] = v.id;
    one["holds"] = v.holds;
    one["hypothesis_met"] = v.hypothesis_met;
    one["witness"] = names.empty() ? Json(v.witness) : names_of(v.witness, names);
    verdicts.push_back(std::move(one));
  }
  f["verdicts"] = std::move(verdicts);
  return f;
}

Json sweep_findings(SweepReport const& r) {
  Json arr = Json::array();
  for (auto const& t : r.theorems) {
    Json f;
    f["kind"] = "sweep";
    f["theorem"] = t.theorem;
    f["checked"] = t.checked;
    f["hypothesis_met"] = t.hypothesis_met;
    f["inconsistent"] = t.inconsistent;
    f["outside_hypothesis"] = t.outside_hypothesis;
    f["outside_disagreements"] = t.outside_disagreements;
    auto dump = [](std::vector<Inconsistency> const& xs) {
      Json out = Json::array();
      for (auto const& x : xs) {
        Json one = theorem_finding(x.report, {});
        one["structure_text"] = x.structure_text;
        out.push_back(std::move(one));
      }
      return out;
    };
    f["inconsistencies"] = dump(t.inconsistencies);
    f["outside_examples"] = dump(t.outside_examples);
    arr.push_back(std::move(f));
  }
  return arr;
}

std::vector<Json> analysis_findings(OrderedSemigroup const& s,
                                    std::vector<std::string> const& names) {
  std::vector<Json> out;
  auto const cf = canonical_form(s).str();
  auto const n = s.order();
  auto base = [&](std::string kind) {
    Json f;
    f["kind"] = std::move(kind);
    f["structure"] = cf;
    return f;
  };

  {
    auto f = base("idempotents");
    f["ordered_idempotents"] = names_of(ordered_idempotents(s), names);
    out.push_back(std::move(f));
  }
  auto g = greens_relations(s);
  {
    auto f = base("greens_relations");
    f["L"] = classes_json(g.L, names);
    f["R"] = classes_json(g.R, names);
    f["J"] = classes_json(g.J, names);
    f["H"] = classes_json(g.H, names);
    out.push_back(std::move(f));
  }
  {
    auto f = base("principal_ideals");
    Json per = Json::object();
    for (Element a = 0; a < n; ++a) {
      Json one;
      one["left"] = names_of(principal_ideal(s, a, Side::left), names);
      one["right"] = names_of(principal_ideal(s, a, Side::right), names);
      one["two_sided"] = names_of(principal_ideal(s, a, Side::two_sided), names);
      per[names.at(a)] = std::move(one);
    }
    f["ideals"] = std::move(per);
    out.push_back(std::move(f));
  }
  {
    auto f = base("inverses");
    Json per = Json::object();
    for (Element a = 0; a < n; ++a) {
      per[names.at(a)] = names_of(inverses_of(s, a), names);
    }
    f["inverses"] = std::move(per);
    out.push_back(std::move(f));
  }
  for (auto kind : {RegularityKind::regular, RegularityKind::completely_regular,
                    RegularityKind::right_regular,
                    RegularityKind::left_regular}) {
    out.push_back(property_finding(s, regularity(s, kind), names));
  }
  for (auto side : {Side::two_sided, Side::left, Side::right}) {
    out.push_back(property_finding(s, is_group_like(s, side), names));
  }
  out.push_back(property_finding(s, is_inverse_ordered(s, g), names));
  for (auto side : {Side::left, Side::right}) {
    out.push_back(property_finding(s, generator_uniqueness(s, side, g), names));
  }
  {
    auto f = base("simplicity");
    for (auto side : {Side::left, Side::right, Side::two_sided}) {
      auto r = is_simple(s, side);
      Json one;
      one["holds"] = r.holds;
      one["proper_ideal"] =
          r.proper_ideal ? names_of(*r.proper_ideal, names) : Json::array();
      f[std::string(to_string(side))] = std::move(one);
    }
    out.push_back(std::move(f));
  }
  {
    auto f = base("least_complete_semilattice_congruence");
    auto p = least_complete_semilattice_congruence(s);
    f["classes"] = classes_json(p, names);
    f["equals_J"] = p == g.J;
    out.push_back(std::move(f));
  }
  {
    auto f = base("decomposition");
    auto d = semilattice_decomposition_check(s, "group_like");
    f["class_property"] = "group_like";
    f["holds"] = d.holds;
    f["congruence"] =
        d.congruence ? classes_json(*d.congruence, names) : Json::array();
    f["via_J"] = d.via_j;
    out.push_back(std::move(f));
  }
  {
    auto f = base("h_commuting_pairs");
    Json pairs = Json::array();
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        if (h_commutes(s, a, b)) {
          pairs.push_back(names_of(std::vector<Element>{a, b}, names));
        }
      }
    }
    f["pairs"] = std::move(pairs);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ordsemi
