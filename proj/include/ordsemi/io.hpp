#pragma once

// Corpus files and report rendering.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordsemi/properties.hpp"
#include "ordsemi/relations.hpp"
#include "ordsemi/structure.hpp"
#include "ordsemi/theorems.hpp"

namespace ordsemi {

using Json = nlohmann::ordered_json;

/// Throws std::runtime_error if the file cannot be read.
std::string read_text_file(std::filesystem::path const& path);

/// Records separated by lines consisting of `---`. Parse errors carry the
/// line number within the whole file.
std::vector<NamedStructure> parse_corpus(std::string const& text);

/// Header lines are emitted as `# ` comments before the first record.
std::string serialize_corpus(std::vector<OrderedSemigroup> const& structures,
                             std::vector<std::string> const& header);

// ---------------------------------------------------------------------------
// Reports
//
// A report is {command, options, findings: [...]}. The JSON form is the
// reference; the text form is rendered from the same findings.

struct Report {
  std::string command;
  Json options = Json::object();
  std::vector<Json> findings;

  Json to_json() const;
  std::string to_text() const;
};

Json names_of(ElementSubset x, std::vector<std::string> const& names);
Json names_of(std::vector<Element> const& tuple,
              std::vector<std::string> const& names);
Json classes_json(Partition const& p, std::vector<std::string> const& names);

Json validation_finding(OrderedSemigroup const& s, ValidationReport const& r,
                        std::vector<std::string> const& names);
Json property_finding(OrderedSemigroup const& s, PropertyReport const& r,
                      std::vector<std::string> const& names);
Json theorem_finding(TheoremReport const& r,
                     std::vector<std::string> const& names);
Json sweep_findings(SweepReport const& r);

/// Every per-structure fact the library computes, as a list of findings.
std::vector<Json> analysis_findings(OrderedSemigroup const& s,
                                    std::vector<std::string> const& names);

}  // namespace ordsemi
