#pragma once

// Catalog of characterisation conditions for inverse ordered semigroups,
// grouped into equivalence and implication statements, and a corpus sweep
// that reports every structure on which a grouping disagrees.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsemi/properties.hpp"
#include "ordsemi/relations.hpp"
#include "ordsemi/structure.hpp"

namespace ordsemi {

/// Lazily computed facts about one structure shared by all conditions.
class StructureAnalysis {
 public:
  explicit StructureAnalysis(OrderedSemigroup s);

  OrderedSemigroup const& structure() const noexcept { return s_; }
  std::size_t order() const noexcept { return s_.order(); }

  GreensRelations const& greens() const;
  ElementSubset idempotents() const;
  ElementSubset inverses(Element a) const;
  bool is_idempotent(Element e) const { return idempotents().contains(e); }
  bool regular() const;
  bool completely_regular() const;
  PropertyReport const& inverse() const;
  bool h_commutes(Element a, Element b) const;
  ElementSubset ideal(Element a, Side side) const;
  Partition const& least_complete_semilattice() const;
  DecompositionCheck const& group_like_decomposition() const;

 private:
  OrderedSemigroup s_;
  mutable std::optional<GreensRelations> greens_;
  mutable std::optional<ElementSubset> idempotents_;
  mutable std::vector<ElementSubset> inverses_;
  mutable std::optional<bool> regular_;
  mutable std::optional<bool> completely_regular_;
  mutable std::optional<PropertyReport> inverse_;
  mutable std::vector<std::int8_t> h_commutes_;
  mutable std::vector<ElementSubset> ideals_;
  mutable std::optional<Partition> lcsc_;
  mutable std::optional<DecompositionCheck> decomposition_;
};

/// What a condition presupposes before its verdict is meaningful.
enum class Hypothesis { none, regular, inverse, completely_regular };

std::string_view to_string(Hypothesis h);

struct ConditionInfo {
  std::string id;
  std::string description;
  Hypothesis hypothesis;
};

std::vector<ConditionInfo> const& condition_catalog();
ConditionInfo const& condition_info(std::string_view id);

struct ConditionVerdict {
  std::string id;
  bool holds = true;
  std::vector<Element> witness;
  bool hypothesis_met = true;
};

/// Exhaustive quantifier scan; witnesses are the lexicographically least
/// violating tuple. Throws std::invalid_argument for an unknown id.
ConditionVerdict evaluate_condition(OrderedSemigroup const& s,
                                    std::string_view id);
ConditionVerdict evaluate_condition(StructureAnalysis const& a,
                                    std::string_view id);

/// Re-checks a failing verdict's witness against the condition definition.
/// Conditions without a witness (the decomposition one) re-run the check.
bool witness_reverifies(StructureAnalysis const& a,
                        ConditionVerdict const& v);

enum class TheoremKind {
  /// All conditions hold or all fail.
  equivalence,
  /// The first condition implies every other one.
  implication
};

struct TheoremInfo {
  std::string id;
  std::string description;
  TheoremKind kind;
  Hypothesis ambient;
  std::vector<std::string> conditions;
};

std::vector<TheoremInfo> const& theorem_catalog();
TheoremInfo const& theorem_info(std::string_view id);
std::vector<std::string> all_theorem_ids();

struct TheoremReport {
  std::string theorem;
  CanonicalForm structure;
  std::vector<ConditionVerdict> vector;
  bool hypothesis_met = true;
  bool consistent = true;
};

TheoremReport check_theorem(OrderedSemigroup const& s, std::string_view id);
TheoremReport check_theorem(StructureAnalysis const& a, std::string_view id);

struct Inconsistency {
  TheoremReport report;
  std::string structure_text;
};

struct TheoremSweep {
  std::string theorem;
  std::size_t checked = 0;
  std::size_t hypothesis_met = 0;
  std::size_t inconsistent = 0;
  std::vector<Inconsistency> inconsistencies;
  /// Structures outside the ambient hypothesis whose vector still disagrees.
  std::size_t outside_hypothesis = 0;
  std::size_t outside_disagreements = 0;
  std::vector<Inconsistency> outside_examples;
};

struct SweepReport {
  std::vector<TheoremSweep> theorems;
  std::size_t skipped_invalid = 0;
  std::vector<std::string> notes;

  std::size_t total_inconsistent() const;
};

struct SweepOptions {
  /// Worker threads; the corpus is split into contiguous chunks.
  std::size_t threads = 1;
  /// Cap on stored outside-hypothesis examples per theorem.
  std::size_t max_outside_examples = 10;
};

/// Evaluates each theorem on each corpus member. Output is ordered by
/// canonical form regardless of thread scheduling.
SweepReport sweep(std::vector<OrderedSemigroup> const& corpus,
                  std::vector<std::string> const& theorems,
                  SweepOptions const& opts = {});

/// Enumeration filter ids: condition ids, class-property ids and
/// `is_inverse_ordered`.
bool is_known_filter(std::string_view id);
bool evaluate_filter(OrderedSemigroup const& s, std::string_view id);

}  // namespace ordsemi
