#pragma once

// Element- and structure-level predicates on ordered semigroups.

#include <string>
#include <string_view>
#include <vector>

#include "ordsemi/ideals.hpp"
#include "ordsemi/relations.hpp"
#include "ordsemi/structure.hpp"

namespace ordsemi {

/// Outcome of a structure-level predicate.
///
/// When `holds` is false and the predicate was applicable, `witness` names
/// the least violating tuple. `applicable` is false when the predicate's own
/// precondition failed (for example group-likeness on a non-regular
/// structure); `holds` is then false as well.
struct PropertyReport {
  std::string property;
  bool holds = true;
  bool applicable = true;
  std::vector<Element> witness;
  std::string notes;
};

/// E(S) = {e : e <= e^2}
ElementSubset ordered_idempotents(OrderedSemigroup const& s);

/// V(a) = {b : a <= aba and b <= bab}
ElementSubset inverses_of(OrderedSemigroup const& s, Element a);

enum class RegularityKind {
  regular,             // a in (aSa]
  completely_regular,  // a in (a^2 S a^2]
  right_regular,       // a in (a^2 S]
  left_regular         // a in (S a^2]
};

std::string_view to_string(RegularityKind k);
RegularityKind parse_regularity(std::string_view text);

/// Whether the single element a satisfies the kind's membership.
bool is_regular_element(OrderedSemigroup const& s, Element a,
                        RegularityKind kind);

PropertyReport regularity(OrderedSemigroup const& s, RegularityKind kind);

/// two_sided: a in (Sb] and b in (aS] for all a, b; left: a in (Sb];
/// right: b in (aS]. Not applicable unless s is regular.
PropertyReport is_group_like(OrderedSemigroup const& s, Side kind);

/// ab <= bxa for some x.
bool h_commutes_directed(OrderedSemigroup const& s, Element a, Element b);

/// Both ab <= bxa and ba <= ayb for some x, y.
bool h_commutes(OrderedSemigroup const& s, Element a, Element b);

/// Regular, and any two inverses of each element are H-related. The witness
/// is (a, b, c) with b, c in V(a) not H-related, or (a) for a non-regular
/// element.
PropertyReport is_inverse_ordered(OrderedSemigroup const& s);
PropertyReport is_inverse_ordered(OrderedSemigroup const& s,
                                  GreensRelations const& g);

/// Every principal ideal on `side` is generated by an ordered idempotent,
/// and idempotents generating the same such ideal are H-related.
/// Witness (a) when a's ideal has no idempotent generator, (e, f) when two
/// generators of one ideal are not H-related.
PropertyReport generator_uniqueness(OrderedSemigroup const& s, Side side);
PropertyReport generator_uniqueness(OrderedSemigroup const& s, Side side,
                                    GreensRelations const& g);

/// Predicates usable on the classes of a semilattice decomposition.
std::vector<std::string> const& class_property_ids();

/// Throws std::invalid_argument for unknown ids. `t_simple` is accepted as
/// an alias of `group_like`.
bool evaluate_class_property(OrderedSemigroup const& s, std::string_view id);

}  // namespace ordsemi
