#pragma once

// Partitions of the carrier, Green's relations and semilattice congruences.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsemi/ideals.hpp"
#include "ordsemi/structure.hpp"

namespace ordsemi {

/// An equivalence relation on {0, ..., n-1}.
///
/// Class ids are normalised to first-occurrence order, so two partitions
/// are equal iff they describe the same relation.
class Partition {
 public:
  /// class_of[i] is an arbitrary label of i's class.
  explicit Partition(std::vector<std::size_t> const& class_of);

  static Partition identity(std::size_t n);
  static Partition universal(std::size_t n);
  /// Builds a partition from explicit classes; throws std::invalid_argument
  /// unless they are nonempty, disjoint and cover {0..n-1}.
  static Partition from_classes(std::size_t n,
                                std::vector<ElementSubset> const& classes);

  std::size_t universe() const noexcept { return class_of_.size(); }
  std::size_t class_of(Element a) const { return class_of_[a]; }
  bool related(Element a, Element b) const {
    return class_of_[a] == class_of_[b];
  }
  std::vector<ElementSubset> const& classes() const noexcept {
    return classes_;
  }

  /// True when every class of *this lies inside a class of `coarser`.
  bool refines(Partition const& coarser) const;

  friend bool operator==(Partition const& a, Partition const& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<ElementSubset> classes_;
};

/// Common refinement.
Partition meet(Partition const& a, Partition const& b);

/// All set partitions of {0..n-1} in restricted-growth-string order.
std::vector<Partition> all_partitions(std::size_t n);

/// Union-find over carrier indices, used for congruence closure.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns true when the two classes were distinct.
  bool unite(std::size_t x, std::size_t y);
  Partition to_partition();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

struct GreensRelations {
  Partition L;
  Partition R;
  Partition J;
  Partition H;
};

/// a L b iff the closed principal left ideals coincide; R, J likewise; H is
/// the meet of L and R.
GreensRelations greens_relations(OrderedSemigroup const& s);

/// Green's relations built from the literal, not downward-closed, principal
/// ideals. Only used as a cross-check.
GreensRelations greens_relations_literal(OrderedSemigroup const& s);

enum class CongruenceKind {
  left,
  right,
  two_sided,
  semilattice,
  complete_semilattice
};

std::string_view to_string(CongruenceKind k);

/// First violated requirement. `rule` names it ("left", "right", "square",
/// "commutative", "complete"); `witness` lists the indices involved:
/// (a,b,c) for left/right, (a) for square, (a,b) for commutative and
/// complete.
struct CongruenceViolation {
  std::string rule;
  std::vector<Element> witness;
};

struct CongruenceCheck {
  bool holds = true;
  std::optional<CongruenceViolation> violation;
};

/// Throws std::invalid_argument if p does not partition s's carrier.
CongruenceCheck is_congruence(OrderedSemigroup const& s, Partition const& p,
                              CongruenceKind kind);

/// Smallest congruence containing (a,a^2), (ab,ba) for all a, b and (a,ab)
/// whenever a <= b.
Partition least_complete_semilattice_congruence(OrderedSemigroup const& s);

struct DecompositionCheck {
  bool holds = false;
  /// The first complete semilattice congruence (in all_partitions order)
  /// all of whose classes satisfy the predicate.
  std::optional<Partition> congruence;
  /// Whether the J partition itself is such a decomposition.
  bool via_j = false;
  /// Number of complete semilattice congruences examined.
  std::size_t congruences_examined = 0;
};

/// Does some complete semilattice congruence have every class, as an ordered
/// subsemigroup with the induced order, satisfying `class_property`?
/// Property ids come from class_property_ids(); throws
/// std::invalid_argument for unknown ids.
DecompositionCheck semilattice_decomposition_check(
    OrderedSemigroup const& s, std::string_view class_property);

/// The induced ordered subsemigroup on `members`, relabelled 0..k-1 in
/// increasing order. Returns nullopt if the subset is not closed under
/// multiplication.
std::optional<OrderedSemigroup> induced_substructure(OrderedSemigroup const& s,
                                                     ElementSubset members);

}  // namespace ordsemi
