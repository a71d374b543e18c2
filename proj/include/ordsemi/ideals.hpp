#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsemi/structure.hpp"
#include "ordsemi/subset.hpp"

namespace ordsemi {

enum class Side { left, right, two_sided };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

/// (X] = {t : t <= h for some h in X}
ElementSubset downward_closure(OrderedSemigroup const& s, ElementSubset x);

/// XY = {x.y : x in X, y in Y}
ElementSubset subset_product(OrderedSemigroup const& s, ElementSubset x,
                             ElementSubset y);

/// Principal ideal generated by a, closed downward:
/// left ({a} u Sa], right ({a} u aS], two-sided ({a} u Sa u aS u SaS].
ElementSubset principal_ideal(OrderedSemigroup const& s, Element a, Side side);

/// The same sets without the downward closure, {xa : x in S^1} etc.
ElementSubset principal_ideal_literal(OrderedSemigroup const& s, Element a,
                                      Side side);

/// Why a subset fails to be an ideal. For absorption failures the witness is
/// (s, i) with s.i (left) or i.s (right) outside the subset; for closure
/// failures it is (t, h) with t <= h, h inside and t outside.
struct IdealViolation {
  enum class Kind { left_absorption, right_absorption, downward_closure };
  Kind kind;
  Element first;
  Element second;
};

struct IdealCheck {
  bool holds = true;
  std::optional<IdealViolation> violation;
};

/// Throws std::invalid_argument for the empty subset.
IdealCheck is_ideal(OrderedSemigroup const& s, ElementSubset i, Side side);

struct SimplicityCheck {
  bool holds = true;
  /// An inclusion-minimal proper ideal, the least such bit mask among those
  /// of smallest size.
  std::optional<ElementSubset> proper_ideal;
};

SimplicityCheck is_simple(OrderedSemigroup const& s, Side side);

}  // namespace ordsemi
