#include "ordsemi/properties.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordsemi {

ElementSubset ordered_idempotents(OrderedSemigroup const& s) {
  auto out = ElementSubset::empty(s.order());
  for (Element e = 0; e < s.order(); ++e) {
    if (s.leq(e, s.mul(e, e))) {
      out.insert(e);
    }
  }
  return out;
}

ElementSubset inverses_of(OrderedSemigroup const& s, Element a) {
  auto out = ElementSubset::empty(s.order());
  for (Element b = 0; b < s.order(); ++b) {
    if (s.leq(a, s.mul(a, b, a)) && s.leq(b, s.mul(b, a, b))) {
      out.insert(b);
    }
  }
  return out;
}

std::string_view to_string(RegularityKind k) {
  switch (k) {
    case RegularityKind::regular:
      return "regular";
    case RegularityKind::completely_regular:
      return "completely_regular";
    case RegularityKind::right_regular:
      return "right_regular";
    case RegularityKind::left_regular:
      return "left_regular";
  }
  return "?";
}

RegularityKind parse_regularity(std::string_view text) {
  for (auto k : {RegularityKind::regular, RegularityKind::completely_regular,
                 RegularityKind::right_regular, RegularityKind::left_regular}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  throw std::invalid_argument("unknown regularity kind '" + std::string(text) +
                              "'");
}

bool is_regular_element(OrderedSemigroup const& s, Element a,
                        RegularityKind kind) {
  Element const sq = s.mul(a, a);
  for (Element x = 0; x < s.order(); ++x) {
    Element v = 0;
    switch (kind) {
      case RegularityKind::regular:
        v = s.mul(a, x, a);
        break;
      case RegularityKind::completely_regular:
        v = s.mul(s.mul(sq, x), sq);
        break;
      case RegularityKind::right_regular:
        v = s.mul(sq, x);
        break;
      case RegularityKind::left_regular:
        v = s.mul(x, sq);
        break;
    }
    if (s.leq(a, v)) {
      return true;
    }
  }
  return false;
}

PropertyReport regularity(OrderedSemigroup const& s, RegularityKind kind) {
  PropertyReport r{std::string(to_string(kind))};
  for (Element a = 0; a < s.order(); ++a) {
    if (!is_regular_element(s, a, kind)) {
      r.holds = false;
      r.witness = {a};
      break;
    }
  }
  return r;
}

namespace {

// a in (Sb]
bool in_left_multiples(OrderedSemigroup const& s, Element a, Element b) {
  for (Element x = 0; x < s.order(); ++x) {
    if (s.leq(a, s.mul(x, b))) {
      return true;
    }
  }
  return false;
}

// b in (aS]
bool in_right_multiples(OrderedSemigroup const& s, Element b, Element a) {
  for (Element x = 0; x < s.order(); ++x) {
    if (s.leq(b, s.mul(a, x))) {
      return true;
    }
  }
  return false;
}

}  // namespace

PropertyReport is_group_like(OrderedSemigroup const& s, Side kind) {
  std::string id = kind == Side::two_sided ? "group_like"
                   : kind == Side::left    ? "left_group_like"
                                           : "right_group_like";
  PropertyReport r{std::move(id)};
  auto reg = regularity(s, RegularityKind::regular);
  if (!reg.holds) {
    r.holds = false;
    r.applicable = false;
    r.witness = reg.witness;
    r.notes = "not regular";
    return r;
  }
  for (Element a = 0; a < s.order(); ++a) {
    for (Element b = 0; b < s.order(); ++b) {
      bool ok = true;
      if (kind != Side::right && !in_left_multiples(s, a, b)) {
        ok = false;
        r.notes = "a not in (Sb]";
      } else if (kind != Side::left && !in_right_multiples(s, b, a)) {
        ok = false;
        r.notes = "b not in (aS]";
      }
      if (!ok) {
        r.holds = false;
        r.witness = {a, b};
        return r;
      }
    }
  }
  return r;
}

bool h_commutes_directed(OrderedSemigroup const& s, Element a, Element b) {
  Element const ab = s.mul(a, b);
  for (Element x = 0; x < s.order(); ++x) {
    if (s.leq(ab, s.mul(s.mul(b, x), a))) {
      return true;
    }
  }
  return false;
}

bool h_commutes(OrderedSemigroup const& s, Element a, Element b) {
  return h_commutes_directed(s, a, b) && h_commutes_directed(s, b, a);
}

PropertyReport is_inverse_ordered(OrderedSemigroup const& s) {
  return is_inverse_ordered(s, greens_relations(s));
}

PropertyReport is_inverse_ordered(OrderedSemigroup const& s,
                                  GreensRelations const& g) {
  PropertyReport r{"inverse"};
  auto reg = regularity(s, RegularityKind::regular);
  if (!reg.holds) {
    r.holds = false;
    r.witness = reg.witness;
    r.notes = "not regular";
    return r;
  }
  for (Element a = 0; a < s.order(); ++a) {
    auto inv = inverses_of(s, a).elements();
    for (Element b : inv) {
      for (Element c : inv) {
        if (!g.H.related(b, c)) {
          r.holds = false;
          r.witness = {a, b, c};
          r.notes = "inverses of a not H-related";
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport generator_uniqueness(OrderedSemigroup const& s, Side side) {
  return generator_uniqueness(s, side, greens_relations(s));
}

PropertyReport generator_uniqueness(OrderedSemigroup const& s, Side side,
                                    GreensRelations const& g) {
  PropertyReport r{"generator_uniqueness_" + std::string(to_string(side))};
  auto const n = s.order();
  auto const idem = ordered_idempotents(s).elements();
  std::vector<ElementSubset> ideal(n);
  for (Element a = 0; a < n; ++a) {
    ideal[a] = principal_ideal(s, a, side);
  }
  for (Element a = 0; a < n; ++a) {
    bool found = std::any_of(idem.begin(), idem.end(),
                             [&](Element e) { return ideal[e] == ideal[a]; });
    if (!found) {
      r.holds = false;
      r.witness = {a};
      r.notes = "no idempotent generator";
      return r;
    }
  }
  for (Element e : idem) {
    for (Element f : idem) {
      if (ideal[e] == ideal[f] && !g.H.related(e, f)) {
        r.holds = false;
        r.witness = {e, f};
        r.notes = "generators not H-related";
        return r;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Class predicates and semilattice decompositions

std::vector<std::string> const& class_property_ids() {
  static std::vector<std::string> const ids = {
      "group_like",         "left_group_like", "right_group_like",
      "t_simple",           "regular",         "completely_regular",
      "inverse",            "simple",          "left_simple",
      "right_simple"};
  return ids;
}

bool evaluate_class_property(OrderedSemigroup const& s, std::string_view id) {
  if (id == "group_like" || id == "t_simple") {
    return is_group_like(s, Side::two_sided).holds;
  }
  if (id == "left_group_like") {
    return is_group_like(s, Side::left).holds;
  }
  if (id == "right_group_like") {
    return is_group_like(s, Side::right).holds;
  }
  if (id == "regular" || id == "completely_regular") {
    return regularity(s, parse_regularity(id)).holds;
  }
  if (id == "inverse") {
    return is_inverse_ordered(s).holds;
  }
  if (id == "simple") {
    return is_simple(s, Side::two_sided).holds;
  }
  if (id == "left_simple") {
    return is_simple(s, Side::left).holds;
  }
  if (id == "right_simple") {
    return is_simple(s, Side::right).holds;
  }
  throw std::invalid_argument("unknown class property '" + std::string(id) +
                              "'");
}

namespace {

bool classes_satisfy(OrderedSemigroup const& s, Partition const& p,
                     std::string_view id) {
  return std::all_of(p.classes().begin(), p.classes().end(),
                     [&](ElementSubset cls) {
                       auto sub = induced_substructure(s, cls);
                       return sub && evaluate_class_property(*sub, id);
                     });
}

}  // namespace

DecompositionCheck semilattice_decomposition_check(
    OrderedSemigroup const& s, std::string_view class_property) {
  auto const& ids = class_property_ids();
  if (std::find(ids.begin(), ids.end(), class_property) == ids.end()) {
    throw std::invalid_argument("unknown class property '" +
                                std::string(class_property) + "'");
  }
  if (s.order() > 8) {
    throw std::invalid_argument("decomposition search limited to order 8");
  }
  DecompositionCheck out;
  for (auto const& p : all_partitions(s.order())) {
    if (!is_congruence(s, p, CongruenceKind::complete_semilattice).holds) {
      continue;
    }
    ++out.congruences_examined;
    if (!out.holds && classes_satisfy(s, p, class_property)) {
      out.holds = true;
      out.congruence = p;
    }
  }
  auto J = greens_relations(s).J;
  out.via_j = is_congruence(s, J, CongruenceKind::complete_semilattice).holds &&
              classes_satisfy(s, J, class_property);
  return out;
}

}  // namespace ordsemi
