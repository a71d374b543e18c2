#include "ordsemi/ideals.hpp"

#include <stdexcept>

namespace ordsemi {

std::string_view to_string(Side side) {
  switch (side) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::two_sided:
      return "two_sided";
  }
  return "?";
}

Side parse_side(std::string_view text) {
  if (text == "left") {
    return Side::left;
  }
  if (text == "right") {
    return Side::right;
  }
  if (text == "two_sided" || text == "two-sided") {
    return Side::two_sided;
  }
  throw std::invalid_argument("unknown side '" + std::string(text) + "'");
}

ElementSubset downward_closure(OrderedSemigroup const& s, ElementSubset x) {
  auto out = ElementSubset::empty(s.order());
  for_each_element(x, [&](Element h) { out |= s.below(h); });
  return out;
}

ElementSubset subset_product(OrderedSemigroup const& s, ElementSubset x,
                             ElementSubset y) {
  auto out = ElementSubset::empty(s.order());
  for_each_element(x, [&](Element a) {
    for_each_element(y, [&](Element b) { out.insert(s.mul(a, b)); });
  });
  return out;
}

ElementSubset principal_ideal_literal(OrderedSemigroup const& s, Element a,
                                      Side side) {
  auto const all = s.carrier();
  auto const gen = ElementSubset::singleton(s.order(), a);
  switch (side) {
    case Side::left:
      return gen | subset_product(s, all, gen);
    case Side::right:
      return gen | subset_product(s, gen, all);
    case Side::two_sided: {
      auto sa = subset_product(s, all, gen);
      return gen | sa | subset_product(s, gen, all) |
             subset_product(s, sa, all);
    }
  }
  return gen;
}

ElementSubset principal_ideal(OrderedSemigroup const& s, Element a,
                              Side side) {
  return downward_closure(s, principal_ideal_literal(s, a, side));
}

IdealCheck is_ideal(OrderedSemigroup const& s, ElementSubset i, Side side) {
  if (i.is_empty()) {
    throw std::invalid_argument("is_ideal: subset must be nonempty");
  }
  using Kind = IdealViolation::Kind;
  auto const n = s.order();
  if (side != Side::right) {
    for (Element x = 0; x < n; ++x) {
      for (Element m : i.elements()) {
        if (!i.contains(s.mul(x, m))) {
          return {false, IdealViolation{Kind::left_absorption, x, m}};
        }
      }
    }
  }
  if (side != Side::left) {
    for (Element x = 0; x < n; ++x) {
      for (Element m : i.elements()) {
        if (!i.contains(s.mul(m, x))) {
          return {false, IdealViolation{Kind::right_absorption, x, m}};
        }
      }
    }
  }
  for (Element t = 0; t < n; ++t) {
    if (i.contains(t)) {
      continue;
    }
    for (Element h : i.elements()) {
      if (s.leq(t, h)) {
        return {false, IdealViolation{Kind::downward_closure, t, h}};
      }
    }
  }
  return {};
}

SimplicityCheck is_simple(OrderedSemigroup const& s, Side side) {
  auto const n = s.order();
  if (n > 20) {
    throw std::invalid_argument("is_simple: order too large to enumerate");
  }
  std::uint64_t const full = (std::uint64_t{1} << n) - 1;
  for (std::size_t size = 1; size < n; ++size) {
    for (std::uint64_t bits = 1; bits < full; ++bits) {
      ElementSubset candidate(n, bits);
      if (candidate.size() == size && is_ideal(s, candidate, side).holds) {
        return {false, candidate};
      }
    }
  }
  return {};
}

}  // namespace ordsemi
