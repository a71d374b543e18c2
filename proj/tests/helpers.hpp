#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ordsemi/enumeration.hpp"
#include "ordsemi/io.hpp"
#include "ordsemi/structure.hpp"

namespace ordsemi::test {

inline std::string fixture_path(std::string const& name) {
  return std::string(ORDSEMI_FIXTURE_DIR) + "/" + name;
}

inline NamedStructure load_fixture(std::string const& name) {
  return parse_structure(read_text_file(fixture_path(name)));
}

// Hand-built fixture values, independent of the parser.

inline OrderedSemigroup t1() { return {1, {0}, {1}}; }

// e = 0, f = 1; f <= e
inline OrderedSemigroup sl2() { return {2, {0, 1, 1, 1}, {1, 0, 1, 1}}; }

// a = 0, b = 1
inline OrderedSemigroup lz2() { return {2, {0, 0, 1, 1}, {1, 0, 0, 1}}; }
inline OrderedSemigroup rz2() { return {2, {0, 1, 0, 1}, {1, 0, 0, 1}}; }

// 0 = 0, a = 1
inline OrderedSemigroup n2() { return {2, {0, 0, 0, 0}, {1, 0, 0, 1}}; }

// 1 = 0, g = 1; 1 <= g
inline OrderedSemigroup c2() { return {2, {0, 1, 1, 0}, {1, 1, 0, 1}}; }

// a = 0, e = 1, f = 2
inline OrderedSemigroup px3() {
  return OrderedSemigroup::with_discrete_order(3, {0, 1, 2, 2, 1, 0, 1, 0, 2});
}

inline std::vector<OrderedSemigroup> valid_fixtures() {
  return {t1(), sl2(), lz2(), rz2(), n2()};
}

/// Cached enumerations; every test binary shares one per (order, mode).
inline std::vector<OrderedSemigroup> const& corpus(std::size_t n,
                                                   EnumerationMode mode) {
  static std::map<std::pair<std::size_t, EnumerationMode>,
                  std::vector<OrderedSemigroup>>
      cache;
  auto key = std::make_pair(n, mode);
  auto it = cache.find(key);
  if (it == cache.end()) {
    EnumerationOptions o;
    o.order = n;
    o.mode = mode;
    it = cache.emplace(key, enumerate_ordered_semigroups(o)).first;
  }
  return it->second;
}

/// Labelled structures of every order up to n.
inline std::vector<OrderedSemigroup> labelled_up_to(std::size_t n) {
  std::vector<OrderedSemigroup> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto const& c = corpus(k, EnumerationMode::labelled);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

inline std::vector<Element> random_permutation(std::size_t n,
                                               std::mt19937& rng) {
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<Element>(i);
  }
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace ordsemi::test
