#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ordsemi/oracle.hpp"
#include "ordsemi/structure.hpp"

using namespace ordsemi;
using namespace ordsemi::test;

TEST_CASE("parse: fixture files decode to the hand-built values") {
  CHECK(load_fixture("sl2.osg").algebra == sl2());
  CHECK(load_fixture("t1.osg").algebra == t1());
  CHECK(load_fixture("lz2.osg").algebra == lz2());
  CHECK(load_fixture("rz2.osg").algebra == rz2());
  CHECK(load_fixture("n2.osg").algebra == n2());
  CHECK(load_fixture("c2.osg").algebra == c2());
  CHECK(load_fixture("px3.osg").algebra == px3());

  auto named = load_fixture("sl2.osg");
  CHECK(named.names == std::vector<std::string>{"e", "f"});
}

TEST_CASE("parse: defaults, indices and comments") {
  auto s = parse_structure("# comment\n\norder 2  # trailing\nmult 0 1\nmult e1 1\n");
  CHECK(s.names == std::vector<std::string>{"e0", "e1"});
  CHECK(s.algebra == OrderedSemigroup::with_discrete_order(2, {0, 1, 1, 1}));
}

TEST_CASE("parse: errors carry line numbers") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      parse_structure(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  // mult entry out of range for n = 3
  CHECK(line_of("order 3\nmult 0 1 2\nmult 0 5 2\nmult 0 1 2\n") == 3);
  CHECK(line_of("ordr 3\n") == 1);
  CHECK(line_of("order 0\n") == 1);
  CHECK(line_of("order x\n") == 1);
  CHECK(line_of("order 2\nmult 0 0\nmult 0 0\nleq 0 1\nleq 0 1\n") == 5);
  // a missing row is reported at end of input
  CHECK(line_of("order 2\nmult 0 0\n") == 3);
  CHECK(line_of("order 2\nmult 0 0 0\nmult 0 0\n") == 2);
  CHECK(line_of("order 2\nelements a a\nmult a a\nmult a a\n") == 2);
  CHECK(line_of("order 2\nmult 0 0\nmult 0 0\nfoo\n") == 4);
  CHECK(line_of("order 2\nmult 0 0\nmult 0 0\nleq 0 z\n") == 4);
  CHECK_THROWS_AS(parse_structure(""), ParseError);
}

TEST_CASE("parse: reflexive pairs are implied, transitivity is not closed") {
  auto s = parse_structure(
               "order 3\nmult 0 0 0\nmult 0 0 0\nmult 0 0 0\nleq 0 1\nleq 1 "
               "2\n")
               .algebra;
  CHECK(s.leq(2, 2));
  CHECK_FALSE(s.leq(0, 2));
  auto r = validate(s);
  REQUIRE_FALSE(r.valid);
  CHECK(r.failures.front().axiom == Axiom::transitivity);
  CHECK(r.failures.front().witness == std::vector<Element>{0, 1, 2});
}

TEST_CASE("serialize then parse is the identity on the order-3 corpus") {
  for (auto const& s : corpus(3, EnumerationMode::labelled)) {
    REQUIRE(parse_structure(serialize_structure(s)).algebra == s);
  }
}

TEST_CASE("validate: fixture verdicts") {
  CHECK(validate(sl2()).valid);
  CHECK(validate(t1()).valid);

  auto px = validate(px3());
  REQUIRE_FALSE(px.valid);
  REQUIRE(px.failures.size() == 1);
  CHECK(px.failures[0].axiom == Axiom::associativity);
  CHECK(px.failures[0].witness == std::vector<Element>{1, 0, 0});  // (e,a,a)
  // (e.a).a = e but e.(a.a) = f
  CHECK(px3().mul(px3().mul(1, 0), 0) == 1);
  CHECK(px3().mul(1, px3().mul(0, 0)) == 2);

  auto op = validate(opposite(px3()));
  REQUIRE_FALSE(op.valid);
  CHECK(op.failures[0].axiom == Axiom::associativity);

  auto c = validate(c2());
  REQUIRE_FALSE(c.valid);
  REQUIRE(c.failures.size() == 1);
  CHECK(c.failures[0].axiom == Axiom::compatibility);
  CHECK(c.failures[0].witness == std::vector<Element>{0, 1, 1});
  CHECK(c.failures[0].left_factor);
}

TEST_CASE("validate agrees with the brute-force oracle on every n <= 2 input") {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto tables = oracle::all_tables(n);
    // all relations, reflexive or not
    std::size_t const cells = n * n;
    for (auto const& t : tables) {
      for (std::uint32_t bits = 0; bits < (1U << cells); ++bits) {
        oracle::RawOrder rel(cells);
        for (std::size_t k = 0; k < cells; ++k) {
          rel[k] = (bits >> k) & 1U;
        }
        OrderedSemigroup s(n, std::vector<Element>(t.begin(), t.end()),
                           std::vector<std::uint8_t>(rel.begin(), rel.end()));
        auto r = validate(s);
        REQUIRE(r.valid == oracle::ordered_semigroup(n, t, rel));
        for (auto const& f : r.failures) {
          REQUIRE(witness_fails(s, f));
        }
      }
    }
  }
}

TEST_CASE("validate agrees with the brute-force oracle on every n = 3 input") {
  // 3^9 tables times 2^9 relations.
  std::size_t const n = 3;
  std::size_t agree = 0;
  std::size_t valid = 0;
  for (auto const& t : oracle::all_tables(n)) {
    std::vector<Element> table(t.begin(), t.end());
    for (std::uint32_t bits = 0; bits < (1U << 9); ++bits) {
      std::vector<std::uint8_t> rel(9);
      oracle::RawOrder raw(9);
      for (std::size_t k = 0; k < 9; ++k) {
        rel[k] = (bits >> k) & 1U;
        raw[k] = rel[k];
      }
      OrderedSemigroup s(n, table, std::move(rel));
      auto r = validate(s);
      bool expected = oracle::ordered_semigroup(n, t, raw);
      if (r.valid != expected) {
        FAIL("disagreement on " << serialize_structure(s));
      }
      for (auto const& f : r.failures) {
        if (!witness_fails(s, f)) {
          FAIL("unsound witness on " << serialize_structure(s));
        }
      }
      ++agree;
      valid += expected ? 1 : 0;
    }
  }
  CHECK(agree == 19683u * 512u);
  CHECK(valid == 971u);
}

TEST_CASE("canonical form: relabelling invariance and separation") {
  auto lz_swapped = relabel(lz2(), std::vector<Element>{1, 0});
  CHECK(lz_swapped == lz2());  // left-zero is symmetric under the swap
  CHECK(canonical_form(lz2()) == canonical_form(lz_swapped));
  CHECK(canonical_form(lz2()) != canonical_form(rz2()));
  CHECK(canonical_form(t1()).bytes == std::vector<std::uint8_t>{1, 0, 1});

  auto sl_swapped = relabel(sl2(), std::vector<Element>{1, 0});
  CHECK_FALSE(sl_swapped == sl2());
  CHECK(canonical_form(sl_swapped) == canonical_form(sl2()));

  CHECK(is_isomorphic(lz2(), lz_swapped));
  CHECK_FALSE(is_isomorphic(lz2(), rz2()));
  CHECK(is_isomorphic(t1(), t1()));
  CHECK_FALSE(is_isomorphic(t1(), sl2()));
}

TEST_CASE("canonical form is invariant under 100 random relabellings") {
  std::mt19937 rng(20261016);
  auto fixtures = valid_fixtures();
  auto const& c3 = corpus(3, EnumerationMode::up_to_iso);
  fixtures.insert(fixtures.end(), c3.begin(), c3.begin() + 20);
  for (auto const& s : fixtures) {
    auto cf = canonical_form(s);
    for (int k = 0; k < 100; ++k) {
      auto p = random_permutation(s.order(), rng);
      REQUIRE(canonical_form(relabel(s, p)) == cf);
    }
  }
}

TEST_CASE("isomorphism agrees with an explicit bijection search at n = 2") {
  auto const& all = corpus(2, EnumerationMode::labelled);
  for (auto const& s : all) {
    for (auto const& t : all) {
      bool by_bijection = relabel(s, std::vector<Element>{0, 1}) == t ||
                          relabel(s, std::vector<Element>{1, 0}) == t;
      REQUIRE(is_isomorphic(s, t) == by_bijection);
    }
  }
}

TEST_CASE("opposite") {
  CHECK(opposite(sl2()) == sl2());
  CHECK(opposite(lz2()) == rz2());
  for (auto const& s : corpus(3, EnumerationMode::labelled)) {
    auto op = opposite(s);
    REQUIRE(opposite(op) == s);
    REQUIRE(validate(op).valid);
  }
}

TEST_CASE("constructor rejects malformed shapes") {
  CHECK_THROWS_AS(OrderedSemigroup(0, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedSemigroup(2, {0, 0, 0}, {1, 0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderedSemigroup(2, {0, 0, 0, 2}, {1, 0, 0, 1}),
                  std::invalid_argument);
}
