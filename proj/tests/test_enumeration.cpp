#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ordsemi/enumeration.hpp"
#include "ordsemi/oracle.hpp"
#include "ordsemi/theorems.hpp"

using namespace ordsemi;
using namespace ordsemi::test;

namespace {

EnumerationOptions opts(std::size_t n, EnumerationMode mode,
                        Shard shard = {}) {
  EnumerationOptions o;
  o.order = n;
  o.mode = mode;
  o.shard = shard;
  return o;
}

std::set<CanonicalForm> forms(std::vector<OrderedSemigroup> const& xs) {
  std::set<CanonicalForm> out;
  for (auto const& s : xs) out.insert(canonical_form(s));
  return out;
}

}  // namespace

TEST_CASE("semigroup counts match the all-tables oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto labelled = enumerate_semigroups(opts(n, EnumerationMode::labelled));
    CHECK(labelled.size() == oracle::count_semigroups(n));
    auto classes = enumerate_semigroups(opts(n, EnumerationMode::up_to_iso));
    CHECK(classes.size() == oracle::count_semigroup_classes(n));
  }
  CHECK(enumerate_semigroups(opts(2, EnumerationMode::labelled)).size() == 8);
  CHECK(enumerate_semigroups(opts(2, EnumerationMode::up_to_iso)).size() == 5);
}

TEST_CASE("partial orders") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_partial_orders(n).size() == oracle::count_partial_orders(n));
  }
  CHECK(enumerate_partial_orders(4).size() == 219);
  CHECK(partial_order_representatives(3).size() == 5);
  CHECK(partial_order_representatives(4).size() == 16);
}

TEST_CASE("ordered semigroup counts match the pair oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(corpus(n, EnumerationMode::labelled).size() ==
          oracle::count_ordered_pairs(n));
    CHECK(corpus(n, EnumerationMode::up_to_iso).size() ==
          oracle::count_ordered_classes(n));
  }
  CHECK(labelled_candidate_pairs(2) == 24);
  CHECK(labelled_candidate_pairs(3) == 2147);
}

TEST_CASE("every enumerated structure is valid and labelled output is distinct") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const& c = corpus(n, EnumerationMode::labelled);
    std::set<std::pair<Table, OrderMatrix>> seen;
    for (auto const& s : c) {
      REQUIRE(is_valid(s));
      auto t = s.mult_table();
      auto l = s.leq_matrix();
      REQUIRE(seen.emplace(Table(t.begin(), t.end()),
                           OrderMatrix(l.begin(), l.end()))
                  .second);
    }
  }
}

TEST_CASE("up-to-iso output covers every labelled class exactly once") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto const& reps = corpus(n, EnumerationMode::up_to_iso);
    auto rep_forms = forms(reps);
    REQUIRE(rep_forms.size() == reps.size());
    for (auto const& s : reps) {
      REQUIRE(canonical_representative(s) == s);
    }
    REQUIRE(forms(corpus(n, EnumerationMode::labelled)) == rep_forms);
  }
  CHECK(corpus(4, EnumerationMode::up_to_iso).size() == 4753);
}

TEST_CASE("table-first and order-first enumeration agree") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto mode : {EnumerationMode::labelled, EnumerationMode::up_to_iso}) {
      auto a = enumerate_ordered_semigroups(opts(n, mode));
      auto b = enumerate_ordered_semigroups_table_first(opts(n, mode));
      sort_canonically(a);
      sort_canonically(b);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("shards partition the output deterministically") {
  for (auto mode : {EnumerationMode::labelled, EnumerationMode::up_to_iso}) {
    for (std::size_t k : {1, 2, 3, 4, 7}) {
      std::vector<OrderedSemigroup> merged;
      for (std::size_t i = 0; i < k; ++i) {
        auto part = enumerate_ordered_semigroups(opts(3, mode, {i, k}));
        REQUIRE(part == enumerate_ordered_semigroups(opts(3, mode, {i, k})));
        merged.insert(merged.end(), part.begin(), part.end());
      }
      auto whole = enumerate_ordered_semigroups(opts(3, mode));
      REQUIRE(merged.size() == whole.size());
      sort_canonically(merged);
      sort_canonically(whole);
      REQUIRE(merged == whole);
    }
  }
}

TEST_CASE("filters restrict the output") {
  auto o = opts(3, EnumerationMode::up_to_iso);
  o.filters = {"is_inverse_ordered"};
  auto inv = enumerate_ordered_semigroups(o);
  std::size_t expected = 0;
  for (auto const& s : corpus(3, EnumerationMode::up_to_iso)) {
    expected += is_inverse_ordered(s).holds ? 1 : 0;
  }
  CHECK(inv.size() == expected);
  CHECK(expected > 0);
  for (auto const& s : inv) CHECK(is_inverse_ordered(s).holds);
}

TEST_CASE("option validation") {
  CHECK_THROWS_AS(check_options(opts(0, EnumerationMode::labelled)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_options(opts(5, EnumerationMode::labelled)),
                  std::invalid_argument);
  auto five = opts(5, EnumerationMode::up_to_iso);
  five.max_order = kHardMaxEnumerationOrder;
  CHECK_NOTHROW(check_options(five));
  CHECK_THROWS_AS(check_options(opts(2, EnumerationMode::labelled, {2, 2})),
                  std::invalid_argument);
  auto bad_filter = opts(2, EnumerationMode::labelled);
  bad_filter.filters = {"bogus"};
  CHECK_THROWS_AS(check_options(bad_filter), std::invalid_argument);

  CHECK(parse_shard("1/4").index == 1);
  CHECK(parse_shard("1/4").count == 4);
  CHECK_THROWS(parse_shard("4/4"));
  CHECK_THROWS(parse_shard("x"));
  CHECK_THROWS(parse_shard("0/0"));
}

TEST_CASE("corpus files round-trip") {
  auto const& c = corpus(3, EnumerationMode::up_to_iso);
  auto text = serialize_corpus(c, {"order 3 classes"});
  auto back = parse_corpus(text);
  REQUIRE(back.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    REQUIRE(back[i].algebra == c[i]);
  }
  CHECK(parse_corpus("").empty());
  CHECK(parse_corpus("# only a comment\n").empty());
}

TEST_CASE("corpus parse errors point at the file line") {
  std::string text = "order 1\nmult 0\n---\norder 2\nmult 0 0\nmult 0 9\n";
  try {
    parse_corpus(text);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 6);
  }
}
