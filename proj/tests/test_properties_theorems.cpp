#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ordsemi/properties.hpp"
#include "ordsemi/theorems.hpp"

using namespace ordsemi;
using namespace ordsemi::test;

namespace {

bool brute_inverse(OrderedSemigroup const& s, Element a, Element b) {
  return s.leq(a, s.mul(a, b, a)) && s.leq(b, s.mul(b, a, b));
}

bool brute_regular(OrderedSemigroup const& s) {
  for (Element a = 0; a < s.order(); ++a) {
    bool found = false;
    for (Element x = 0; x < s.order() && !found; ++x) {
      found = s.leq(a, s.mul(a, x, a));
    }
    if (!found) return false;
  }
  return true;
}

std::vector<bool> predicate_vector(OrderedSemigroup const& s) {
  std::vector<bool> v;
  StructureAnalysis a(s);
  for (auto const& c : condition_catalog()) {
    auto verdict = evaluate_condition(a, c.id);
    v.push_back(verdict.holds);
    v.push_back(verdict.hypothesis_met);
  }
  for (auto const& id : class_property_ids()) {
    v.push_back(evaluate_class_property(s, id));
  }
  for (auto k : {RegularityKind::regular, RegularityKind::completely_regular,
                 RegularityKind::left_regular, RegularityKind::right_regular}) {
    v.push_back(regularity(s, k).holds);
  }
  for (auto side : {Side::left, Side::right}) {
    v.push_back(generator_uniqueness(s, side).holds);
  }
  v.push_back(is_inverse_ordered(s).holds);
  return v;
}

}  // namespace

TEST_CASE("ordered idempotents and inverses: fixtures") {
  CHECK(ordered_idempotents(sl2()) == ElementSubset::full(2));
  CHECK(ordered_idempotents(n2()).elements() == std::vector<Element>{0});
  CHECK(inverses_of(sl2(), 0).elements() == std::vector<Element>{0});
  CHECK(inverses_of(lz2(), 0) == ElementSubset::full(2));
  CHECK(inverses_of(n2(), 1).is_empty());
}

TEST_CASE("inverses agree with the definition; symmetric; aa', a'a idempotent") {
  for (auto const& s : labelled_up_to(3)) {
    auto idem = ordered_idempotents(s);
    for (Element e = 0; e < s.order(); ++e) {
      REQUIRE(idem.contains(e) == s.leq(e, s.mul(e, e)));
    }
    for (Element a = 0; a < s.order(); ++a) {
      auto inv = inverses_of(s, a);
      for (Element b = 0; b < s.order(); ++b) {
        REQUIRE(inv.contains(b) == brute_inverse(s, a, b));
        REQUIRE(inv.contains(b) == inverses_of(s, b).contains(a));
        if (inv.contains(b)) {
          REQUIRE(idem.contains(s.mul(a, b)));
          REQUIRE(idem.contains(s.mul(b, a)));
        }
      }
    }
  }
}

TEST_CASE("regularity: fixtures and definition") {
  auto n = regularity(n2(), RegularityKind::regular);
  CHECK_FALSE(n.holds);
  CHECK(n.witness == std::vector<Element>{1});
  CHECK(regularity(sl2(), RegularityKind::completely_regular).holds);
  CHECK(regularity(lz2(), RegularityKind::completely_regular).holds);
  CHECK(parse_regularity("left_regular") == RegularityKind::left_regular);
  CHECK_THROWS(parse_regularity("sideways"));

  for (auto const& s : labelled_up_to(3)) {
    bool reg = regularity(s, RegularityKind::regular).holds;
    REQUIRE(reg == brute_regular(s));
    if (regularity(s, RegularityKind::completely_regular).holds) {
      REQUIRE(reg);
      REQUIRE(regularity(s, RegularityKind::left_regular).holds);
      REQUIRE(regularity(s, RegularityKind::right_regular).holds);
    }
  }
}

TEST_CASE("group-like requires regularity") {
  auto n = is_group_like(n2(), Side::two_sided);
  CHECK_FALSE(n.holds);
  CHECK_FALSE(n.applicable);

  CHECK(is_group_like(sl2(), Side::two_sided).applicable);
  CHECK_FALSE(is_group_like(sl2(), Side::two_sided).holds);
  CHECK(is_group_like(t1(), Side::two_sided).holds);
  // LZ2: every a lies in (Sb], but b is not in (aS]
  CHECK(is_group_like(lz2(), Side::left).holds);
  auto r = is_group_like(lz2(), Side::right);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<Element>{0, 1});
}

TEST_CASE("inverse ordered semigroups: fixtures") {
  CHECK(is_inverse_ordered(sl2()).holds);
  auto lz = is_inverse_ordered(lz2());
  CHECK_FALSE(lz.holds);
  CHECK(lz.witness == std::vector<Element>{0, 0, 1});  // (a, a, b)
  auto n = is_inverse_ordered(n2());
  CHECK_FALSE(n.holds);
  CHECK(n.witness == std::vector<Element>{1});
}

TEST_CASE("h-commutation is symmetric by construction") {
  for (auto const& s : labelled_up_to(3)) {
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        REQUIRE(h_commutes(s, a, b) == h_commutes(s, b, a));
      }
    }
  }
}

TEST_CASE("predicates are invariant under 100 random relabellings") {
  std::mt19937 rng(7);
  auto subjects = valid_fixtures();
  auto const& c3 = corpus(3, EnumerationMode::up_to_iso);
  for (std::size_t i = 0; i < c3.size(); i += 9) {
    subjects.push_back(c3[i]);
  }
  for (auto const& s : subjects) {
    auto base = predicate_vector(s);
    for (int k = 0; k < 100; ++k) {
      auto t = relabel(s, random_permutation(s.order(), rng));
      REQUIRE(predicate_vector(t) == base);
    }
  }
}

TEST_CASE("inverse property is preserved by the opposite structure") {
  for (auto const& s : corpus(4, EnumerationMode::up_to_iso)) {
    REQUIRE(is_inverse_ordered(s).holds ==
            is_inverse_ordered(opposite(s)).holds);
  }
}

TEST_CASE("condition catalog") {
  CHECK(condition_catalog().size() >= 20);
  CHECK(condition_info("T35.1").hypothesis == Hypothesis::regular);
  CHECK(condition_info("CR.J").hypothesis == Hypothesis::completely_regular);
  CHECK_THROWS_AS(condition_info("nope"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_condition(sl2(), "nope"), std::invalid_argument);
}

TEST_CASE("conditions: fixture values") {
  auto b3 = evaluate_condition(lz2(), "B.3");
  CHECK_FALSE(b3.holds);
  CHECK(b3.witness == std::vector<Element>{0, 1});
  CHECK(evaluate_condition(sl2(), "T33.L").holds);
  CHECK(evaluate_condition(sl2(), "T33").holds);
  for (auto const& c : condition_catalog()) {
    CAPTURE(c.id);
    CHECK(evaluate_condition(t1(), c.id).holds);
  }
  // N2 is not completely regular, so CR.J is vacuous there.
  auto crj = evaluate_condition(n2(), "CR.J");
  CHECK(crj.holds);
  CHECK_FALSE(crj.hypothesis_met);
}

TEST_CASE("every failing verdict carries a witness that re-verifies") {
  for (auto const& s : labelled_up_to(3)) {
    StructureAnalysis a(s);
    for (auto const& c : condition_catalog()) {
      auto v = evaluate_condition(a, c.id);
      if (!v.holds) {
        REQUIRE(witness_reverifies(a, v));
      }
    }
  }
}

TEST_CASE("theorem catalog") {
  auto ids = all_theorem_ids();
  for (auto id : {"THM_3_3", "THM_3_5", "THM_ESF", "COR", "THM_BIG", "LEM_4",
                  "LEM_2_1"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK(theorem_info("LEM_4").kind == TheoremKind::implication);
  CHECK(theorem_info("COR").conditions.size() == 5);
  CHECK_THROWS_AS(theorem_info("THM_0"), std::invalid_argument);
}

TEST_CASE("check_theorem: fixtures") {
  auto sl = check_theorem(sl2(), "THM_3_5");
  CHECK(sl.consistent);
  CHECK(sl.hypothesis_met);
  for (auto const& v : sl.vector) CHECK(v.holds);

  auto lz = check_theorem(lz2(), "THM_3_5");
  CHECK(lz.consistent);
  for (auto const& v : lz.vector) CHECK_FALSE(v.holds);

  auto big = check_theorem(t1(), "THM_BIG");
  CHECK(big.consistent);
  CHECK(big.vector.size() == 6);

  auto n = check_theorem(n2(), "COR");
  CHECK_FALSE(n.hypothesis_met);
}

TEST_CASE("sweep: small corpora") {
  auto all = labelled_up_to(2);
  auto r = sweep(all, {"THM_3_5"});
  REQUIRE(r.theorems.size() == 1);
  CHECK(r.theorems[0].checked == all.size());
  CHECK(r.total_inconsistent() == 0);

  auto two = sweep({sl2(), lz2()}, {"THM_BIG"});
  CHECK(two.theorems[0].checked == 2);
  CHECK(two.theorems[0].inconsistent == 0);

  auto empty = sweep({}, all_theorem_ids());
  CHECK(empty.theorems.size() == all_theorem_ids().size());
  CHECK(empty.theorems[0].checked == 0);

  auto skipped = sweep({sl2(), px3(), c2()}, {"THM_3_5"});
  CHECK(skipped.skipped_invalid == 2);
  CHECK(skipped.theorems[0].checked == 1);

  CHECK_THROWS_AS(sweep({sl2()}, {"THM_0"}), std::invalid_argument);
}

TEST_CASE("sweep: thread count does not change the result") {
  auto const& c = corpus(3, EnumerationMode::labelled);
  auto one = sweep(c, all_theorem_ids(), {.threads = 1});
  auto four = sweep(c, all_theorem_ids(), {.threads = 4});
  REQUIRE(one.theorems.size() == four.theorems.size());
  for (std::size_t i = 0; i < one.theorems.size(); ++i) {
    CHECK(one.theorems[i].checked == four.theorems[i].checked);
    CHECK(one.theorems[i].hypothesis_met == four.theorems[i].hypothesis_met);
    CHECK(one.theorems[i].inconsistent == four.theorems[i].inconsistent);
    CHECK(one.theorems[i].outside_disagreements ==
          four.theorems[i].outside_disagreements);
  }
}

TEST_CASE("filters") {
  CHECK(is_known_filter("is_inverse_ordered"));
  CHECK(is_known_filter("regular"));
  CHECK(is_known_filter("B.4"));
  CHECK_FALSE(is_known_filter("bogus"));
  CHECK(evaluate_filter(sl2(), "is_inverse_ordered"));
  CHECK_FALSE(evaluate_filter(n2(), "regular"));
}
