#include "ordsemi/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <thread>

namespace ordsemi {

// ---------------------------------------------------------------------------
// StructureAnalysis

StructureAnalysis::StructureAnalysis(OrderedSemigroup s) : s_(std::move(s)) {}

GreensRelations const& StructureAnalysis::greens() const {
  if (!greens_) {
    greens_ = greens_relations(s_);
  }
  return *greens_;
}

ElementSubset StructureAnalysis::idempotents() const {
  if (!idempotents_) {
    idempotents_ = ordered_idempotents(s_);
  }
  return *idempotents_;
}

ElementSubset StructureAnalysis::inverses(Element a) const {
  if (inverses_.empty()) {
    inverses_.resize(order());
    for (Element x = 0; x < order(); ++x) {
      inverses_[x] = inverses_of(s_, x);
    }
  }
  return inverses_[a];
}

bool StructureAnalysis::regular() const {
  if (!regular_) {
    regular_ = regularity(s_, RegularityKind::regular).holds;
  }
  return *regular_;
}

bool StructureAnalysis::completely_regular() const {
  if (!completely_regular_) {
    completely_regular_ =
        regularity(s_, RegularityKind::completely_regular).holds;
  }
  return *completely_regular_;
}

PropertyReport const& StructureAnalysis::inverse() const {
  if (!inverse_) {
    inverse_ = is_inverse_ordered(s_, greens());
  }
  return *inverse_;
}

bool StructureAnalysis::h_commutes(Element a, Element b) const {
  auto const n = order();
  if (h_commutes_.empty()) {
    h_commutes_.assign(n * n, -1);
  }
  auto& slot = h_commutes_[a * n + b];
  if (slot < 0) {
    slot = ordsemi::h_commutes(s_, a, b) ? 1 : 0;
  }
  return slot == 1;
}

ElementSubset StructureAnalysis::ideal(Element a, Side side) const {
  auto const n = order();
  if (ideals_.empty()) {
    ideals_.resize(3 * n);
    for (Element x = 0; x < n; ++x) {
      ideals_[x] = principal_ideal(s_, x, Side::left);
      ideals_[n + x] = principal_ideal(s_, x, Side::right);
      ideals_[2 * n + x] = principal_ideal(s_, x, Side::two_sided);
    }
  }
  return ideals_[static_cast<std::size_t>(side) * n + a];
}

Partition const& StructureAnalysis::least_complete_semilattice() const {
  if (!lcsc_) {
    lcsc_ = least_complete_semilattice_congruence(s_);
  }
  return *lcsc_;
}

DecompositionCheck const& StructureAnalysis::group_like_decomposition() const {
  if (!decomposition_) {
    decomposition_ = semilattice_decomposition_check(s_, "group_like");
  }
  return *decomposition_;
}

// ---------------------------------------------------------------------------
// Condition catalog

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::none:
      return "none";
    case Hypothesis::regular:
      return "regular";
    case Hypothesis::inverse:
      return "inverse";
    case Hypothesis::completely_regular:
      return "completely_regular";
  }
  return "?";
}

namespace {

using Tuple = std::span<Element const>;
using A = StructureAnalysis;

// One universally quantified clause: `violates` is true exactly for tuples
// inside the clause's domain that break it.
struct Clause {
  std::size_t arity;
  std::function<bool(A const&, Tuple)> violates;
};

struct ConditionDef {
  ConditionInfo info;
  std::vector<Clause> clauses;
};

bool exists(A const& a, auto&& pred) {
  for (Element x = 0; x < a.order(); ++x) {
    if (pred(x)) {
      return true;
    }
  }
  return false;
}

// Shorthands over the analysed structure.
Element mul(A const& a, std::initializer_list<Element> xs) {
  auto it = xs.begin();
  Element acc = *it++;
  for (; it != xs.end(); ++it) {
    acc = a.structure().mul(acc, *it);
  }
  return acc;
}
bool le(A const& a, Element x, Element y) { return a.structure().leq(x, y); }
bool idem(A const& a, Element e) { return a.is_idempotent(e); }
bool inv(A const& a, Element of, Element b) {
  return a.inverses(of).contains(b);
}
bool H(A const& a, Element x, Element y) { return a.greens().H.related(x, y); }

Clause regular_clause() {
  return {1, [](A const& a, Tuple t) {
            return !is_regular_element(a.structure(), t[0],
                                       RegularityKind::regular);
          }};
}

Clause completely_regular_clause() {
  return {1, [](A const& a, Tuple t) {
            return !is_regular_element(a.structure(), t[0],
                                       RegularityKind::completely_regular);
          }};
}

// (a, b, c): b, c inverses of a that are not H-related.
Clause inverse_pairs_clause() {
  return {3, [](A const& a, Tuple t) {
            return inv(a, t[0], t[1]) && inv(a, t[0], t[2]) &&
                   !H(a, t[1], t[2]);
          }};
}

std::vector<Clause> inverse_clauses() {
  return {regular_clause(), inverse_pairs_clause()};
}

std::vector<Clause> generator_clauses(Side side) {
  return {
      {1,
       [side](A const& a, Tuple t) {
         return !exists(a, [&](Element e) {
           return idem(a, e) && a.ideal(e, side) == a.ideal(t[0], side);
         });
       }},
      {2, [side](A const& a, Tuple t) {
         return idem(a, t[0]) && idem(a, t[1]) &&
                a.ideal(t[0], side) == a.ideal(t[1], side) &&
                !H(a, t[0], t[1]);
       }}};
}

std::vector<ConditionDef> build_catalog() {
  using Hy = Hypothesis;
  std::vector<ConditionDef> c;

  c.push_back({{"REG", "every a lies in (aSa]", Hy::none}, {regular_clause()}});
  c.push_back({{"CR", "every a lies in (a^2 S a^2]", Hy::none},
               {completely_regular_clause()}});

  c.push_back({{"T33.L",
                "principal left ideals have an idempotent generator, unique "
                "up to H",
                Hy::regular},
               generator_clauses(Side::left)});
  c.push_back({{"T33.R",
                "principal right ideals have an idempotent generator, unique "
                "up to H",
                Hy::regular},
               generator_clauses(Side::right)});
  {
    auto both = generator_clauses(Side::left);
    for (auto& cl : generator_clauses(Side::right)) {
      both.push_back(std::move(cl));
    }
    c.push_back({{"T33", "T33.L and T33.R", Hy::regular}, std::move(both)});
  }

  c.push_back({{"T35.1", "inverse: regular and inverses of each element are "
                         "pairwise H-related",
                Hy::regular},
               inverse_clauses()});
  c.push_back({{"T35.2", "regular and any two ordered idempotents H-commute",
                Hy::regular},
               {regular_clause(),
                {2, [](A const& a, Tuple t) {
                   return idem(a, t[0]) && idem(a, t[1]) &&
                          !a.h_commutes(t[0], t[1]);
                 }}}});
  c.push_back({{"T35.3", "for idempotents e, f: e L f or e R f implies e H f",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  auto const& g = a.greens();
                  return idem(a, t[0]) && idem(a, t[1]) &&
                         (g.L.related(t[0], t[1]) ||
                          g.R.related(t[0], t[1])) &&
                         !g.H.related(t[0], t[1]);
                }}}});

  // Lemma-style consequences, tuples (a, b, a', b').
  c.push_back({{"L4.1", "a L b iff a'a H b'b for all inverses a', b'",
                Hy::inverse},
               {{4, [](A const& a, Tuple t) {
                  if (!inv(a, t[0], t[2]) || !inv(a, t[1], t[3])) {
                    return false;
                  }
                  bool lhs = a.greens().L.related(t[0], t[1]);
                  bool rhs = H(a, mul(a, {t[2], t[0]}), mul(a, {t[3], t[1]}));
                  return lhs != rhs;
                }}}});
  c.push_back({{"L4.2", "a R b iff aa' H bb' for all inverses a', b'",
                Hy::inverse},
               {{4, [](A const& a, Tuple t) {
                  if (!inv(a, t[0], t[2]) || !inv(a, t[1], t[3])) {
                    return false;
                  }
                  bool lhs = a.greens().R.related(t[0], t[1]);
                  bool rhs = H(a, mul(a, {t[0], t[2]}), mul(a, {t[1], t[3]}));
                  return lhs != rhs;
                }}}});
  // (a, a', e)
  c.push_back({{"L4.3",
                "for a' in V(a) and idempotent e, some aexa' and some a'eya "
                "are idempotent",
                Hy::inverse},
               {{3, [](A const& a, Tuple t) {
                  Element x0 = t[0], x1 = t[1], e = t[2];
                  if (!inv(a, x0, x1) || !idem(a, e)) {
                    return false;
                  }
                  bool left = exists(a, [&](Element x) {
                    return idem(a, mul(a, {x0, e, x, x1}));
                  });
                  bool right = exists(a, [&](Element y) {
                    return idem(a, mul(a, {x1, e, y, x0}));
                  });
                  return !(left && right);
                }}}});
  c.push_back({{"L4.4",
                "ab <= abb'xa'ab and b'a' <= b'a'aybb'a' for some x, y",
                Hy::inverse},
               {{4, [](A const& a, Tuple t) {
                  Element x0 = t[0], y0 = t[1], x1 = t[2], y1 = t[3];
                  if (!inv(a, x0, x1) || !inv(a, y0, y1)) {
                    return false;
                  }
                  Element ab = mul(a, {x0, y0});
                  Element ba = mul(a, {y1, x1});
                  bool first = exists(a, [&](Element x) {
                    return le(a, ab, mul(a, {x0, y0, y1, x, x1, x0, y0}));
                  });
                  bool second = exists(a, [&](Element y) {
                    return le(a, ba, mul(a, {y1, x1, x0, y, y0, y1, x1}));
                  });
                  return !(first && second);
                }}}});

  // (e, f, x, x')
  c.push_back({{"TESF",
                "for idempotents e, f, inverses of elements of (eSf] lie in "
                "(fSe]",
                Hy::regular},
               {{4, [](A const& a, Tuple t) {
                  Element e = t[0], f = t[1], x = t[2], xi = t[3];
                  if (!idem(a, e) || !idem(a, f) || !inv(a, x, xi)) {
                    return false;
                  }
                  bool in_esf = exists(a, [&](Element s) {
                    return le(a, x, mul(a, {e, s, f}));
                  });
                  if (!in_esf) {
                    return false;
                  }
                  return !exists(a, [&](Element s) {
                    return le(a, xi, mul(a, {f, s, e}));
                  });
                }}}});

  c.push_back({{"C.1", "inverse", Hy::regular}, inverse_clauses()});
  c.push_back({{"C.2", "aa' and a'a H-commute for every a' in V(a)",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  return inv(a, t[0], t[1]) &&
                         !a.h_commutes(mul(a, {t[0], t[1]}),
                                       mul(a, {t[1], t[0]}));
                }}}});
  c.push_back({{"C.3", "any two inverses of an idempotent are H-related",
                Hy::regular},
               {{3, [](A const& a, Tuple t) {
                  return idem(a, t[0]) && inv(a, t[0], t[1]) &&
                         inv(a, t[0], t[2]) && !H(a, t[1], t[2]);
                }}}});
  c.push_back({{"C.4", "any two inverses of an idempotent H-commute",
                Hy::regular},
               {{3, [](A const& a, Tuple t) {
                  return idem(a, t[0]) && inv(a, t[0], t[1]) &&
                         inv(a, t[0], t[2]) && !a.h_commutes(t[1], t[2]);
                }}}});
  c.push_back({{"C.5", "ee' and e'e H-commute for idempotent e, e' in V(e)",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  return idem(a, t[0]) && inv(a, t[0], t[1]) &&
                         !a.h_commutes(mul(a, {t[0], t[1]}),
                                       mul(a, {t[1], t[0]}));
                }}}});

  {
    auto b1 = inverse_clauses();
    b1.push_back(completely_regular_clause());
    c.push_back({{"B.1", "inverse and completely regular", Hy::regular},
                 std::move(b1)});
  }
  c.push_back({{"B.2",
                "some complete semilattice congruence has group-like classes",
                Hy::regular},
               {{0, [](A const& a, Tuple) {
                  return !a.group_like_decomposition().holds;
                }}}});
  c.push_back({{"B.3", "ab H ba whenever ab and ba are idempotent",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  Element ab = mul(a, {t[0], t[1]});
                  Element ba = mul(a, {t[1], t[0]});
                  return idem(a, ab) && idem(a, ba) && !H(a, ab, ba);
                }}}});
  c.push_back({{"B.4", "every idempotent H-commutes with every element",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  return idem(a, t[0]) && !a.h_commutes(t[0], t[1]);
                }}}});
  c.push_back({{"B.5", "for idempotents e, f: e J f implies e H f",
                Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  return idem(a, t[0]) && idem(a, t[1]) &&
                         a.greens().J.related(t[0], t[1]) && !H(a, t[0], t[1]);
                }}}});
  c.push_back({{"B.6", "H = L = R = J", Hy::regular},
               {{2, [](A const& a, Tuple t) {
                  auto const& g = a.greens();
                  bool h = g.H.related(t[0], t[1]);
                  return g.L.related(t[0], t[1]) != h ||
                         g.R.related(t[0], t[1]) != h ||
                         g.J.related(t[0], t[1]) != h;
                }}}});

  c.push_back({{"CR.W",
                "completely regular implies a <= axa^2 and a <= a^2xa for a "
                "common x",
                Hy::completely_regular},
               {{1, [](A const& a, Tuple t) {
                  if (!a.completely_regular()) {
                    return false;
                  }
                  Element x0 = t[0];
                  Element sq = mul(a, {x0, x0});
                  return !exists(a, [&](Element x) {
                    return le(a, x0, mul(a, {x0, x, sq})) &&
                           le(a, x0, mul(a, {sq, x, x0}));
                  });
                }}}});
  c.push_back({{"CR.J",
                "completely regular implies the least complete semilattice "
                "congruence equals J",
                Hy::completely_regular},
               {{2, [](A const& a, Tuple t) {
                  if (!a.completely_regular()) {
                    return false;
                  }
                  return a.least_complete_semilattice().related(t[0], t[1]) !=
                         a.greens().J.related(t[0], t[1]);
                }}}});
  return c;
}

std::vector<ConditionDef> const& catalog() {
  static std::vector<ConditionDef> const defs = build_catalog();
  return defs;
}

ConditionDef const& find_condition(std::string_view id) {
  for (auto const& d : catalog()) {
    if (d.info.id == id) {
      return d;
    }
  }
  throw std::invalid_argument("unknown condition '" + std::string(id) + "'");
}

bool hypothesis_holds(A const& a, Hypothesis h) {
  switch (h) {
    case Hypothesis::none:
      return true;
    case Hypothesis::regular:
      return a.regular();
    case Hypothesis::inverse:
      return a.inverse().holds;
    case Hypothesis::completely_regular:
      return a.completely_regular();
  }
  return false;
}

// Lexicographically least violating tuple of the clause, if any.
std::optional<std::vector<Element>> first_violation(A const& a,
                                                    Clause const& cl) {
  std::vector<Element> t(cl.arity, 0);
  auto const n = a.order();
  while (true) {
    if (cl.violates(a, t)) {
      return t;
    }
    std::size_t k = cl.arity;
    while (k > 0) {
      --k;
      if (++t[k] < n) {
        break;
      }
      t[k] = 0;
      if (k == 0) {
        return std::nullopt;
      }
    }
    if (cl.arity == 0) {
      return std::nullopt;
    }
  }
}

}  // namespace

std::vector<ConditionInfo> const& condition_catalog() {
  static std::vector<ConditionInfo> const infos = [] {
    std::vector<ConditionInfo> out;
    for (auto const& d : catalog()) {
      out.push_back(d.info);
    }
    return out;
  }();
  return infos;
}

ConditionInfo const& condition_info(std::string_view id) {
  return find_condition(id).info;
}

ConditionVerdict evaluate_condition(OrderedSemigroup const& s,
                                    std::string_view id) {
  return evaluate_condition(StructureAnalysis(s), id);
}

ConditionVerdict evaluate_condition(StructureAnalysis const& a,
                                    std::string_view id) {
  auto const& def = find_condition(id);
  ConditionVerdict v{def.info.id};
  v.hypothesis_met = hypothesis_holds(a, def.info.hypothesis);
  for (auto const& cl : def.clauses) {
    if (auto w = first_violation(a, cl)) {
      v.holds = false;
      v.witness = std::move(*w);
      break;
    }
  }
  return v;
}

bool witness_reverifies(StructureAnalysis const& a,
                        ConditionVerdict const& v) {
  auto const& def = find_condition(v.id);
  if (v.holds) {
    return false;
  }
  for (auto const& w : v.witness) {
    if (w >= a.order()) {
      return false;
    }
  }
  return std::any_of(def.clauses.begin(), def.clauses.end(),
                     [&](Clause const& cl) {
                       return cl.arity == v.witness.size() &&
                              cl.violates(a, v.witness);
                     });
}

// ---------------------------------------------------------------------------
// Theorem groupings

std::vector<TheoremInfo> const& theorem_catalog() {
  using K = TheoremKind;
  using Hy = Hypothesis;
  static std::vector<TheoremInfo> const thms = {
      {"THM_3_3",
       "inverse iff principal one-sided ideals have H-unique idempotent "
       "generators",
       K::equivalence, Hy::regular, {"T35.1", "T33"}},
      {"THM_3_5",
       "inverse iff idempotents H-commute iff L/R-related idempotents are "
       "H-related",
       K::equivalence, Hy::regular, {"T35.1", "T35.2", "T35.3"}},
      {"THM_ESF", "inverse iff inverses of (eSf] lie in (fSe]", K::equivalence,
       Hy::regular, {"T35.1", "TESF"}},
      {"COR", "five characterisations of inverse regular ordered semigroups",
       K::equivalence, Hy::regular, {"C.1", "C.2", "C.3", "C.4", "C.5"}},
      {"THM_BIG",
       "six characterisations of inverse completely regular ordered "
       "semigroups",
       K::equivalence, Hy::regular,
       {"B.1", "B.2", "B.3", "B.4", "B.5", "B.6"}},
      {"LEM_4", "consequences of being inverse", K::implication, Hy::regular,
       {"T35.1", "L4.1", "L4.2", "L4.3", "L4.4"}},
      {"LEM_2_1", "consequences of complete regularity", K::implication,
       Hy::none, {"CR", "CR.W", "CR.J"}},
  };
  return thms;
}

TheoremInfo const& theorem_info(std::string_view id) {
  for (auto const& t : theorem_catalog()) {
    if (t.id == id) {
      return t;
    }
  }
  throw std::invalid_argument("unknown theorem '" + std::string(id) + "'");
}

std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> ids;
  for (auto const& t : theorem_catalog()) {
    ids.push_back(t.id);
  }
  return ids;
}

TheoremReport check_theorem(OrderedSemigroup const& s, std::string_view id) {
  return check_theorem(StructureAnalysis(s), id);
}

TheoremReport check_theorem(StructureAnalysis const& a, std::string_view id) {
  auto const& info = theorem_info(id);
  TheoremReport r{info.id, canonical_form(a.structure())};
  r.hypothesis_met = hypothesis_holds(a, info.ambient);
  for (auto const& cid : info.conditions) {
    r.vector.push_back(evaluate_condition(a, cid));
  }
  if (info.kind == TheoremKind::equivalence) {
    r.consistent = std::all_of(r.vector.begin(), r.vector.end(),
                               [&](ConditionVerdict const& v) {
                                 return v.holds == r.vector.front().holds;
                               });
  } else {
    r.consistent = !r.vector.front().holds ||
                   std::all_of(r.vector.begin() + 1, r.vector.end(),
                               [](auto const& v) { return v.holds; });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t SweepReport::total_inconsistent() const {
  std::size_t total = 0;
  for (auto const& t : theorems) {
    total += t.inconsistent;
  }
  return total;
}

SweepReport sweep(std::vector<OrderedSemigroup> const& corpus,
                  std::vector<std::string> const& theorems,
                  SweepOptions const& opts) {
  for (auto const& id : theorems) {
    theorem_info(id);  // reject unknown ids before any work
  }
  SweepReport report;
  std::vector<std::size_t> valid_idx;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (is_valid(corpus[i])) {
      valid_idx.push_back(i);
    } else {
      ++report.skipped_invalid;
      report.notes.push_back("skipped invalid corpus member #" +
                             std::to_string(i));
    }
  }

  // Per-structure results, filled by workers over disjoint chunks.
  std::vector<std::vector<TheoremReport>> results(valid_idx.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      StructureAnalysis a(corpus[valid_idx[k]]);
      for (auto const& id : theorems) {
        results[k].push_back(check_theorem(a, id));
      }
    }
  };
  std::size_t const threads =
      std::max<std::size_t>(1, std::min(opts.threads, valid_idx.size()));
  if (threads <= 1) {
    work(0, valid_idx.size());
  } else {
    std::vector<std::jthread> pool;
    std::size_t const chunk = (valid_idx.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t b = t * chunk;
      std::size_t e = std::min(valid_idx.size(), b + chunk);
      if (b < e) {
        pool.emplace_back(work, b, e);
      }
    }
  }

  // Deterministic merge: canonical form, then corpus position.
  std::vector<std::size_t> order(valid_idx.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    order[k] = k;
  }
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return results[x].empty() || results[y].empty()
               ? x < y
               : results[x].front().structure < results[y].front().structure;
  });

  for (std::size_t t = 0; t < theorems.size(); ++t) {
    TheoremSweep ts{theorems[t]};
    for (auto k : order) {
      auto const& r = results[k][t];
      ++ts.checked;
      if (r.hypothesis_met) {
        ++ts.hypothesis_met;
        if (!r.consistent) {
          ++ts.inconsistent;
          ts.inconsistencies.push_back(
              {r, serialize_structure(corpus[valid_idx[k]])});
        }
      } else {
        ++ts.outside_hypothesis;
        if (!r.consistent) {
          ++ts.outside_disagreements;
          if (ts.outside_examples.size() < opts.max_outside_examples) {
            ts.outside_examples.push_back(
                {r, serialize_structure(corpus[valid_idx[k]])});
          }
        }
      }
    }
    report.theorems.push_back(std::move(ts));
  }
  return report;
}

bool is_known_filter(std::string_view id) {
  if (id == "is_inverse_ordered") {
    return true;
  }
  auto const& cls = class_property_ids();
  if (std::find(cls.begin(), cls.end(), id) != cls.end()) {
    return true;
  }
  return std::any_of(catalog().begin(), catalog().end(),
                     [&](auto const& d) { return d.info.id == id; });
}

bool evaluate_filter(OrderedSemigroup const& s, std::string_view id) {
  if (id == "is_inverse_ordered") {
    return is_inverse_ordered(s).holds;
  }
  auto const& cls = class_property_ids();
  if (std::find(cls.begin(), cls.end(), id) != cls.end()) {
    return evaluate_class_property(s, id);
  }
  return evaluate_condition(s, id).holds;
}

}  // namespace ordsemi
