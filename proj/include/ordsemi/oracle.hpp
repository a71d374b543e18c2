#pragma once

// Brute-force reference computations over raw tables. Nothing here calls
// into the validation, canonical-form or enumeration code, so these can be
// used to check them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ordsemi::oracle {

using RawTable = std::vector<int>;       // n*n, row-major, entry (i,j) = i.j
using RawOrder = std::vector<int>;       // n*n, entry (i,j) = 1 iff i <= j

bool associative(std::size_t n, RawTable const& t);
bool partial_order(std::size_t n, RawOrder const& leq);
bool compatible(std::size_t n, RawTable const& t, RawOrder const& leq);
bool ordered_semigroup(std::size_t n, RawTable const& t, RawOrder const& leq);

/// Every n*n table over {0..n-1} in base-n counting order.
std::vector<RawTable> all_tables(std::size_t n);
/// Every relation with 1s on the diagonal, off-diagonal bits in counting
/// order.
std::vector<RawOrder> all_reflexive_relations(std::size_t n);

std::size_t count_semigroups(std::size_t n);
/// Isomorphism classes of semigroups, by comparing every relabelling.
std::size_t count_semigroup_classes(std::size_t n);
std::size_t count_partial_orders(std::size_t n);
/// (table, partial order) pairs satisfying all ordered-semigroup axioms.
std::size_t count_ordered_pairs(std::size_t n);
/// Isomorphism classes of ordered semigroups.
std::size_t count_ordered_classes(std::size_t n);

struct TripleScan {
  std::size_t triples_checked = 0;
  std::vector<std::vector<int>> failing;  // (a,b,c) with (ab)c != a(bc)
};

TripleScan associativity_scan(std::size_t n, RawTable const& t);

/// The three-element table of the worked example in the fixture set, with
/// elements a=0, e=1, f=2.
RawTable px3_table();

/// Human-readable output of a named suite: px3, semigroup-counts,
/// poset-counts, ordered-pairs, fixtures, all. Throws std::invalid_argument
/// for an unknown suite.
std::string run_suite(std::string const& name);
std::vector<std::string> suite_names();

}  // namespace ordsemi::oracle
