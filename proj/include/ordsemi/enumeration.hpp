#pragma once

// Exhaustive generation of semigroup tables, partial orders and ordered
// semigroups of a fixed small order.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordsemi/structure.hpp"

namespace ordsemi {

constexpr std::size_t kDefaultMaxEnumerationOrder = 4;
constexpr std::size_t kHardMaxEnumerationOrder = 5;

enum class EnumerationMode { labelled, up_to_iso };

struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

/// Parses "i/k".
Shard parse_shard(std::string const& text);

struct EnumerationOptions {
  std::size_t order = 1;
  EnumerationMode mode = EnumerationMode::labelled;
  /// Condition or class-property ids; a structure is kept when all hold.
  std::vector<std::string> filters;
  Shard shard;
  /// Orders above kDefaultMaxEnumerationOrder need this raised explicitly.
  std::size_t max_order = kDefaultMaxEnumerationOrder;
};

/// Throws std::invalid_argument unless 1 <= order <= max_order <= 5,
/// shard.index < shard.count and every filter id is known.
void check_options(EnumerationOptions const& opts);

using Table = std::vector<Element>;
using OrderMatrix = std::vector<std::uint8_t>;

/// Associative n*n tables, by cell-wise backtracking. In up_to_iso mode one
/// representative (the canonical relabelling, discrete order) per class.
/// Filters are ignored.
std::vector<Table> enumerate_semigroups(EnumerationOptions const& opts);

/// All partial orders on n labelled points.
std::vector<OrderMatrix> enumerate_partial_orders(
    std::size_t n, std::size_t max_order = kDefaultMaxEnumerationOrder);

/// One partial order per isomorphism class (its least relabelling).
std::vector<OrderMatrix> partial_order_representatives(std::size_t n);

/// Valid ordered semigroups of the given order, in canonical-form order.
/// The order is fixed first and the table is backtracked with associativity
/// and compatibility checked at every cell.
std::vector<OrderedSemigroup> enumerate_ordered_semigroups(
    EnumerationOptions const& opts);

/// Same result computed table-first: every associative table is paired with
/// every partial order and validated. Used to cross-check counts.
std::vector<OrderedSemigroup> enumerate_ordered_semigroups_table_first(
    EnumerationOptions const& opts);

/// Number of (table, order) candidates for the labelled search space:
/// |associative tables| * |partial orders|.
std::size_t labelled_candidate_pairs(std::size_t n);

/// Sorts by canonical form, then by the labelled encoding.
void sort_canonically(std::vector<OrderedSemigroup>& structures);

}  // namespace ordsemi
