#include "ordsemi/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ordsemi/theorems.hpp"

namespace ordsemi {

Shard parse_shard(std::string const& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw std::invalid_argument("shard must look like i/k");
  }
  Shard sh;
  try {
    std::size_t used = 0;
    sh.index = std::stoul(text.substr(0, slash), &used);
    if (used != slash) {
      throw std::invalid_argument("");
    }
    auto rest = text.substr(slash + 1);
    sh.count = std::stoul(rest, &used);
    if (used != rest.size()) {
      throw std::invalid_argument("");
    }
  } catch (std::exception const&) {
    throw std::invalid_argument("shard must look like i/k, got '" + text + "'");
  }
  if (sh.count == 0 || sh.index >= sh.count) {
    throw std::invalid_argument("shard index must be below shard count");
  }
  return sh;
}

void check_options(EnumerationOptions const& opts) {
  if (opts.max_order > kHardMaxEnumerationOrder) {
    throw std::invalid_argument("maximum enumeration order is " +
                                std::to_string(kHardMaxEnumerationOrder));
  }
  if (opts.order < 1 || opts.order > opts.max_order) {
    throw std::invalid_argument("order " + std::to_string(opts.order) +
                                " outside 1.." +
                                std::to_string(opts.max_order));
  }
  if (opts.shard.count == 0 || opts.shard.index >= opts.shard.count) {
    throw std::invalid_argument("shard index must be below shard count");
  }
  for (auto const& f : opts.filters) {
    if (!is_known_filter(f)) {
      throw std::invalid_argument("unknown filter '" + f + "'");
    }
  }
}

namespace {

constexpr int kUnset = -1;

// Cell-wise backtracking over n*n tables in row-major order. When an order
// is supplied, compatibility is enforced as cells are filled.
class TableSearch {
 public:
  TableSearch(std::size_t n, OrderMatrix const* leq)
      : n_(n), leq_(leq), cells_(n * n, kUnset) {}

  /// Calls emit(table) for every complete table whose cell (0,0) equals
  /// `first` (or any value when first < 0).
  template <typename Emit>
  void run(int first, Emit&& emit) {
    std::fill(cells_.begin(), cells_.end(), kUnset);
    search(0, first, emit);
  }

 private:
  int at(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }
  bool le(int a, int b) const {
    return (*leq_)[static_cast<std::size_t>(a) * n_ +
                   static_cast<std::size_t>(b)] != 0;
  }

  // Associativity on (a,b,c) if every product involved is known.
  bool assoc_ok(std::size_t a, std::size_t b, std::size_t c) const {
    int ab = at(a, b);
    int bc = at(b, c);
    if (ab == kUnset || bc == kUnset) {
      return true;
    }
    int lhs = at(static_cast<std::size_t>(ab), c);
    int rhs = at(a, static_cast<std::size_t>(bc));
    return lhs == kUnset || rhs == kUnset || lhs == rhs;
  }

  bool consistent_after(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!assoc_ok(i, j, k) || !assoc_ok(k, i, j)) {
        return false;
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        // (i,j) used as the outer product (ab)c with ab = i, c = j, or
        // a(bc) with a = i, bc = j.
        if (at(a, b) == static_cast<int>(i) && !assoc_ok(a, b, j)) {
          return false;
        }
        if (at(a, b) == static_cast<int>(j) && !assoc_ok(i, a, b)) {
          return false;
        }
      }
    }
    if (leq_ == nullptr) {
      return true;
    }
    int const v = at(i, j);
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == j) {
        continue;
      }
      int other = at(i, k);
      if (other != kUnset) {
        if (le(static_cast<int>(j), static_cast<int>(k)) && !le(v, other)) {
          return false;
        }
        if (le(static_cast<int>(k), static_cast<int>(j)) && !le(other, v)) {
          return false;
        }
      }
    }
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == i) {
        continue;
      }
      int other = at(k, j);
      if (other != kUnset) {
        if (le(static_cast<int>(i), static_cast<int>(k)) && !le(v, other)) {
          return false;
        }
        if (le(static_cast<int>(k), static_cast<int>(i)) && !le(other, v)) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename Emit>
  void search(std::size_t cell, int first, Emit& emit) {
    if (cell == cells_.size()) {
      Table t(cells_.size());
      std::transform(cells_.begin(), cells_.end(), t.begin(),
                     [](int v) { return static_cast<Element>(v); });
      emit(t);
      return;
    }
    std::size_t const i = cell / n_;
    std::size_t const j = cell % n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cell == 0 && first >= 0 && static_cast<int>(v) != first) {
        continue;
      }
      cells_[cell] = static_cast<int>(v);
      if (consistent_after(i, j)) {
        search(cell + 1, first, emit);
      }
    }
    cells_[cell] = kUnset;
  }

  std::size_t n_;
  OrderMatrix const* leq_;
  std::vector<int> cells_;
};

std::vector<Table> all_labelled_tables(std::size_t n) {
  std::vector<Table> out;
  TableSearch search(n, nullptr);
  search.run(-1, [&](Table const& t) { out.push_back(t); });
  return out;
}

bool passes_filters(OrderedSemigroup const& s,
                    std::vector<std::string> const& filters) {
  return std::all_of(filters.begin(), filters.end(), [&](auto const& id) {
    return evaluate_filter(s, id);
  });
}

OrderMatrix discrete_order(std::size_t n) {
  OrderMatrix leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
  }
  return leq;
}

std::vector<std::uint8_t> labelled_bytes(OrderedSemigroup const& s) {
  std::vector<std::uint8_t> b(s.mult_table().begin(), s.mult_table().end());
  b.insert(b.end(), s.leq_matrix().begin(), s.leq_matrix().end());
  return b;
}

}  // namespace

std::vector<Table> enumerate_semigroups(EnumerationOptions const& opts) {
  auto o = opts;
  o.filters.clear();
  check_options(o);
  auto const n = opts.order;
  if (opts.mode == EnumerationMode::labelled) {
    std::vector<Table> out;
    TableSearch search(n, nullptr);
    for (std::size_t v = opts.shard.index; v < n; v += opts.shard.count) {
      search.run(static_cast<int>(v), [&](Table const& t) { out.push_back(t); });
    }
    return out;
  }
  // Up to isomorphism: classes are sharded by their rank in canonical order.
  std::set<CanonicalForm> seen;
  std::map<CanonicalForm, Table> reps;
  for (auto& t : all_labelled_tables(n)) {
    auto s = OrderedSemigroup::with_discrete_order(n, t);
    auto cf = canonical_form(s);
    if (reps.contains(cf)) {
      continue;
    }
    auto rep = canonical_representative(s);
    reps.emplace(cf, Table(rep.mult_table().begin(), rep.mult_table().end()));
  }
  std::vector<Table> out;
  std::size_t rank = 0;
  for (auto& [cf, t] : reps) {
    if (rank++ % opts.shard.count == opts.shard.index) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<OrderMatrix> enumerate_partial_orders(std::size_t n,
                                                  std::size_t max_order) {
  if (n < 1 || n > std::min(max_order, kHardMaxEnumerationOrder)) {
    throw std::invalid_argument("order " + std::to_string(n) +
                                " outside 1.." + std::to_string(max_order));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  std::vector<OrderMatrix> out;
  OrderMatrix leq = discrete_order(n);
  // Each unordered pair is incomparable, i<j or j<i; antisymmetry holds by
  // construction, transitivity is filtered.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!leq[a * n + b]) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (leq[b * n + c] && !leq[a * n + c]) {
              return;
            }
          }
        }
      }
      out.push_back(leq);
      return;
    }
    auto [i, j] = pairs[k];
    for (int choice = 0; choice < 3; ++choice) {
      leq[i * n + j] = choice == 1;
      leq[j * n + i] = choice == 2;
      self(self, k + 1);
    }
    leq[i * n + j] = 0;
    leq[j * n + i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<OrderMatrix> partial_order_representatives(std::size_t n) {
  std::map<std::vector<std::uint8_t>, OrderMatrix> reps;
  std::vector<Element> perm(n);
  for (auto const& leq : enumerate_partial_orders(n, kHardMaxEnumerationOrder)) {
    std::optional<OrderMatrix> best;
    std::iota(perm.begin(), perm.end(), Element{0});
    do {
      OrderMatrix m(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m[perm[i] * n + perm[j]] = leq[i * n + j];
        }
      }
      if (!best || m < *best) {
        best = std::move(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    reps.emplace(*best, *best);
  }
  std::vector<OrderMatrix> out;
  for (auto& [key, m] : reps) {
    out.push_back(std::move(m));
  }
  return out;
}

void sort_canonically(std::vector<OrderedSemigroup>& structures) {
  std::vector<std::pair<std::pair<CanonicalForm, std::vector<std::uint8_t>>,
                        std::size_t>>
      keys;
  keys.reserve(structures.size());
  for (std::size_t i = 0; i < structures.size(); ++i) {
    keys.push_back({{canonical_form(structures[i]),
                     labelled_bytes(structures[i])},
                    i});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<OrderedSemigroup> sorted;
  sorted.reserve(structures.size());
  for (auto const& k : keys) {
    sorted.push_back(std::move(structures[k.second]));
  }
  structures = std::move(sorted);
}

std::vector<OrderedSemigroup> enumerate_ordered_semigroups(
    EnumerationOptions const& opts) {
  check_options(opts);
  auto const n = opts.order;
  bool const iso = opts.mode == EnumerationMode::up_to_iso;
  auto orders = iso ? partial_order_representatives(n)
                    : enumerate_partial_orders(n, opts.max_order);

  std::vector<OrderedSemigroup> out;
  std::set<CanonicalForm> seen;
  for (std::size_t k = opts.shard.index; k < orders.size();
       k += opts.shard.count) {
    auto const& leq = orders[k];
    TableSearch search(n, &leq);
    // Isomorphic structures share the poset class, so deduplication within
    // one representative order is complete.
    seen.clear();
    search.run(-1, [&](Table const& t) {
      OrderedSemigroup s(n, t, leq);
      if (iso) {
        auto cf = canonical_form(s);
        if (!seen.insert(cf).second) {
          return;
        }
        s = canonical_representative(s);
      }
      if (passes_filters(s, opts.filters)) {
        out.push_back(std::move(s));
      }
    });
  }
  sort_canonically(out);
  return out;
}

std::vector<OrderedSemigroup> enumerate_ordered_semigroups_table_first(
    EnumerationOptions const& opts) {
  check_options(opts);
  auto const n = opts.order;
  auto tables = all_labelled_tables(n);
  auto orders = enumerate_partial_orders(n, opts.max_order);
  std::vector<OrderedSemigroup> all;
  std::set<CanonicalForm> seen;
  for (auto const& t : tables) {
    for (auto const& leq : orders) {
      OrderedSemigroup s(n, t, leq);
      if (!is_valid(s)) {
        continue;
      }
      if (opts.mode == EnumerationMode::up_to_iso) {
        if (!seen.insert(canonical_form(s)).second) {
          continue;
        }
        s = canonical_representative(s);
      }
      if (passes_filters(s, opts.filters)) {
        all.push_back(std::move(s));
      }
    }
  }
  sort_canonically(all);
  if (opts.shard.count == 1) {
    return all;
  }
  std::vector<OrderedSemigroup> out;
  for (std::size_t k = opts.shard.index; k < all.size();
       k += opts.shard.count) {
    out.push_back(all[k]);
  }
  return out;
}

std::size_t labelled_candidate_pairs(std::size_t n) {
  EnumerationOptions o;
  o.order = n;
  o.max_order = std::max(n, kDefaultMaxEnumerationOrder);
  return enumerate_semigroups(o).size() *
         enumerate_partial_orders(n, o.max_order).size();
}

}  // namespace ordsemi
