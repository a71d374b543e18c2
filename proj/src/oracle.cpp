#include "ordsemi/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ordsemi::oracle {

bool associative(std::size_t n, RawTable const& t) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto ab = static_cast<std::size_t>(t[a * n + b]);
        auto bc = static_cast<std::size_t>(t[b * n + c]);
        if (t[ab * n + c] != t[a * n + bc]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool partial_order(std::size_t n, RawOrder const& leq) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a * n + a]) {
      return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) {
        return false;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool compatible(std::size_t n, RawTable const& t, RawOrder const& leq) {
  auto le = [&](int x, int y) {
    return leq[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq[a * n + b]) {
        continue;
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!le(t[x * n + a], t[x * n + b]) ||
            !le(t[a * n + x], t[b * n + x])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool ordered_semigroup(std::size_t n, RawTable const& t, RawOrder const& leq) {
  return associative(n, t) && partial_order(n, leq) && compatible(n, t, leq);
}

std::vector<RawTable> all_tables(std::size_t n) {
  std::vector<RawTable> out;
  RawTable t(n * n, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = 0;
    // Increment as a base-n number, last cell least significant.
    for (k = n * n; k-- > 0;) {
      if (++t[k] < static_cast<int>(n)) {
        break;
      }
      t[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) {
      return out;
    }
  }
}

std::vector<RawOrder> all_reflexive_relations(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        off.emplace_back(i, j);
      }
    }
  }
  std::vector<RawOrder> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size());
       ++bits) {
    RawOrder r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      r[i * n + i] = 1;
    }
    for (std::size_t k = 0; k < off.size(); ++k) {
      if ((bits >> k) & 1U) {
        r[off[k].first * n + off[k].second] = 1;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<RawTable> associative_tables(std::size_t n) {
  std::vector<RawTable> out;
  for (auto& t : all_tables(n)) {
    if (associative(n, t)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<RawOrder> partial_orders(std::size_t n) {
  std::vector<RawOrder> out;
  for (auto& r : all_reflexive_relations(n)) {
    if (partial_order(n, r)) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Least encoding of (t, leq) over all relabellings.
std::vector<int> least_encoding(std::size_t n, RawTable const& t,
                                RawOrder const& leq) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<int> best;
  do {
    std::vector<int> enc(2 * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        enc[p[i] * n + p[j]] =
            static_cast<int>(p[static_cast<std::size_t>(t[i * n + j])]);
        enc[n * n + p[i] * n + p[j]] = leq[i * n + j];
      }
    }
    if (best.empty() || enc < best) {
      best = std::move(enc);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

RawOrder discrete(std::size_t n) {
  RawOrder r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i * n + i] = 1;
  }
  return r;
}

}  // namespace

std::size_t count_semigroups(std::size_t n) {
  return associative_tables(n).size();
}

std::size_t count_semigroup_classes(std::size_t n) {
  std::set<std::vector<int>> classes;
  for (auto const& t : associative_tables(n)) {
    classes.insert(least_encoding(n, t, discrete(n)));
  }
  return classes.size();
}

std::size_t count_partial_orders(std::size_t n) {
  return partial_orders(n).size();
}

std::size_t count_ordered_pairs(std::size_t n) {
  std::size_t count = 0;
  auto orders = partial_orders(n);
  for (auto const& t : associative_tables(n)) {
    for (auto const& r : orders) {
      count += compatible(n, t, r) ? 1 : 0;
    }
  }
  return count;
}

std::size_t count_ordered_classes(std::size_t n) {
  std::set<std::vector<int>> classes;
  auto orders = partial_orders(n);
  for (auto const& t : associative_tables(n)) {
    for (auto const& r : orders) {
      if (compatible(n, t, r)) {
        classes.insert(least_encoding(n, t, r));
      }
    }
  }
  return classes.size();
}

TripleScan associativity_scan(std::size_t n, RawTable const& t) {
  TripleScan scan;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        ++scan.triples_checked;
        auto ab = static_cast<std::size_t>(t[a * n + b]);
        auto bc = static_cast<std::size_t>(t[b * n + c]);
        if (t[ab * n + c] != t[a * n + bc]) {
          scan.failing.push_back(
              {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
        }
      }
    }
  }
  return scan;
}

RawTable px3_table() {
  // rows a, e, f; columns a, e, f
  return {0, 1, 2,  //
          2, 1, 0,  //
          1, 0, 2};
}

namespace {

RawTable transpose(std::size_t n, RawTable const& t) {
  RawTable out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = t[j * n + i];
    }
  }
  return out;
}

std::string px3_suite() {
  static constexpr char kNames[] = {'a', 'e', 'f'};
  std::ostringstream out;
  auto report = [&](char const* label, RawTable const& t) {
    auto scan = associativity_scan(3, t);
    out << label << ": " << scan.triples_checked << " triples, "
        << scan.failing.size() << " non-associative\n";
    for (auto const& f : scan.failing) {
      auto ab = t[static_cast<std::size_t>(f[0] * 3 + f[1])];
      auto bc = t[static_cast<std::size_t>(f[1] * 3 + f[2])];
      out << "  (" << kNames[f[0]] << "," << kNames[f[1]] << ","
          << kNames[f[2]] << "): (xy)z = "
          << kNames[t[static_cast<std::size_t>(ab * 3 + f[2])]]
          << ", x(yz) = "
          << kNames[t[static_cast<std::size_t>(f[0] * 3 + bc)]] << '\n';
    }
    out << "  ordered semigroup: "
        << (ordered_semigroup(3, t, discrete(3)) ? "yes" : "no") << '\n';
  };
  report("row-times-column", px3_table());
  report("column-times-row", transpose(3, px3_table()));
  return out.str();
}

std::string semigroup_counts_suite() {
  std::ostringstream out;
  for (std::size_t n = 1; n <= 3; ++n) {
    out << "n=" << n << ": " << all_tables(n).size() << " tables, "
        << count_semigroups(n) << " associative, "
        << count_semigroup_classes(n) << " up to isomorphism\n";
  }
  return out.str();
}

std::string poset_counts_suite() {
  std::ostringstream out;
  for (std::size_t n = 1; n <= 3; ++n) {
    out << "n=" << n << ": " << all_reflexive_relations(n).size()
        << " reflexive relations, " << count_partial_orders(n)
        << " partial orders\n";
  }
  return out.str();
}

std::string ordered_pairs_suite() {
  std::ostringstream out;
  for (std::size_t n = 1; n <= 3; ++n) {
    out << "n=" << n << ": "
        << count_semigroups(n) * count_partial_orders(n)
        << " candidate pairs, " << count_ordered_pairs(n)
        << " ordered semigroups, " << count_ordered_classes(n)
        << " up to isomorphism\n";
  }
  return out.str();
}

std::string fixtures_suite() {
  struct Fixture {
    char const* name;
    std::size_t n;
    RawTable t;
    RawOrder leq;
  };
  std::vector<Fixture> fixtures = {
      {"T1", 1, {0}, {1}},
      {"SL2", 2, {0, 1, 1, 1}, {1, 0, 1, 1}},  // f <= e
      {"LZ2", 2, {0, 0, 1, 1}, {1, 0, 0, 1}},
      {"RZ2", 2, {0, 1, 0, 1}, {1, 0, 0, 1}},
      {"N2", 2, {0, 0, 0, 0}, {1, 0, 0, 1}},
      {"C2", 2, {0, 1, 1, 0}, {1, 1, 0, 1}},  // 1 <= g
  };
  std::ostringstream out;
  for (auto const& f : fixtures) {
    out << f.name << ": associative=" << associative(f.n, f.t)
        << " partial_order=" << partial_order(f.n, f.leq)
        << " compatible=" << compatible(f.n, f.t, f.leq)
        << " ordered_semigroup=" << ordered_semigroup(f.n, f.t, f.leq) << '\n';
  }
  return out.str();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"px3", "semigroup-counts", "poset-counts", "ordered-pairs",
          "fixtures", "all"};
}

std::string run_suite(std::string const& name) {
  if (name == "px3") {
    return px3_suite();
  }
  if (name == "semigroup-counts") {
    return semigroup_counts_suite();
  }
  if (name == "poset-counts") {
    return poset_counts_suite();
  }
  if (name == "ordered-pairs") {
    return ordered_pairs_suite();
  }
  if (name == "fixtures") {
    return fixtures_suite();
  }
  if (name == "all") {
    std::string out;
    for (auto const& s : suite_names()) {
      if (s != "all") {
        out += "[" + s + "]\n" + run_suite(s);
      }
    }
    return out;
  }
  throw std::invalid_argument("unknown oracle suite '" + name + "'");
}

}  // namespace ordsemi::oracle
