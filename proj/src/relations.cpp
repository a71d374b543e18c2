#include "ordsemi/relations.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ordsemi {

Partition::Partition(std::vector<std::size_t> const& class_of)
    : class_of_(class_of.size()) {
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto [it, fresh] = relabel.emplace(class_of[i], relabel.size());
    if (fresh) {
      classes_.push_back(ElementSubset::empty(class_of.size()));
    }
    class_of_[i] = it->second;
    classes_[it->second].insert(static_cast<Element>(i));
  }
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(ids);
}

Partition Partition::universal(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

Partition Partition::from_classes(std::size_t n,
                                  std::vector<ElementSubset> const& classes) {
  std::vector<std::size_t> ids(n, n);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].is_empty()) {
      throw std::invalid_argument("partition: empty class");
    }
    for (Element e : classes[k].elements()) {
      if (e >= n || ids[e] != n) {
        throw std::invalid_argument("partition: classes overlap or overflow");
      }
      ids[e] = k;
    }
  }
  for (auto id : ids) {
    if (id == n) {
      throw std::invalid_argument("partition: classes do not cover carrier");
    }
  }
  return Partition(ids);
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.universe() != universe()) {
    return false;
  }
  for (auto const& cls : classes_) {
    auto members = cls.elements();
    for (Element e : members) {
      if (!coarser.related(members.front(), e)) {
        return false;
      }
    }
  }
  return true;
}

Partition meet(Partition const& a, Partition const& b) {
  auto const n = a.universe();
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = static_cast<Element>(i);
    ids[i] = a.class_of(e) * n + b.class_of(e);
  }
  return Partition(ids);
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      out.emplace_back(rgs);
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  if (n == 0) {
    return out;
  }
  rec(rec, 1, 0);
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (rank_[x] < rank_[y]) {
    std::swap(x, y);
  }
  parent_[y] = x;
  if (rank_[x] == rank_[y]) {
    ++rank_[x];
  }
  return true;
}

Partition DisjointSets::to_partition() {
  std::vector<std::size_t> ids(parent_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = find(i);
  }
  return Partition(ids);
}

namespace {

Partition partition_by(std::size_t n, auto&& key) {
  std::map<std::uint64_t, std::size_t> seen;
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = seen.emplace(key(static_cast<Element>(i)), i).first->second;
  }
  return Partition(ids);
}

GreensRelations greens_from(OrderedSemigroup const& s, auto&& ideal) {
  auto const n = s.order();
  auto L = partition_by(n, [&](Element a) {
    return ideal(s, a, Side::left).bits();
  });
  auto R = partition_by(n, [&](Element a) {
    return ideal(s, a, Side::right).bits();
  });
  auto J = partition_by(n, [&](Element a) {
    return ideal(s, a, Side::two_sided).bits();
  });
  auto H = meet(L, R);
  return {std::move(L), std::move(R), std::move(J), std::move(H)};
}

}  // namespace

GreensRelations greens_relations(OrderedSemigroup const& s) {
  return greens_from(s, principal_ideal);
}

GreensRelations greens_relations_literal(OrderedSemigroup const& s) {
  return greens_from(s, principal_ideal_literal);
}

std::string_view to_string(CongruenceKind k) {
  switch (k) {
    case CongruenceKind::left:
      return "left";
    case CongruenceKind::right:
      return "right";
    case CongruenceKind::two_sided:
      return "two_sided";
    case CongruenceKind::semilattice:
      return "semilattice";
    case CongruenceKind::complete_semilattice:
      return "complete_semilattice";
  }
  return "?";
}

CongruenceCheck is_congruence(OrderedSemigroup const& s, Partition const& p,
                              CongruenceKind kind) {
  auto const n = s.order();
  if (p.universe() != n) {
    throw std::invalid_argument("is_congruence: partition universe is " +
                                std::to_string(p.universe()) +
                                ", structure order is " + std::to_string(n));
  }
  auto fail = [](std::string rule, std::vector<Element> w) {
    return CongruenceCheck{false,
                           CongruenceViolation{std::move(rule), std::move(w)}};
  };
  bool const want_left = kind != CongruenceKind::right;
  bool const want_right = kind != CongruenceKind::left;
  if (want_left) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!p.related(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (!p.related(s.mul(c, a), s.mul(c, b))) {
            return fail("left", {a, b, c});
          }
        }
      }
    }
  }
  if (want_right) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!p.related(a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (!p.related(s.mul(a, c), s.mul(b, c))) {
            return fail("right", {a, b, c});
          }
        }
      }
    }
  }
  if (kind == CongruenceKind::semilattice ||
      kind == CongruenceKind::complete_semilattice) {
    for (Element a = 0; a < n; ++a) {
      if (!p.related(a, s.mul(a, a))) {
        return fail("square", {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!p.related(s.mul(a, b), s.mul(b, a))) {
          return fail("commutative", {a, b});
        }
      }
    }
  }
  if (kind == CongruenceKind::complete_semilattice) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (s.leq(a, b) && !p.related(a, s.mul(a, b))) {
          return fail("complete", {a, b});
        }
      }
    }
  }
  return {};
}

Partition least_complete_semilattice_congruence(OrderedSemigroup const& s) {
  auto const n = s.order();
  DisjointSets ds(n);
  for (Element a = 0; a < n; ++a) {
    ds.unite(a, s.mul(a, a));
    for (Element b = 0; b < n; ++b) {
      ds.unite(s.mul(a, b), s.mul(b, a));
      if (s.leq(a, b)) {
        ds.unite(a, s.mul(a, b));
      }
    }
  }
  // Saturate under left and right translations until nothing merges.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (ds.find(a) != ds.find(b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          changed |= ds.unite(s.mul(c, a), s.mul(c, b));
          changed |= ds.unite(s.mul(a, c), s.mul(b, c));
        }
      }
    }
  }
  return ds.to_partition();
}

std::optional<OrderedSemigroup> induced_substructure(OrderedSemigroup const& s,
                                                     ElementSubset members) {
  auto elems = members.elements();
  auto const k = elems.size();
  if (k == 0) {
    return std::nullopt;
  }
  std::vector<Element> index(s.order(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    index[elems[i]] = static_cast<Element>(i);
  }
  std::vector<Element> mult(k * k);
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element prod = s.mul(elems[i], elems[j]);
      if (!members.contains(prod)) {
        return std::nullopt;
      }
      mult[i * k + j] = index[prod];
      leq[i * k + j] = s.leq(elems[i], elems[j]) ? 1 : 0;
    }
  }
  return OrderedSemigroup(k, std::move(mult), std::move(leq));
}

}  // namespace ordsemi
