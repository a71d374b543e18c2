#pragma once

// Finite ordered semigroups: the value type, its text format, axiom
// validation and isomorphism machinery.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordsemi/subset.hpp"

namespace ordsemi {

/// A finite ordered semigroup on the carrier {0, ..., n-1}.
///
/// The multiplication table and the order relation are stored as dense
/// row-major arrays. The constructor checks only shape and index range;
/// the semigroup and order axioms are checked by validate(), so that
/// malformed candidates can be represented and reported on.
class OrderedSemigroup {
 public:
  OrderedSemigroup(std::size_t n, std::vector<Element> mult,
                   std::vector<std::uint8_t> leq);

  /// The structure with multiplication `mult` and the discrete order.
  static OrderedSemigroup with_discrete_order(std::size_t n,
                                              std::vector<Element> mult);

  std::size_t order() const noexcept { return n_; }

  Element mul(Element a, Element b) const noexcept {
    return mult_[a * n_ + b];
  }
  Element mul(Element a, Element b, Element c) const noexcept {
    return mul(mul(a, b), c);
  }
  bool leq(Element a, Element b) const noexcept {
    return leq_[a * n_ + b] != 0;
  }

  /// {t : t <= a}
  ElementSubset below(Element a) const noexcept {
    return ElementSubset(n_, below_[a]);
  }
  ElementSubset carrier() const noexcept { return ElementSubset::full(n_); }

  std::span<Element const> mult_table() const noexcept { return mult_; }
  std::span<std::uint8_t const> leq_matrix() const noexcept { return leq_; }

  friend bool operator==(OrderedSemigroup const&,
                         OrderedSemigroup const&) = default;

 private:
  std::size_t n_;
  std::vector<Element> mult_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint64_t> below_;
};

// ---------------------------------------------------------------------------
// Text format

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parsed structure together with the element names used in its file.
struct NamedStructure {
  OrderedSemigroup algebra;
  std::vector<std::string> names;
};

std::vector<std::string> default_names(std::size_t n);

/// Parses one structure record. Semigroup axioms are not checked; reflexive
/// pairs are added to the order.
NamedStructure parse_structure(std::string_view text);

std::string serialize_structure(OrderedSemigroup const& s,
                                std::vector<std::string> const& names = {});

// ---------------------------------------------------------------------------
// Validation

enum class Axiom {
  associativity,
  reflexivity,
  antisymmetry,
  transitivity,
  compatibility
};

std::string_view to_string(Axiom a);

/// Indices of one axiom violation.
///
/// associativity (a,b,c); reflexivity (a); antisymmetry (a,b);
/// transitivity (a,b,c); compatibility (a,b,x) with a <= b, where
/// `left_factor` says whether x.a <= x.b (true) or a.x <= b.x failed.
struct AxiomFailure {
  Axiom axiom;
  std::vector<Element> witness;
  bool left_factor = false;

  friend bool operator==(AxiomFailure const&, AxiomFailure const&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<AxiomFailure> failures;
};

/// Checks every axiom family and reports, per failing family, the
/// lexicographically least witness.
ValidationReport validate(OrderedSemigroup const& s);

/// Re-evaluates a reported witness; true when it really violates its axiom.
bool witness_fails(OrderedSemigroup const& s, AxiomFailure const& f);

inline bool is_valid(OrderedSemigroup const& s) { return validate(s).valid; }

// ---------------------------------------------------------------------------
// Relabelling and isomorphism

constexpr std::size_t kMaxCanonicalOrder = 8;

/// Byte string that is equal for two structures iff they are isomorphic.
/// Layout: n, then the n*n table, then the n*n order matrix (0/1 bytes);
/// the minimum over all relabellings.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  /// Printable rendering "n:table:order", e.g. "2:0011:1001".
  std::string str() const;

  friend auto operator<=>(CanonicalForm const&,
                          CanonicalForm const&) = default;
};

/// The structure t with t(p[i], p[j]) = p[s(i, j)] and p[i] <= p[j] iff
/// i <= j.
OrderedSemigroup relabel(OrderedSemigroup const& s,
                         std::span<Element const> perm);

CanonicalForm canonical_form(OrderedSemigroup const& s);

/// A relabelling of `s` whose encoding is the canonical form.
OrderedSemigroup canonical_representative(OrderedSemigroup const& s);

bool is_isomorphic(OrderedSemigroup const& s, OrderedSemigroup const& t);

/// Same order, reversed multiplication.
OrderedSemigroup opposite(OrderedSemigroup const& s);

}  // namespace ordsemi
