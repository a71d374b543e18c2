#include "ordsemi/structure.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace ordsemi {

OrderedSemigroup::OrderedSemigroup(std::size_t n, std::vector<Element> mult,
                                   std::vector<std::uint8_t> leq)
    : n_(n), mult_(std::move(mult)), leq_(std::move(leq)), below_(n, 0) {
  if (n == 0 || n > kMaxOrder) {
    throw std::invalid_argument("order must be in 1.." +
                                std::to_string(kMaxOrder));
  }
  if (mult_.size() != n * n || leq_.size() != n * n) {
    throw std::invalid_argument("table and order must be n*n");
  }
  for (Element v : mult_) {
    if (v >= n) {
      throw std::invalid_argument("table entry out of range");
    }
  }
  for (auto& v : leq_) {
    v = v != 0 ? 1 : 0;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq_[a * n + b]) {
        below_[b] |= std::uint64_t{1} << a;
      }
    }
  }
}

OrderedSemigroup OrderedSemigroup::with_discrete_order(
    std::size_t n, std::vector<Element> mult) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
  }
  return {n, std::move(mult), std::move(leq)};
}

// ---------------------------------------------------------------------------
// Text format

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
  }
  return names;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

class ElementResolver {
 public:
  explicit ElementResolver(std::vector<std::string> const& names)
      : names_(names) {}

  Element operator()(std::string const& tok, std::size_t line) const {
    auto it = std::find(names_.begin(), names_.end(), tok);
    if (it != names_.end()) {
      return static_cast<Element>(it - names_.begin());
    }
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(line, "unknown element '" + tok + "'");
    }
    if (value >= names_.size()) {
      throw ParseError(line, "index " + tok + " out of range for order " +
                                 std::to_string(names_.size()));
    }
    return static_cast<Element>(value);
  }

 private:
  std::vector<std::string> const& names_;
};

}  // namespace

NamedStructure parse_structure(std::string_view text) {
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<Element> mult;
  std::vector<std::uint8_t> leq;
  std::set<std::pair<Element, Element>> seen_pairs;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool have_order = false;

  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    auto toks = tokenize(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (toks.empty()) {
      continue;
    }
    auto const& key = toks[0];
    if (!have_order) {
      if (key != "order" || toks.size() != 2) {
        throw ParseError(line_no, "expected header 'order <n>'");
      }
      auto [ptr, ec] = std::from_chars(
          toks[1].data(), toks[1].data() + toks[1].size(), n);
      if (ec != std::errc{} || ptr != toks[1].data() + toks[1].size() ||
          n == 0) {
        throw ParseError(line_no, "order must be a positive integer");
      }
      if (n > kMaxOrder) {
        throw ParseError(line_no, "order exceeds " + std::to_string(kMaxOrder));
      }
      have_order = true;
      names = default_names(n);
      leq.assign(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        leq[i * n + i] = 1;
      }
      continue;
    }
    ElementResolver resolve(names);
    if (key == "elements") {
      if (rows != 0) {
        throw ParseError(line_no, "'elements' must precede the table");
      }
      if (toks.size() != n + 1) {
        throw ParseError(line_no, "expected " + std::to_string(n) + " names");
      }
      std::vector<std::string> given(toks.begin() + 1, toks.end());
      std::set<std::string> uniq(given.begin(), given.end());
      if (uniq.size() != n) {
        throw ParseError(line_no, "duplicate element name");
      }
      names = std::move(given);
    } else if (key == "mult") {
      if (rows == n) {
        throw ParseError(line_no, "too many table rows");
      }
      if (toks.size() != n + 1) {
        throw ParseError(line_no, "table row needs " + std::to_string(n) +
                                      " entries");
      }
      for (std::size_t j = 1; j <= n; ++j) {
        mult.push_back(resolve(toks[j], line_no));
      }
      ++rows;
    } else if (key == "leq") {
      if (toks.size() != 3) {
        throw ParseError(line_no, "expected 'leq <x> <y>'");
      }
      Element x = resolve(toks[1], line_no);
      Element y = resolve(toks[2], line_no);
      if (!seen_pairs.emplace(x, y).second) {
        throw ParseError(line_no, "duplicate order pair " + toks[1] + " " +
                                      toks[2]);
      }
      leq[x * n + y] = 1;
    } else {
      throw ParseError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!have_order) {
    throw ParseError(line_no, "missing header 'order <n>'");
  }
  if (rows != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " table rows, found " +
                                  std::to_string(rows));
  }
  return {OrderedSemigroup(n, std::move(mult), std::move(leq)),
          std::move(names)};
}

std::string serialize_structure(OrderedSemigroup const& s,
                                std::vector<std::string> const& names) {
  auto const n = s.order();
  auto const& nm = names.empty() ? default_names(n) : names;
  std::ostringstream out;
  out << "order " << n << '\n';
  out << "elements";
  for (auto const& name : nm) {
    out << ' ' << name;
  }
  out << '\n';
  for (Element i = 0; i < n; ++i) {
    out << "mult";
    for (Element j = 0; j < n; ++j) {
      out << ' ' << nm[s.mul(i, j)];
    }
    out << '\n';
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j && s.leq(i, j)) {
        out << "leq " << nm[i] << ' ' << nm[j] << '\n';
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::associativity:
      return "associativity";
    case Axiom::reflexivity:
      return "reflexivity";
    case Axiom::antisymmetry:
      return "antisymmetry";
    case Axiom::transitivity:
      return "transitivity";
    case Axiom::compatibility:
      return "compatibility";
  }
  return "?";
}

namespace {

template <typename Check>
bool first_triple(std::size_t n, std::vector<Element>& witness, Check check) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (!check(a, b, c)) {
          witness = {a, b, c};
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate(OrderedSemigroup const& s) {
  ValidationReport report;
  auto const n = s.order();
  auto fail = [&](Axiom ax, std::vector<Element> w, bool left = false) {
    report.failures.push_back({ax, std::move(w), left});
  };

  std::vector<Element> w;
  if (first_triple(n, w, [&](Element a, Element b, Element c) {
        return s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c));
      })) {
    fail(Axiom::associativity, w);
  }
  for (Element a = 0; a < n; ++a) {
    if (!s.leq(a, a)) {
      fail(Axiom::reflexivity, {a});
      break;
    }
  }
  [&] {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b && s.leq(a, b) && s.leq(b, a)) {
          fail(Axiom::antisymmetry, {a, b});
          return;
        }
      }
    }
  }();
  if (first_triple(n, w, [&](Element a, Element b, Element c) {
        return !(s.leq(a, b) && s.leq(b, c)) || s.leq(a, c);
      })) {
    fail(Axiom::transitivity, w);
  }
  [&] {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!s.leq(a, b)) {
          continue;
        }
        for (Element x = 0; x < n; ++x) {
          if (!s.leq(s.mul(x, a), s.mul(x, b))) {
            fail(Axiom::compatibility, {a, b, x}, true);
            return;
          }
          if (!s.leq(s.mul(a, x), s.mul(b, x))) {
            fail(Axiom::compatibility, {a, b, x}, false);
            return;
          }
        }
      }
    }
  }();
  report.valid = report.failures.empty();
  return report;
}

bool witness_fails(OrderedSemigroup const& s, AxiomFailure const& f) {
  auto const& w = f.witness;
  auto in_range = [&](std::size_t k) {
    if (w.size() != k) {
      return false;
    }
    return std::all_of(w.begin(), w.end(),
                       [&](Element e) { return e < s.order(); });
  };
  switch (f.axiom) {
    case Axiom::associativity:
      return in_range(3) &&
             s.mul(s.mul(w[0], w[1]), w[2]) != s.mul(w[0], s.mul(w[1], w[2]));
    case Axiom::reflexivity:
      return in_range(1) && !s.leq(w[0], w[0]);
    case Axiom::antisymmetry:
      return in_range(2) && w[0] != w[1] && s.leq(w[0], w[1]) &&
             s.leq(w[1], w[0]);
    case Axiom::transitivity:
      return in_range(3) && s.leq(w[0], w[1]) && s.leq(w[1], w[2]) &&
             !s.leq(w[0], w[2]);
    case Axiom::compatibility:
      if (!in_range(3) || !s.leq(w[0], w[1])) {
        return false;
      }
      return f.left_factor ? !s.leq(s.mul(w[2], w[0]), s.mul(w[2], w[1]))
                           : !s.leq(s.mul(w[0], w[2]), s.mul(w[1], w[2]));
  }
  return false;
}

// ---------------------------------------------------------------------------
// Relabelling and isomorphism

std::string CanonicalForm::str() const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (bytes.empty()) {
    return {};
  }
  std::size_t const n = bytes[0];
  std::string out = std::to_string(n) + ":";
  for (std::size_t i = 1; i < bytes.size(); ++i) {
    if (i == 1 + n * n) {
      out += ':';
    }
    out += kDigits[bytes[i] % 36];
  }
  return out;
}

OrderedSemigroup relabel(OrderedSemigroup const& s,
                         std::span<Element const> perm) {
  auto const n = s.order();
  if (perm.size() != n) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Element> mult(n * n);
  std::vector<std::uint8_t> leq(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      mult[perm[i] * n + perm[j]] = perm[s.mul(i, j)];
      leq[perm[i] * n + perm[j]] = s.leq(i, j) ? 1 : 0;
    }
  }
  return {n, std::move(mult), std::move(leq)};
}

namespace {

// Returns the inverse permutation (new label -> old label) that yields the
// least encoding.
std::vector<Element> best_labelling(OrderedSemigroup const& s) {
  auto const n = s.order();
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical form limited to order " +
                                std::to_string(kMaxCanonicalOrder));
  }
  std::vector<Element> inv(n);   // new -> old
  std::vector<Element> perm(n);  // old -> new
  std::iota(inv.begin(), inv.end(), Element{0});
  std::vector<std::uint8_t> best;
  std::vector<Element> best_inv;
  std::vector<std::uint8_t> cur(2 * n * n);
  do {
    for (Element k = 0; k < n; ++k) {
      perm[inv[k]] = k;
    }
    // Encode lazily and abandon as soon as we are above the best.
    int cmp = best.empty() ? -1 : 0;
    std::size_t pos = 0;
    auto emit = [&](std::uint8_t v) {
      cur[pos] = v;
      if (cmp == 0) {
        cmp = v < best[pos] ? -1 : (v > best[pos] ? 1 : 0);
      }
      ++pos;
      return cmp <= 0;
    };
    bool alive = true;
    for (Element i = 0; i < n && alive; ++i) {
      for (Element j = 0; j < n && alive; ++j) {
        alive = emit(perm[s.mul(inv[i], inv[j])]);
      }
    }
    for (Element i = 0; i < n && alive; ++i) {
      for (Element j = 0; j < n && alive; ++j) {
        alive = emit(s.leq(inv[i], inv[j]) ? 1 : 0);
      }
    }
    if (alive && cmp < 0) {
      best = cur;
      best_inv = inv;
    }
  } while (std::next_permutation(inv.begin(), inv.end()));
  if (best_inv.empty()) {
    best_inv = inv;  // every labelling encodes identically
  }
  return best_inv;
}

}  // namespace

OrderedSemigroup canonical_representative(OrderedSemigroup const& s) {
  auto inv = best_labelling(s);
  std::vector<Element> perm(inv.size());
  for (Element k = 0; k < inv.size(); ++k) {
    perm[inv[k]] = k;
  }
  return relabel(s, perm);
}

CanonicalForm canonical_form(OrderedSemigroup const& s) {
  auto rep = canonical_representative(s);
  CanonicalForm cf;
  auto const n = rep.order();
  cf.bytes.reserve(1 + 2 * n * n);
  cf.bytes.push_back(static_cast<std::uint8_t>(n));
  for (Element v : rep.mult_table()) {
    cf.bytes.push_back(v);
  }
  for (auto v : rep.leq_matrix()) {
    cf.bytes.push_back(v);
  }
  return cf;
}

bool is_isomorphic(OrderedSemigroup const& s, OrderedSemigroup const& t) {
  return s.order() == t.order() && canonical_form(s) == canonical_form(t);
}

OrderedSemigroup opposite(OrderedSemigroup const& s) {
  auto const n = s.order();
  std::vector<Element> mult(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      mult[i * n + j] = s.mul(j, i);
    }
  }
  return {n, std::move(mult),
          std::vector<std::uint8_t>(s.leq_matrix().begin(),
                                    s.leq_matrix().end())};
}

}  // namespace ordsemi
