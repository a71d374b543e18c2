#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordsemi {

/// Carrier index.
using Element = std::uint8_t;

constexpr std::size_t kMaxOrder = 64;

/// A subset of the carrier {0, ..., n-1}, stored as a bit mask.
class ElementSubset {
 public:
  constexpr ElementSubset() noexcept = default;
  constexpr ElementSubset(std::size_t universe, std::uint64_t bits) noexcept
      : bits_(bits & mask_for(universe)), universe_(universe) {}
  ElementSubset(std::size_t universe, std::initializer_list<Element> elems)
      : universe_(universe) {
    for (Element e : elems) {
      bits_ |= std::uint64_t{1} << e;
    }
    bits_ &= mask_for(universe);
  }

  static constexpr ElementSubset empty(std::size_t universe) noexcept {
    return {universe, 0};
  }
  static constexpr ElementSubset full(std::size_t universe) noexcept {
    return {universe, ~std::uint64_t{0}};
  }
  static constexpr ElementSubset singleton(std::size_t universe,
                                           Element a) noexcept {
    return {universe, std::uint64_t{1} << a};
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr std::size_t universe() const noexcept { return universe_; }

  constexpr bool contains(Element a) const noexcept {
    return (bits_ >> a) & 1U;
  }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool is_subset_of(ElementSubset other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElementSubset& insert(Element a) noexcept {
    bits_ |= std::uint64_t{1} << a;
    return *this;
  }
  constexpr ElementSubset& operator|=(ElementSubset o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSubset& operator&=(ElementSubset o) noexcept {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr ElementSubset operator|(ElementSubset a,
                                           ElementSubset b) noexcept {
    return a |= b;
  }
  friend constexpr ElementSubset operator&(ElementSubset a,
                                           ElementSubset b) noexcept {
    return a &= b;
  }

  /// Members in increasing order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(ElementSubset,
                                   ElementSubset) noexcept = default;

 private:
  static constexpr std::uint64_t mask_for(std::size_t n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::uint64_t bits_ = 0;
  std::size_t universe_ = 0;
};

/// Calls f(e) for each member of x in increasing order.
template <typename F>
constexpr void for_each_element(ElementSubset x, F&& f) {
  for (std::uint64_t b = x.bits(); b != 0; b &= b - 1) {
    f(static_cast<Element>(std::countr_zero(b)));
  }
}

}  // namespace ordsemi
