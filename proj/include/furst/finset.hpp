// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace furst {

/// A finite subset of the naturals {1, 2, 3, ...}, the element type of the
/// abelian group of finite subsets under symmetric difference. Every
/// nonidentity element is an involution: symdiff(T, T) is empty.
///
/// Elements 1..64 live in a bitmask; anything larger spills into a sorted
/// vector, so sets are exact and unbounded.
class FinSet {
 public:
  FinSet() = default;

  explicit FinSet(std::vector<std::uint32_t> elements) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const std::uint32_t e = elements[i];
      if (e == 0) throw std::invalid_argument("FinSet: elements must be >= 1");
      if (i > 0 && elements[i - 1] == e)
        throw std::invalid_argument("FinSet: duplicate element");
      if (e <= 64)
        mask_ |= std::uint64_t{1} << (e - 1);
      else
        big_.push_back(e);
    }
  }

  FinSet(std::initializer_list<std::uint32_t> elements)
      : FinSet(std::vector<std::uint32_t>(elements)) {}

  bool empty() const { return mask_ == 0 && big_.empty(); }

  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_)) + big_.size();
  }

  /// Largest element; 0 for the empty set.
  std::uint32_t max() const {
    if (!big_.empty()) return big_.back();
    return static_cast<std::uint32_t>(std::bit_width(mask_));
  }

  bool contains(std::uint32_t e) const {
    if (e == 0) return false;
    if (e <= 64) return (mask_ >> (e - 1)) & 1;
    return std::binary_search(big_.begin(), big_.end(), e);
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    std::uint64_t m = mask_;
    while (m != 0) {
      out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)) + 1);
      m &= m - 1;
    }
    out.insert(out.end(), big_.begin(), big_.end());
    return out;
  }

  friend FinSet symdiff(const FinSet& a, const FinSet& b) {
    FinSet r;
    r.mask_ = a.mask_ ^ b.mask_;
    std::set_symmetric_difference(a.big_.begin(), a.big_.end(), b.big_.begin(),
                                  b.big_.end(), std::back_inserter(r.big_));
    return r;
  }

  friend bool operator==(const FinSet&, const FinSet&) = default;

  /// Total order for canonical atom storage; not subset inclusion.
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) {
    if (auto c = a.mask_ <=> b.mask_; c != 0) return c;
    return a.big_ <=> b.big_;
  }

  class const_iterator {
   public:
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    const_iterator(std::uint64_t mask, const std::vector<std::uint32_t>* big,
                   std::size_t big_pos)
        : mask_(mask), big_(big), big_pos_(big_pos) {}

    std::uint32_t operator*() const {
      if (mask_ != 0) return static_cast<std::uint32_t>(std::countr_zero(mask_)) + 1;
      return (*big_)[big_pos_];
    }
    const_iterator& operator++() {
      if (mask_ != 0)
        mask_ &= mask_ - 1;
      else
        ++big_pos_;
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.mask_ == b.mask_ && a.big_pos_ == b.big_pos_;
    }

   private:
    std::uint64_t mask_ = 0;
    const std::vector<std::uint32_t>* big_ = nullptr;
    std::size_t big_pos_ = 0;
  };

  const_iterator begin() const { return {mask_, &big_, 0}; }
  const_iterator end() const { return {0, &big_, big_.size()}; }

  friend std::ostream& operator<<(std::ostream& os, const FinSet& s) {
    os << '{';
    bool first = true;
    for (std::uint32_t e : s) {
      if (!first) os << ',';
      os << e;
      first = false;
    }
    return os << '}';
  }

 private:
  std::uint64_t mask_ = 0;
  std::vector<std::uint32_t> big_;  // sorted, elements > 64 only
};

/// (|T|, max(T)); (0, 0) for the empty set.
inline std::pair<std::size_t, std::uint32_t> size_and_max(const FinSet& t) {
  return {t.size(), t.max()};
}

}  // namespace furst
