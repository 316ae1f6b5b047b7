// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "furst/finset.hpp"

namespace furst {

/// Group descriptors. Each one fixes an element type, the group operation,
/// identity and inverses; measures and systems are parameterized by them.
/// Descriptors compare equal iff they describe the same group, which is the
/// runtime compatibility check behind every "same group" precondition.

/// Finite subsets of the naturals under symmetric difference.
struct FinSetGroup {
  using Element = FinSet;
  static Element identity() { return {}; }
  static Element op(const Element& a, const Element& b) { return symdiff(a, b); }
  static Element inverse(const Element& a) { return a; }  // involutions
  friend bool operator==(const FinSetGroup&, const FinSetGroup&) = default;
  static std::string name() { return "finset"; }
};

/// The integers under addition.
struct IntegerGroup {
  using Element = std::int64_t;
  static Element identity() { return 0; }
  static Element op(Element a, Element b) { return a + b; }
  static Element inverse(Element a) { return -a; }
  friend bool operator==(const IntegerGroup&, const IntegerGroup&) = default;
  static std::string name() { return "integer"; }
};

/// The integers modulo n.
class CyclicGroup {
 public:
  using Element = std::uint32_t;

  explicit CyclicGroup(std::uint32_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CyclicGroup: modulus must be >= 1");
  }

  std::uint32_t modulus() const { return n_; }
  Element identity() const { return 0; }
  Element op(Element a, Element b) const { return (a + b) % n_; }
  Element inverse(Element a) const { return a == 0 ? 0 : n_ - a; }
  bool contains(Element a) const { return a < n_; }

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
  std::string name() const { return "cyclic(" + std::to_string(n_) + ")"; }

 private:
  std::uint32_t n_;
};

/// A permutation of {0, ..., degree-1}, stored as its value table.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::uint32_t v : map_) {
      if (v >= map_.size() || seen[v])
        throw std::invalid_argument("Permutation: value table is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<std::uint32_t> m(degree);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
  }

  std::size_t degree() const { return map_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return map_.at(x); }

  /// Composition (a * b)(x) = a(b(x)).
  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::uint32_t> m(a.degree());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = a.map_[b.map_[x]];
    Permutation r;
    r.map_ = std::move(m);
    return r;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> m(map_.size());
    for (std::uint32_t x = 0; x < map_.size(); ++x) m[map_[x]] = x;
    Permutation r;
    r.map_ = std::move(m);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<std::uint32_t> map_;
};

/// The symmetric group on a fixed number of points. Concrete stand-in for an
/// explicit finite group: every finite group embeds, and elements act on
/// states directly by their value tables.
class PermutationGroup {
 public:
  using Element = Permutation;

  explicit PermutationGroup(std::size_t degree) : degree_(degree) {
    if (degree < 1)
      throw std::invalid_argument("PermutationGroup: degree must be >= 1");
  }

  std::size_t degree() const { return degree_; }
  Element identity() const { return Permutation::identity(degree_); }
  Element op(const Element& a, const Element& b) const { return compose(a, b); }
  Element inverse(const Element& a) const { return a.inverse(); }

  friend bool operator==(const PermutationGroup&, const PermutationGroup&) = default;
  std::string name() const { return "perm(" + std::to_string(degree_) + ")"; }

 private:
  std::size_t degree_;
};

}  // namespace furst
