/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Finite abelian groups G = Z_{n_1} x ... x Z_{n_k}, their characters,
// subgroups, annihilators and canonical coset sections.
//
// Elements are addressed by a mixed-radix row-major flat index
//   idx(x) = sum_j x_j * prod_{l>j} n_l,
// which is a bijection onto [0, N). The dual group is identified with the
// same moduli tuple through the pairing
//   xi(x) = exp(2 pi i sum_j xi_j x_j / n_j),
// and a side tag keeps the two copies apart.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gablab/rational.hpp"

namespace gablab {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxOrder = 4096;
inline constexpr int kDefaultExhaustiveMaxOrder = 64;

/// Order cap honouring the GABLAB_MAX_ORDER environment variable.
[[nodiscard]] int max_order_from_env();

enum class Side : std::uint8_t { primal, dual };

[[nodiscard]] constexpr Side opposite(Side s) noexcept {
  return s == Side::primal ? Side::dual : Side::primal;
}
[[nodiscard]] const char* to_string(Side s) noexcept;

/// A group element as a residue tuple plus the side it lives on.
struct Elem {
  Side side = Side::primal;
  std::vector<int> residues;

  friend bool operator==(const Elem&, const Elem&) = default;
};

class GroupSpec {
 public:
  /// Validates moduli (nonempty, each >= 1, product <= max_order).
  static GroupSpec make(std::vector<int> moduli, int max_order = kDefaultMaxOrder);

  [[nodiscard]] std::span<const int> moduli() const noexcept;
  [[nodiscard]] int order() const noexcept;
  [[nodiscard]] int arity() const noexcept;

  [[nodiscard]] std::span<const int> residues(int index) const;
  [[nodiscard]] int index_of(std::span<const int> residues) const;
  [[nodiscard]] int index_of(const Elem& e) const { return index_of(e.residues); }
  /// index_of plus a side check.
  [[nodiscard]] int index_of(const Elem& e, Side expected) const;
  [[nodiscard]] Elem elem(Side side, int index) const;
  [[nodiscard]] Elem elem(Side side, std::vector<int> residues) const;

  [[nodiscard]] int add(int a, int b) const noexcept;
  [[nodiscard]] int sub(int a, int b) const noexcept;
  [[nodiscard]] int negate(int a) const noexcept;

  /// k in [0, N) with xi(x) = exp(2 pi i k / N); exact integer arithmetic.
  [[nodiscard]] int phase(int xi, int x) const noexcept;
  /// exp(2 pi i k / N), exact at multiples of N/4 and conjugate-symmetric.
  [[nodiscard]] Complex root(int k) const noexcept;
  [[nodiscard]] Complex pairing(int xi, int x) const noexcept { return root(phase(xi, x)); }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept;

 private:
  struct Impl;
  explicit GroupSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// The character xi evaluated at x. Requires xi dual and x primal.
[[nodiscard]] Complex pairing(const GroupSpec& g, const Elem& xi, const Elem& x);

class Subgroup {
 public:
  [[nodiscard]] static Subgroup trivial(const GroupSpec& g, Side side);
  [[nodiscard]] static Subgroup whole(const GroupSpec& g, Side side);
  /// Builds from a closed element set; generators are chosen greedily.
  [[nodiscard]] static Subgroup from_elements(const GroupSpec& g, Side side,
                                              std::vector<int> elements);

  [[nodiscard]] const GroupSpec& group() const noexcept;
  [[nodiscard]] Side side() const noexcept;
  [[nodiscard]] std::span<const Elem> generators() const noexcept;
  /// Sorted flat indices.
  [[nodiscard]] std::span<const int> elements() const noexcept;
  [[nodiscard]] int order() const noexcept;
  [[nodiscard]] bool contains(int index) const noexcept;
  [[nodiscard]] bool contains(const Elem& e) const;
  /// Position of a flat index inside elements(), or -1.
  [[nodiscard]] int position(int index) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept;

 private:
  friend Subgroup span_subgroup(const GroupSpec&, Side, const std::vector<Elem>&);
  struct Data;
  explicit Subgroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Smallest subgroup containing the generators.
[[nodiscard]] Subgroup span_subgroup(const GroupSpec& g, Side side,
                                     const std::vector<Elem>& generators);

/// {xi : xi(l) = 1 for all l in L} on the opposite side, by integer congruences.
[[nodiscard]] Subgroup annihilator(const Subgroup& l);

/// One representative per coset, each the minimal flat index of its coset.
struct Section {
  Subgroup subgroup;
  std::vector<int> reps;
};

[[nodiscard]] Section section(const Subgroup& l);

/// Indicator of a section as a flat-index mask of length N.
[[nodiscard]] std::vector<char> section_mask(const Section& s);

/// All subgroups, ordered by (order, lexicographic element list).
[[nodiscard]] std::vector<Subgroup> enumerate_subgroups(
    const GroupSpec& g, Side side, int exhaustive_cap = kDefaultExhaustiveMaxOrder);

/// Counting measure on G, counting measure scaled by 1/N on the dual.
struct MeasureConvention {
  [[nodiscard]] static Rational point_weight(const GroupSpec& g, Side side) {
    return side == Side::primal ? Rational{1} : Rational{1, g.order()};
  }
  /// Measure of a section of G/L (or of the dual quotient).
  [[nodiscard]] static Rational section_measure(const Subgroup& l) {
    return Rational{l.group().order() / l.order()} * point_weight(l.group(), l.side());
  }
};

}  // namespace gablab
