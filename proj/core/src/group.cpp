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

#include "gablab/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <string>

#include "gablab/error.hpp"

namespace gablab {

int max_order_from_env() {
  if (const char* raw = std::getenv("GABLAB_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0 && v <= (1L << 24)) return static_cast<int>(v);
  }
  return kDefaultMaxOrder;
}

const char* to_string(Side s) noexcept { return s == Side::primal ? "primal" : "dual"; }

struct GroupSpec::Impl {
  std::vector<int> moduli;
  std::vector<int> strides;
  std::vector<int> weights;  // N / n_j
  std::vector<int> residue_table;
  std::vector<Complex> roots;
  int order = 1;
};

GroupSpec GroupSpec::make(std::vector<int> moduli, int max_order) {
  if (moduli.empty()) throw Error(Errc::empty_moduli, "a group needs at least one cyclic factor");
  std::int64_t order = 1;
  for (int n : moduli) {
    if (n < 1) throw Error(Errc::nonpositive_modulus, "modulus " + std::to_string(n));
    order *= n;
    if (order > max_order) {
      throw Error(Errc::order_cap_exceeded,
                  "order exceeds cap " + std::to_string(max_order));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->moduli = std::move(moduli);
  impl->order = static_cast<int>(order);
  const int k = static_cast<int>(impl->moduli.size());
  const int n_total = impl->order;

  impl->strides.assign(k, 1);
  for (int j = k - 2; j >= 0; --j) impl->strides[j] = impl->strides[j + 1] * impl->moduli[j + 1];
  impl->weights.resize(k);
  for (int j = 0; j < k; ++j) impl->weights[j] = n_total / impl->moduli[j];

  impl->residue_table.resize(static_cast<std::size_t>(n_total) * k);
  for (int idx = 0; idx < n_total; ++idx) {
    for (int j = 0; j < k; ++j) {
      impl->residue_table[static_cast<std::size_t>(idx) * k + j] =
          (idx / impl->strides[j]) % impl->moduli[j];
    }
  }

  impl->roots.resize(n_total);
  for (int q = 0; q < n_total; ++q) {
    if ((4LL * q) % n_total == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      impl->roots[q] = quarter[(4LL * q / n_total) % 4];
    } else if (2 * q < n_total) {
      const double angle = 2.0 * std::numbers::pi * q / n_total;
      impl->roots[q] = {std::cos(angle), std::sin(angle)};
    } else {
      impl->roots[q] = std::conj(impl->roots[n_total - q]);
    }
  }
  return GroupSpec(std::move(impl));
}

std::span<const int> GroupSpec::moduli() const noexcept { return impl_->moduli; }
int GroupSpec::order() const noexcept { return impl_->order; }
int GroupSpec::arity() const noexcept { return static_cast<int>(impl_->moduli.size()); }

std::span<const int> GroupSpec::residues(int index) const {
  if (index < 0 || index >= impl_->order) throw Error(Errc::foreign_element, "flat index out of range");
  const auto k = static_cast<std::size_t>(arity());
  return {impl_->residue_table.data() + static_cast<std::size_t>(index) * k, k};
}

int GroupSpec::index_of(std::span<const int> residues) const {
  if (static_cast<int>(residues.size()) != arity()) {
    throw Error(Errc::arity_mismatch, "expected " + std::to_string(arity()) + " residues, got " +
                                          std::to_string(residues.size()));
  }
  int idx = 0;
  for (int j = 0; j < arity(); ++j) {
    const int r = residues[j];
    if (r < 0 || r >= impl_->moduli[j]) {
      throw Error(Errc::foreign_element, "residue " + std::to_string(r) + " outside Z_" +
                                             std::to_string(impl_->moduli[j]));
    }
    idx += r * impl_->strides[j];
  }
  return idx;
}

int GroupSpec::index_of(const Elem& e, Side expected) const {
  if (e.side != expected) {
    throw Error(Errc::side_mismatch, std::string("expected a ") + to_string(expected) + " element");
  }
  return index_of(e.residues);
}

Elem GroupSpec::elem(Side side, int index) const {
  auto r = residues(index);
  return {side, std::vector<int>(r.begin(), r.end())};
}

Elem GroupSpec::elem(Side side, std::vector<int> residues) const {
  (void)index_of(residues);
  return {side, std::move(residues)};
}

int GroupSpec::add(int a, int b) const noexcept {
  const int k = arity();
  const int* ra = impl_->residue_table.data() + static_cast<std::size_t>(a) * k;
  const int* rb = impl_->residue_table.data() + static_cast<std::size_t>(b) * k;
  int idx = 0;
  for (int j = 0; j < k; ++j) {
    int s = ra[j] + rb[j];
    if (s >= impl_->moduli[j]) s -= impl_->moduli[j];
    idx += s * impl_->strides[j];
  }
  return idx;
}

int GroupSpec::negate(int a) const noexcept {
  const int k = arity();
  const int* ra = impl_->residue_table.data() + static_cast<std::size_t>(a) * k;
  int idx = 0;
  for (int j = 0; j < k; ++j) {
    const int s = ra[j] == 0 ? 0 : impl_->moduli[j] - ra[j];
    idx += s * impl_->strides[j];
  }
  return idx;
}

int GroupSpec::sub(int a, int b) const noexcept { return add(a, negate(b)); }

int GroupSpec::phase(int xi, int x) const noexcept {
  const int k = arity();
  const int* rx = impl_->residue_table.data() + static_cast<std::size_t>(xi) * k;
  const int* ry = impl_->residue_table.data() + static_cast<std::size_t>(x) * k;
  std::int64_t acc = 0;
  for (int j = 0; j < k; ++j) {
    acc += static_cast<std::int64_t>(rx[j]) * ry[j] % impl_->moduli[j] * impl_->weights[j];
  }
  return static_cast<int>(acc % impl_->order);
}

Complex GroupSpec::root(int k) const noexcept { return impl_->roots[k]; }

bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
  return a.impl_ == b.impl_ || a.impl_->moduli == b.impl_->moduli;
}

Complex pairing(const GroupSpec& g, const Elem& xi, const Elem& x) {
  const int i = g.index_of(xi, Side::dual);
  const int j = g.index_of(x, Side::primal);
  return g.pairing(i, j);
}

// --- subgroups -------------------------------------------------------------

struct Subgroup::Data {
  GroupSpec group;
  Side side;
  std::vector<Elem> generators;
  std::vector<int> elements;
  std::vector<int> positions;  // flat index -> position in elements, or -1
};

namespace {

// <base, x> as the union of cosets base + m x.
std::vector<int> extend_closure(const GroupSpec& g, const std::vector<int>& base,
                                const std::vector<char>& in_base, int x) {
  std::vector<int> out = base;
  int shift = x;
  while (!in_base[shift]) {
    for (int h : base) out.push_back(g.add(h, shift));
    shift = g.add(shift, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> mask_of(int n, const std::vector<int>& elements) {
  std::vector<char> m(n, 0);
  for (int e : elements) m[e] = 1;
  return m;
}

}  // namespace

Subgroup Subgroup::from_elements(const GroupSpec& g, Side side, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = g.order();
  const auto target = mask_of(n, elements);
  if (elements.empty() || elements.front() != 0) {
    throw Error(Errc::foreign_element, "element set does not contain zero");
  }

  // Greedy generating set: scan ascending, keep anything not yet spanned.
  std::vector<Elem> gens;
  std::vector<int> span{0};
  auto spanned = mask_of(n, span);
  for (int e : elements) {
    if (e < 0 || e >= n) throw Error(Errc::foreign_element, "flat index out of range");
    if (spanned[e]) continue;
    span = extend_closure(g, span, spanned, e);
    spanned = mask_of(n, span);
    gens.push_back(g.elem(side, e));
  }
  if (span != elements) throw Error(Errc::foreign_element, "element set is not a subgroup");

  auto d = std::make_shared<Data>(Data{g, side, std::move(gens), std::move(elements), {}});
  d->positions.assign(n, -1);
  for (int p = 0; p < static_cast<int>(d->elements.size()); ++p) d->positions[d->elements[p]] = p;
  return Subgroup(std::move(d));
}

Subgroup Subgroup::trivial(const GroupSpec& g, Side side) { return from_elements(g, side, {0}); }

Subgroup Subgroup::whole(const GroupSpec& g, Side side) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return from_elements(g, side, std::move(all));
}

const GroupSpec& Subgroup::group() const noexcept { return d_->group; }
Side Subgroup::side() const noexcept { return d_->side; }
std::span<const Elem> Subgroup::generators() const noexcept { return d_->generators; }
std::span<const int> Subgroup::elements() const noexcept { return d_->elements; }
int Subgroup::order() const noexcept { return static_cast<int>(d_->elements.size()); }
bool Subgroup::contains(int index) const noexcept {
  return index >= 0 && index < group().order() && d_->positions[index] >= 0;
}
bool Subgroup::contains(const Elem& e) const { return contains(group().index_of(e, side())); }
int Subgroup::position(int index) const noexcept {
  return (index >= 0 && index < group().order()) ? d_->positions[index] : -1;
}

bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
  return a.group() == b.group() && a.side() == b.side() && a.d_->elements == b.d_->elements;
}

Subgroup span_subgroup(const GroupSpec& g, Side side, const std::vector<Elem>& generators) {
  const int n = g.order();
  std::vector<int> span{0};
  auto spanned = mask_of(n, span);
  for (const auto& gen : generators) {
    const int x = g.index_of(gen, side);
    if (spanned[x]) continue;
    span = extend_closure(g, span, spanned, x);
    spanned = mask_of(n, span);
  }
  auto d = std::make_shared<Subgroup::Data>(Subgroup::Data{g, side, generators, std::move(span), {}});
  d->positions.assign(n, -1);
  for (int p = 0; p < static_cast<int>(d->elements.size()); ++p) d->positions[d->elements[p]] = p;
  return Subgroup(std::move(d));
}

Subgroup annihilator(const Subgroup& l) {
  const auto& g = l.group();
  std::vector<int> gens;
  for (const auto& e : l.generators()) gens.push_back(g.index_of(e));
  std::vector<int> out;
  for (int xi = 0; xi < g.order(); ++xi) {
    const bool trivial_on_l =
        std::all_of(gens.begin(), gens.end(), [&](int x) { return g.phase(xi, x) == 0; });
    if (trivial_on_l) out.push_back(xi);
  }
  return Subgroup::from_elements(g, opposite(l.side()), std::move(out));
}

Section section(const Subgroup& l) {
  const auto& g = l.group();
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  reps.reserve(g.order() / l.order());
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int h : l.elements()) covered[g.add(x, h)] = 1;
  }
  return {l, std::move(reps)};
}

std::vector<char> section_mask(const Section& s) {
  std::vector<char> m(s.subgroup.group().order(), 0);
  for (int r : s.reps) m[r] = 1;
  return m;
}

std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g, Side side, int exhaustive_cap) {
  const int n = g.order();
  if (n > exhaustive_cap) {
    throw Error(Errc::order_cap_exceeded,
                "subgroup enumeration limited to order " + std::to_string(exhaustive_cap));
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto base = queue[head];
    const auto in_base = mask_of(n, base);
    // Only minimal coset representatives give new extensions.
    std::vector<char> covered = in_base;
    for (int x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (int h : base) covered[g.add(x, h)] = 1;
      auto ext = extend_closure(g, base, in_base, x);
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
  }

  std::vector<std::vector<int>> all(seen.begin(), seen.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (auto& els : all) out.push_back(Subgroup::from_elements(g, side, std::move(els)));
  return out;
}

}  // namespace gablab
