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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

#include "gablab/group.hpp"
#include "oracles/group_oracle.hpp"
#include "test_util.hpp"

using namespace gablab;
using testutil::expect_errc;
using testutil::to_vector;

namespace {

std::set<int> as_set(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }

}  // namespace

TEST(GroupSpec, Orders) {
  EXPECT_EQ(GroupSpec::make({4}).order(), 4);
  EXPECT_EQ(GroupSpec::make({2, 3}).order(), 6);
  const GroupSpec trivial = GroupSpec::make({1});
  EXPECT_EQ(trivial.order(), 1);
  EXPECT_EQ(to_vector(trivial.residues(0)), std::vector<int>{0});
}

TEST(GroupSpec, InputErrorsAreDistinct) {
  expect_errc(Errc::empty_moduli, [] { (void)GroupSpec::make({}); });
  expect_errc(Errc::nonpositive_modulus, [] { (void)GroupSpec::make({0}); });
  expect_errc(Errc::nonpositive_modulus, [] { (void)GroupSpec::make({3, -2}); });
  expect_errc(Errc::order_cap_exceeded, [] { (void)GroupSpec::make({64, 65}); });
  expect_errc(Errc::order_cap_exceeded, [] { (void)GroupSpec::make({10}, 9); });
  EXPECT_NO_THROW((void)GroupSpec::make({64, 64}));
}

TEST(GroupSpec, OrderCapFromEnvironment) {
  ::setenv("GABLAB_MAX_ORDER", "100", 1);
  EXPECT_EQ(max_order_from_env(), 100);
  ::setenv("GABLAB_MAX_ORDER", "garbage", 1);
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
  ::unsetenv("GABLAB_MAX_ORDER");
  EXPECT_EQ(max_order_from_env(), kDefaultMaxOrder);
}

TEST(GroupSpec, MixedRadixIndexIsBijective) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (int i = 0; i < g.order(); ++i) {
      const auto r = to_vector(g.residues(i));
      EXPECT_EQ(oracle::index_of(mods, r), i);
      EXPECT_EQ(g.index_of(r), i);
    }
  }
}

TEST(GroupSpec, ArithmeticMatchesOracle) {
  const std::vector<int> mods = {4, 3};
  const GroupSpec g = GroupSpec::make(mods);
  for (int a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.negate(a), oracle::neg(mods, a));
    EXPECT_EQ(g.add(a, g.negate(a)), 0);
    for (int b = 0; b < g.order(); ++b) {
      EXPECT_EQ(g.add(a, b), oracle::add(mods, a, b));
      EXPECT_EQ(g.sub(a, b), oracle::add(mods, a, oracle::neg(mods, b)));
    }
  }
}

TEST(GroupSpec, ElementValidation) {
  const GroupSpec g = GroupSpec::make({4, 3});
  expect_errc(Errc::arity_mismatch, [&] { (void)g.elem(Side::primal, std::vector<int>{1}); });
  expect_errc(Errc::foreign_element, [&] { (void)g.elem(Side::primal, std::vector<int>{4, 0}); });
  expect_errc(Errc::foreign_element, [&] { (void)g.elem(Side::primal, std::vector<int>{0, -1}); });
  expect_errc(Errc::foreign_element, [&] { (void)g.residues(12); });
  expect_errc(Errc::side_mismatch, [&] { (void)g.index_of(g.elem(Side::dual, 1), Side::primal); });
}

TEST(Pairing, Examples) {
  const GroupSpec z4 = GroupSpec::make({4});
  const Complex m1 = pairing(z4, z4.elem(Side::dual, 1), z4.elem(Side::primal, 2));
  EXPECT_EQ(m1, Complex(-1.0, 0.0));
  const GroupSpec z6 = GroupSpec::make({6});
  const Complex w = pairing(z6, z6.elem(Side::dual, 1), z6.elem(Side::primal, 1));
  EXPECT_NEAR(std::abs(w - std::polar(1.0, std::numbers::pi / 3)), 0.0, 1e-15);
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(g.pairing(0, x), Complex(1.0, 0.0));
  }
}

TEST(Pairing, Errors) {
  const GroupSpec g = GroupSpec::make({4});
  expect_errc(Errc::side_mismatch,
              [&] { (void)pairing(g, g.elem(Side::primal, 1), g.elem(Side::primal, 1)); });
  expect_errc(Errc::side_mismatch,
              [&] { (void)pairing(g, g.elem(Side::dual, 1), g.elem(Side::dual, 1)); });
  expect_errc(Errc::arity_mismatch,
              [&] { (void)pairing(g, Elem{Side::dual, {1, 0}}, g.elem(Side::primal, 1)); });
}

TEST(Pairing, MatchesPolarOracleAndIsUnimodular) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (int xi = 0; xi < g.order(); ++xi) {
      for (int x = 0; x < g.order(); ++x) {
        const Complex v = g.pairing(xi, x);
        EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
        EXPECT_NEAR(std::abs(v - oracle::pairing(mods, xi, x)), 0.0, 1e-13);
        EXPECT_EQ(g.pairing(xi, g.negate(x)), std::conj(v));
      }
    }
  }
}

TEST(Pairing, CharacterHomomorphism) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int x = 0; x < g.order(); ++x)
          EXPECT_LE(std::abs(g.pairing(g.add(a, b), x) - g.pairing(a, x) * g.pairing(b, x)), 1e-14);
  }
}

TEST(Subgroup, SpanExamples) {
  const GroupSpec z4 = GroupSpec::make({4});
  EXPECT_EQ(as_set(span_subgroup(z4, Side::primal, {})), (std::set<int>{0}));
  EXPECT_EQ(as_set(span_subgroup(z4, Side::primal, {z4.elem(Side::primal, 2)})), (std::set<int>{0, 2}));

  const std::vector<int> mods = {6, 2};
  const GroupSpec g = GroupSpec::make(mods);
  const Subgroup s = span_subgroup(g, Side::primal,
                                   {g.elem(Side::primal, {2, 0}), g.elem(Side::primal, {0, 1})});
  EXPECT_EQ(s.order(), 6);
  const std::set<int> brute = oracle::closure(mods, {g.index_of(std::vector<int>{2, 0}),
                                                      g.index_of(std::vector<int>{0, 1})});
  EXPECT_EQ(as_set(s), brute);
}

TEST(Subgroup, SpanRejectsForeignElements) {
  const GroupSpec g = GroupSpec::make({4});
  expect_errc(Errc::foreign_element, [&] {
    (void)span_subgroup(g, Side::primal, {Elem{Side::primal, {7}}});
  });
  expect_errc(Errc::side_mismatch, [&] {
    (void)span_subgroup(g, Side::primal, {g.elem(Side::dual, 1)});
  });
}

TEST(Subgroup, FromElementsValidatesClosure) {
  const GroupSpec g = GroupSpec::make({6});
  const Subgroup s = Subgroup::from_elements(g, Side::dual, {0, 2, 4});
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.side(), Side::dual);
  EXPECT_EQ(s, span_subgroup(g, Side::dual, {g.elem(Side::dual, 2)}));
  expect_errc(Errc::foreign_element, [&] { (void)Subgroup::from_elements(g, Side::primal, {0, 1}); });
  expect_errc(Errc::foreign_element, [&] { (void)Subgroup::from_elements(g, Side::primal, {2, 4}); });
}

TEST(Subgroup, LagrangeAndClosureInvariants) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (const Subgroup& s : enumerate_subgroups(g, Side::primal)) {
      EXPECT_EQ(g.order() % s.order(), 0);
      EXPECT_TRUE(s.contains(0));
      EXPECT_TRUE(std::is_sorted(s.elements().begin(), s.elements().end()));
      for (int a : s.elements()) {
        EXPECT_TRUE(s.contains(g.negate(a)));
        for (int b : s.elements()) EXPECT_TRUE(s.contains(g.add(a, b)));
      }
    }
  }
}

TEST(Annihilator, Examples) {
  const GroupSpec z4 = GroupSpec::make({4});
  const Subgroup l = span_subgroup(z4, Side::primal, {z4.elem(Side::primal, 2)});
  const Subgroup perp = annihilator(l);
  EXPECT_EQ(perp.side(), Side::dual);
  EXPECT_EQ(as_set(perp), (std::set<int>{0, 2}));
  EXPECT_EQ(annihilator(Subgroup::trivial(z4, Side::primal)), Subgroup::whole(z4, Side::dual));
  EXPECT_EQ(annihilator(Subgroup::whole(z4, Side::primal)), Subgroup::trivial(z4, Side::dual));
}

TEST(Annihilator, DualityUpToOrder64) {
  const std::vector<std::vector<int>> groups = {
      {12}, {16}, {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2}, {6, 6}, {3, 9}, {2, 3, 5}, {64}, {4, 4, 4}, {8, 8}};
  for (const auto& mods : groups) {
    const GroupSpec g = GroupSpec::make(mods);
    for (Side side : {Side::primal, Side::dual}) {
      for (const Subgroup& l : enumerate_subgroups(g, side)) {
        const Subgroup perp = annihilator(l);
        EXPECT_EQ(perp.side(), opposite(side));
        EXPECT_EQ(l.order() * perp.order(), g.order());
        EXPECT_EQ(annihilator(perp), l);
      }
    }
  }
}

TEST(Annihilator, MatchesFloatingOracle) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal)) {
      EXPECT_EQ(as_set(annihilator(l)), oracle::annihilator(mods, as_set(l)));
    }
  }
}

TEST(Section, Examples) {
  const GroupSpec z4 = GroupSpec::make({4});
  const Section s = section(span_subgroup(z4, Side::primal, {z4.elem(Side::primal, 2)}));
  EXPECT_EQ(s.reps, (std::vector<int>{0, 1}));
  EXPECT_EQ(section(Subgroup::whole(z4, Side::primal)).reps, std::vector<int>{0});

  const GroupSpec k = GroupSpec::make({2, 2});
  const Section d = section(span_subgroup(k, Side::primal, {k.elem(Side::primal, {1, 1})}));
  std::vector<std::vector<int>> reps;
  for (int r : d.reps) reps.push_back(to_vector(k.residues(r)));
  EXPECT_EQ(reps, (std::vector<std::vector<int>>{{0, 0}, {0, 1}}));
}

TEST(Section, PartitionAndMinimality) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal)) {
      const Section s = section(l);
      ASSERT_EQ(static_cast<int>(s.reps.size()), g.order() / l.order());
      std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
      for (int r : s.reps) {
        for (int e : l.elements()) {
          const int x = g.add(r, e);
          ++hits[static_cast<std::size_t>(x)];
          EXPECT_LE(r, x) << "representative is not the coset minimum";
        }
      }
      for (int h : hits) EXPECT_EQ(h, 1);
      const std::vector<char> mask = section_mask(s);
      EXPECT_EQ(std::count(mask.begin(), mask.end(), 1), static_cast<long>(s.reps.size()));
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_subgroups(GroupSpec::make({7}), Side::primal).size(), 2u);
  EXPECT_EQ(enumerate_subgroups(GroupSpec::make({4}), Side::primal).size(), 3u);
  EXPECT_EQ(enumerate_subgroups(GroupSpec::make({2, 2}), Side::primal).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(GroupSpec::make({1}), Side::dual).size(), 1u);
  expect_errc(Errc::order_cap_exceeded,
              [] { (void)enumerate_subgroups(GroupSpec::make({65}), Side::primal); });
  EXPECT_EQ(enumerate_subgroups(GroupSpec::make({65}), Side::primal, 100).size(), 4u);
}

TEST(Enumerate, MatchesBruteForceSubsetClosure) {
  const std::vector<std::vector<int>> groups = {{1}, {2}, {4}, {6}, {8}, {12}, {2, 2}, {2, 4},
                                                {3, 3}, {2, 2, 2}, {2, 6}, {4, 4}, {2, 2, 2, 2}};
  for (const auto& mods : groups) {
    const GroupSpec g = GroupSpec::make(mods);
    std::set<std::set<int>> mine;
    for (const Subgroup& s : enumerate_subgroups(g, Side::primal)) mine.insert(as_set(s));
    const auto brute = oracle::all_subgroups(mods);
    EXPECT_EQ(mine, std::set<std::set<int>>(brute.begin(), brute.end()))
        << "moduli size " << mods.size() << " order " << g.order();
  }
}

TEST(Enumerate, DeterministicOrdering) {
  const GroupSpec g = GroupSpec::make({2, 4});
  const auto subs = enumerate_subgroups(g, Side::primal);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const auto a = to_vector(subs[i - 1].elements());
    const auto b = to_vector(subs[i].elements());
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
  EXPECT_EQ(subs.size(), 8u);
}

TEST(Properties, WeilFormula) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    std::vector<long> f(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) f[static_cast<std::size_t>(x)] = (x * 7919L) % 101 - 50;
    long total = 0;
    for (long v : f) total += v;
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal)) {
      long folded = 0;
      for (int r : section(l).reps)
        for (int e : l.elements()) folded += f[static_cast<std::size_t>(g.add(r, e))];
      EXPECT_EQ(folded, total);
    }
  }
}

TEST(Properties, RestrictedCharacterOrthogonality) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    for (const Subgroup& gamma : enumerate_subgroups(g, Side::dual)) {
      const Section s = section(annihilator(gamma));
      for (int a : gamma.elements()) {
        for (int b : gamma.elements()) {
          if (a == b) continue;
          Complex sum = 0.0;
          for (int x : s.reps) sum += g.pairing(g.sub(a, b), x);
          EXPECT_LE(std::abs(sum), 1e-12);
        }
      }
    }
  }
}

TEST(Properties, MeasureConventionReciprocity) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    EXPECT_EQ(MeasureConvention::point_weight(g, Side::primal), Rational(1));
    EXPECT_EQ(MeasureConvention::point_weight(g, Side::dual), Rational(1, g.order()));
    for (const Subgroup& gamma : enumerate_subgroups(g, Side::dual)) {
      EXPECT_EQ(MeasureConvention::section_measure(gamma) *
                    MeasureConvention::section_measure(annihilator(gamma)),
                Rational(1));
    }
  }
}
