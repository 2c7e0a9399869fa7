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

#include "gablab/gabor.hpp"
#include "gablab/spectral.hpp"
#include "oracles/group_oracle.hpp"
#include "oracles/linalg_oracle.hpp"
#include "test_util.hpp"

using namespace gablab;
using testutil::expect_errc;
using testutil::random_window;

namespace {

struct Z2Full {
  GroupSpec g = GroupSpec::make({2});
  GaborSystem sys{Window::delta(g, 0), Subgroup::whole(g, Side::primal), Subgroup::whole(g, Side::dual)};
};

CVector vec(std::initializer_list<Complex> v) {
  CVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Complex z : v) out[i++] = z;
  return out;
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

}  // namespace

TEST(Window, LengthMustMatchGroup) {
  const GroupSpec g = GroupSpec::make({3});
  expect_errc(Errc::size_mismatch, [&] { Window(g, CVector::Zero(4)); });
  EXPECT_EQ(Window::zero(g).norm(), 0.0);
  const std::vector<int> support = {0, 2};
  EXPECT_EQ(Window::indicator(g, support).values(), vec({1.0, 0.0, 1.0}));
}

TEST(Translate, Examples) {
  const GroupSpec z4 = GroupSpec::make({4});
  const Window f = random_window(z4, 1);
  EXPECT_EQ(translate(f, z4.elem(Side::primal, 0)).values(), f.values());
  EXPECT_EQ(translate(Window::delta(z4, 0), z4.elem(Side::primal, 1)).values(),
            Window::delta(z4, 1).values());

  const GroupSpec k = GroupSpec::make({2, 2});
  const Window h = random_window(k, 2);
  for (int u = 0; u < 4; ++u) {
    const Elem e = k.elem(Side::primal, u);
    EXPECT_EQ(translate(translate(h, e), e).values(), h.values());
    EXPECT_NEAR(translate(h, e).norm(), h.norm(), 1e-15 * h.norm());
  }
  expect_errc(Errc::side_mismatch, [&] { (void)translate(f, z4.elem(Side::dual, 1)); });
  expect_errc(Errc::arity_mismatch, [&] { (void)translate(f, Elem{Side::primal, {1, 1}}); });
}

TEST(Modulate, Examples) {
  const GroupSpec z2 = GroupSpec::make({2});
  const Window ones(z2, vec({1.0, 1.0}));
  EXPECT_EQ(modulate(ones, z2.elem(Side::dual, 1)).values(), vec({1.0, -1.0}));
  EXPECT_EQ(modulate(ones, z2.elem(Side::dual, 0)).values(), ones.values());

  const GroupSpec g = GroupSpec::make({3, 4});
  const Window f = random_window(g, 3);
  for (int xi = 0; xi < g.order(); ++xi) {
    const Window m = modulate(f, g.elem(Side::dual, xi));
    EXPECT_LE(std::abs(m.norm() - f.norm()), 1e-14 * f.norm());
    for (int x = 0; x < g.order(); ++x) EXPECT_NEAR(std::abs(m[x]), std::abs(f[x]), 1e-15);
  }
  expect_errc(Errc::side_mismatch, [&] { (void)modulate(f, g.elem(Side::primal, 1)); });
}

TEST(CommutationDefect, Examples) {
  const GroupSpec z4 = GroupSpec::make({4});
  const Window f = random_window(z4, 4);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(commutation_defect(z4.elem(Side::primal, 0), z4.elem(Side::dual, k), f), 0.0);
    EXPECT_EQ(commutation_defect(z4.elem(Side::primal, k), z4.elem(Side::dual, 0), f), 0.0);
  }
  EXPECT_LE(commutation_defect(z4.elem(Side::primal, 1), z4.elem(Side::dual, 1), Window::delta(z4, 0)),
            1e-13);
}

TEST(CommutationDefect, RandomTrials) {
  const GroupSpec g = GroupSpec::make({4, 3});
  Xorshift64Star rng(5);
  for (int t = 0; t < 100; ++t) {
    const Window f = random_window(g, 1000 + static_cast<std::uint64_t>(t));
    const Elem l = g.elem(Side::primal, rng.integer(0, g.order() - 1));
    const Elem c = g.elem(Side::dual, rng.integer(0, g.order() - 1));
    EXPECT_LE(commutation_defect(l, c, f), 1e-13 * f.norm());
  }
}

TEST(GaborSystem, Validation) {
  const GroupSpec g = GroupSpec::make({4});
  const GroupSpec h = GroupSpec::make({5});
  const Window w = Window::delta(g);
  expect_errc(Errc::side_mismatch, [&] {
    GaborSystem(w, Subgroup::whole(g, Side::dual), Subgroup::whole(g, Side::dual));
  });
  expect_errc(Errc::side_mismatch, [&] {
    GaborSystem(w, Subgroup::whole(g, Side::primal), Subgroup::whole(g, Side::primal));
  });
  expect_errc(Errc::group_mismatch, [&] {
    GaborSystem(w, Subgroup::whole(h, Side::primal), Subgroup::whole(h, Side::dual));
  });
}

TEST(GaborAtoms, Z2FullLattice) {
  const Z2Full z;
  const CMatrix a = gabor_atoms(z.sys);
  ASSERT_EQ(a.rows(), 4);
  EXPECT_EQ(CVector(a.row(0).transpose()), vec({1.0, 0.0}));
  EXPECT_EQ(CVector(a.row(1).transpose()), vec({1.0, 0.0}));
  EXPECT_EQ(CVector(a.row(2).transpose()), vec({0.0, 1.0}));
  EXPECT_EQ(CVector(a.row(3).transpose()), vec({0.0, -1.0}));
}

TEST(GaborAtoms, TrivialLatticesGiveTheWindow) {
  const GroupSpec g = GroupSpec::make({6});
  const Window w = random_window(g, 6);
  const GaborSystem sys(w, Subgroup::trivial(g, Side::primal), Subgroup::trivial(g, Side::dual));
  const CMatrix a = gabor_atoms(sys);
  ASSERT_EQ(a.rows(), 1);
  EXPECT_EQ(CVector(a.row(0).transpose()), w.values());
}

TEST(GaborAtoms, MatchOracleAndPreserveNorm) {
  for (const auto& mods : std::vector<std::vector<int>>{{6}, {2, 4}, {3, 3}}) {
    const GroupSpec g = GroupSpec::make(mods);
    const Window w = random_window(g, 7);
    std::vector<oracle::cplx> gv(w.values().data(), w.values().data() + g.order());
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal)) {
      for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
        const GaborSystem sys(w, l, c);
        const CMatrix a = gabor_atoms(sys);
        ASSERT_EQ(a.rows(), sys.atom_count());
        int row = 0;
        for (int lam : l.elements()) {
          for (int gam : c.elements()) {
            EXPECT_EQ(sys.atom_position(lam, gam), row);
            const auto ref = oracle::atom(mods, gv, lam, gam);
            for (int x = 0; x < g.order(); ++x)
              EXPECT_NEAR(std::abs(a(row, x) - ref[static_cast<std::size_t>(x)]), 0.0, 1e-13);
            EXPECT_NEAR(a.row(row).norm(), w.norm(), 1e-13);
            ++row;
          }
        }
      }
    }
  }
}

TEST(AdjointAtoms, Examples) {
  const Z2Full z;
  const CMatrix a = adjoint_atoms(z.sys);
  ASSERT_EQ(a.rows(), 1);
  EXPECT_EQ(CVector(a.row(0).transpose()), z.sys.window().values());

  const GroupSpec g = GroupSpec::make({4});
  const GaborSystem trivial(random_window(g, 8), Subgroup::trivial(g, Side::primal),
                            Subgroup::trivial(g, Side::dual));
  EXPECT_EQ(adjoint_atoms(trivial).rows(), 16);
  const GaborSystem adj = trivial.adjoint();
  EXPECT_EQ(adj.time_lattice(), Subgroup::whole(g, Side::primal));
  EXPECT_EQ(adj.freq_lattice(), Subgroup::whole(g, Side::dual));
}

TEST(AdjointAtoms, CountingIdentity) {
  for (const auto& mods : testutil::small_groups()) {
    const GroupSpec g = GroupSpec::make(mods);
    const Window w = random_window(g, 9);
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal))
      for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
        const GaborSystem sys(w, l, c);
        EXPECT_EQ(adjoint_atoms(sys).rows() * sys.atom_count(), g.order() * g.order());
      }
  }
}

TEST(Analysis, Examples) {
  const GroupSpec g1 = GroupSpec::make({3});
  const GaborSystem single(Window::delta(g1), Subgroup::trivial(g1, Side::primal),
                           Subgroup::trivial(g1, Side::dual));
  EXPECT_EQ(analysis(single, Window::delta(g1)).values, vec({1.0}));
  EXPECT_EQ(analysis(single, Window::delta(g1, 1)).values, vec({0.0}));

  const Z2Full z;
  const CoefficientArray c = analysis(z.sys, Window(z.g, vec({1.0, 1.0})));
  EXPECT_EQ(c.values, vec({1.0, 1.0, 1.0, -1.0}));
  EXPECT_EQ(c.at(1, 1), Complex(-1.0));
  expect_errc(Errc::not_in_lattice, [&] {
    const GroupSpec g = GroupSpec::make({4});
    const GaborSystem s(Window::delta(g), Subgroup::trivial(g, Side::primal), Subgroup::trivial(g, Side::dual));
    (void)analysis(s, Window::delta(g)).at(1, 0);
  });
}

TEST(Synthesis, Examples) {
  const GroupSpec g = GroupSpec::make({2, 3});
  const Subgroup l = span_subgroup(g, Side::primal, {g.elem(Side::primal, {1, 0})});
  const Subgroup c = span_subgroup(g, Side::dual, {g.elem(Side::dual, {0, 1})});
  const GaborSystem sys(random_window(g, 10), l, c);
  const CMatrix atoms = gabor_atoms(sys);
  for (int k = 0; k < sys.atom_count(); ++k) {
    CoefficientArray e{l, c, CVector::Zero(sys.atom_count())};
    e.values[k] = 1.0;
    EXPECT_LE((synthesis(sys, e).values() - atoms.row(k).transpose()).norm(), 1e-15);
  }
  const CoefficientArray zero{l, c, CVector::Zero(sys.atom_count())};
  EXPECT_EQ(synthesis(sys, zero).norm(), 0.0);
  expect_errc(Errc::size_mismatch, [&] { (void)synthesis(sys, CoefficientArray{l, c, CVector::Zero(2)}); });
}

TEST(Synthesis, AdjointOfAnalysis) {
  const GroupSpec g = GroupSpec::make({12});
  const auto subs_p = enumerate_subgroups(g, Side::primal);
  const auto subs_d = enumerate_subgroups(g, Side::dual);
  Xorshift64Star rng(11);
  for (int t = 0; t < 100; ++t) {
    const Subgroup& l = subs_p[static_cast<std::size_t>(rng.integer(0, static_cast<int>(subs_p.size()) - 1))];
    const Subgroup& c = subs_d[static_cast<std::size_t>(rng.integer(0, static_cast<int>(subs_d.size()) - 1))];
    const GaborSystem sys(random_window(g, 2000 + static_cast<std::uint64_t>(t)), l, c);
    const Window f = random_window(g, 3000 + static_cast<std::uint64_t>(t));
    const CoefficientArray coef{l, c, random_complex_vector(sys.atom_count(), rng)};
    const Complex lhs = inner(analysis(sys, f).values, coef.values);
    const Complex rhs = inner(f.values(), synthesis(sys, coef).values());
    EXPECT_LE(rel(std::abs(lhs - rhs), std::abs(lhs)), 1e-12);
  }
}

TEST(FrameOperator, Examples) {
  const Z2Full z;
  EXPECT_LE((frame_operator(z.sys) - 2.0 * CMatrix::Identity(2, 2)).norm(), 1e-15);
  const GroupSpec g = GroupSpec::make({5});
  const GaborSystem zero(Window::zero(g), Subgroup::whole(g, Side::primal), Subgroup::trivial(g, Side::dual));
  EXPECT_EQ(frame_operator(zero).norm(), 0.0);
  const GaborSystem sys = zero.with_window(random_window(g, 12));
  EXPECT_LE((frame_operator(sys, 3.5) - 3.5 * frame_operator(sys)).norm(), 1e-13);
  expect_errc(Errc::nonpositive_weight, [&] { (void)frame_operator(sys, 0.0); });
  expect_errc(Errc::nonpositive_weight, [&] { (void)frame_operator(sys, -1.0); });
}

TEST(FrameOperator, HermitianPsdAndMatchesLoopOracle) {
  const GroupSpec g = GroupSpec::make({2, 4});
  const Window w = random_window(g, 13);
  for (const Subgroup& l : enumerate_subgroups(g, Side::primal))
    for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
      const GaborSystem sys(w, l, c);
      const CMatrix s = frame_operator(sys);
      EXPECT_LE(hermitian_defect(s), 1e-14 * std::max(1.0, s.norm()));
      EXPECT_LE((s - oracle::loop_frame_operator(gabor_atoms(sys))).norm(), 1e-12 * s.norm());
      EXPECT_GE(oracle::reference_eigenvalues(s).minCoeff(), -1e-12 * s.norm());
    }
}

TEST(FrameOperator, CommutesWithLatticeShifts) {
  const GroupSpec g = GroupSpec::make({12});
  for (const Subgroup& l : enumerate_subgroups(g, Side::primal))
    for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
      const GaborSystem sys(random_window(g, 14), l, c);
      const CMatrix s = frame_operator(sys);
      const CVector f = random_window(g, 15).values();
      const double bound = 1e-11 * s.norm() * f.norm();
      for (int lam : l.elements())
        for (int gam : c.elements()) {
          const CVector lhs = s * time_frequency_shift(g, f, lam, gam);
          const CVector rhs = time_frequency_shift(g, s * f, lam, gam);
          EXPECT_LE((lhs - rhs).norm(), bound);
        }
    }
}

TEST(FrameOperator, SpectrumInvariantUnderWindowShift) {
  const GroupSpec g = GroupSpec::make({3, 4});
  const Window w = random_window(g, 16);
  const Subgroup l = span_subgroup(g, Side::primal, {g.elem(Side::primal, {0, 2})});
  const Subgroup c = span_subgroup(g, Side::dual, {g.elem(Side::dual, {1, 0})});
  const GaborSystem sys(w, l, c);
  const RVector base = oracle::reference_eigenvalues(frame_operator(sys));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); b += 5) {
      const Window shifted(g, time_frequency_shift(g, w.values(), a, b));
      const RVector ev = oracle::reference_eigenvalues(frame_operator(sys.with_window(shifted)));
      EXPECT_LE((ev - base).cwiseAbs().maxCoeff(), 1e-10 * base.maxCoeff());
    }
}

TEST(Gram, Examples) {
  const GroupSpec g = GroupSpec::make({2});
  EXPECT_LE((gram(CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)).norm(), 0.0);
  const Window w = random_window(g, 17);
  const CMatrix single = w.values().transpose();
  EXPECT_NEAR(gram(single)(0, 0).real(), w.values().squaredNorm(), 1e-15);
  CMatrix twice(2, 2);
  twice << 1.0, 0.0, 1.0, 0.0;
  CMatrix expect(2, 2);
  expect << 1.0, 1.0, 1.0, 1.0;
  EXPECT_EQ(gram(twice), expect);
  expect_errc(Errc::empty_family, [] { (void)gram(CMatrix(0, 3)); });
}

TEST(Gram, SharesNonzeroSpectrumWithFrameOperator) {
  for (const auto& mods : std::vector<std::vector<int>>{{6}, {8}, {12}, {2, 2, 2}, {2, 3}}) {
    const GroupSpec g = GroupSpec::make(mods);
    const Window w = random_window(g, 18);
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal))
      for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
        const CMatrix atoms = gabor_atoms(GaborSystem(w, l, c));
        const CMatrix gm = gram(atoms);
        EXPECT_LE((gm - oracle::loop_gram(atoms)).norm(), 1e-12 * gm.norm());
        RVector a = oracle::reference_eigenvalues(gm);
        RVector b = oracle::reference_eigenvalues(frame_operator(GaborSystem(w, l, c)));
        const double top = std::max(a.maxCoeff(), b.maxCoeff());
        std::vector<double> na, nb;
        for (double v : a) if (v > 1e-9 * top) na.push_back(v);
        for (double v : b) if (v > 1e-9 * top) nb.push_back(v);
        ASSERT_EQ(na.size(), nb.size());
        for (std::size_t i = 0; i < na.size(); ++i) EXPECT_LE(std::abs(na[i] - nb[i]), 1e-10 * top);
      }
  }
}

TEST(Intertwiners, IdentityIsometryAndErrors) {
  const GroupSpec g = GroupSpec::make({12});
  const Subgroup l = span_subgroup(g, Side::primal, {g.elem(Side::primal, 3)});
  const Subgroup c = span_subgroup(g, Side::dual, {g.elem(Side::dual, 4)});
  Xorshift64Star rng(19);
  const CoefficientArray coef{l, c, random_complex_vector(l.order() * c.order(), rng)};
  EXPECT_EQ(intertwiner_U(g.elem(Side::primal, 0), coef).values, coef.values);
  EXPECT_EQ(intertwiner_V(g.elem(Side::dual, 0), coef).values, coef.values);
  for (int lam : l.elements())
    EXPECT_NEAR(intertwiner_U(g.elem(Side::primal, lam), coef).values.norm(), coef.values.norm(), 1e-14);
  for (int gam : c.elements())
    EXPECT_NEAR(intertwiner_V(g.elem(Side::dual, gam), coef).values.norm(), coef.values.norm(), 1e-14);
  expect_errc(Errc::not_in_lattice, [&] { (void)intertwiner_U(g.elem(Side::primal, 1), coef); });
  expect_errc(Errc::not_in_lattice, [&] { (void)intertwiner_V(g.elem(Side::dual, 1), coef); });
}

TEST(Intertwiners, IntertwiningLaws) {
  for (const auto& mods : std::vector<std::vector<int>>{{12}, {2, 4}, {3, 3}}) {
    const GroupSpec g = GroupSpec::make(mods);
    const Window w = random_window(g, 20);
    for (const Subgroup& l : enumerate_subgroups(g, Side::primal))
      for (const Subgroup& c : enumerate_subgroups(g, Side::dual)) {
        const GaborSystem sys(w, l, c);
        const Window f = random_window(g, 21);
        const CoefficientArray base = analysis(sys, f);
        const double scale = std::max(1e-300, base.values.norm());
        for (int lam : l.elements()) {
          const Elem e = g.elem(Side::primal, lam);
          const CVector lhs = analysis(sys, translate(f, e)).values;
          EXPECT_LE((lhs - intertwiner_U(e, base).values).norm(), 1e-12 * scale);
        }
        for (int gam : c.elements()) {
          const Elem e = g.elem(Side::dual, gam);
          const CVector lhs = analysis(sys, modulate(f, e)).values;
          EXPECT_LE((lhs - intertwiner_V(e, base).values).norm(), 1e-12 * scale);
        }
      }
  }
}

TEST(CrossFrameOperator, ReducesToFrameOperator) {
  const GroupSpec g = GroupSpec::make({8});
  const Window w = random_window(g, 22);
  const GaborSystem sys(w, span_subgroup(g, Side::primal, {g.elem(Side::primal, 2)}),
                        span_subgroup(g, Side::dual, {g.elem(Side::dual, 4)}));
  EXPECT_LE((cross_frame_operator(sys, w) - frame_operator(sys)).norm(), 1e-13);
  const Window h = random_window(g, 23);
  const Window f = random_window(g, 24);
  // x -> sum <x, E T h> E T g, checked against synthesis(analysis_h(x)).
  const CVector direct = synthesis(sys, analysis(sys.with_window(h), f)).values();
  EXPECT_LE((cross_frame_operator(sys, h) * f.values() - direct).norm(), 1e-12 * direct.norm());
}
