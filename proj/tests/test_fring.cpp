#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "oracle.hpp"
#include "random_inputs.hpp"
#include "test_support.hpp"

using namespace formal_rings;
using namespace testing_support;

namespace {

T log_of(const std::string& name, unsigned D) { return std::get<T>(make_log(name, {}, D)); }

T todd_log(unsigned D) {
  oracle::Uni g(D);
  for (unsigned k = 1; k <= D; ++k) g.c[k] = mpq_class(1, k);
  return single(oracle::to_series(g));
}

}  // namespace

TEST(FormalRing, AdditiveProduct) {
  const auto r = product_from_log(single(var(1, 6, 0)));
  EXPECT_EQ(r.psi()[0], var(2, 6, 0) * var(2, 6, 1));
  EXPECT_TRUE(verify_ring_axioms(r, 6).ok());
}

TEST(FormalRing, EulerProduct) {
  const auto r = product_from_log(log_of("euler", 14));
  EXPECT_EQ(r.psi()[0], series(2, 14,
                               {{{1, 1}, "1"},
                                {{1, 5}, "1/10"},
                                {{5, 1}, "1/10"},
                                {{1, 9}, "1/24"},
                                {{9, 1}, "1/24"},
                                {{5, 5}, "-9/100"},
                                {{5, 9}, "-11/240"},
                                {{9, 5}, "-11/240"},
                                {{1, 13}, "5/208"},
                                {{13, 1}, "5/208"}}));
}

TEST(FormalRing, AbelProductOverParameters) {
  const auto ring = std::get<FormalRing<Poly>>(make_ring("abel", {}, 4));
  const PolyRing& pr = ring.ring();
  auto coef = [&](std::initializer_list<unsigned> e) { return ring.psi()[0].coefficient(Monomial(e)); };
  EXPECT_EQ(coef({1, 1}), pr.one());
  EXPECT_EQ(coef({1, 2}), Poly::parse("-1/2*a - 1/2*b", pr));
  EXPECT_EQ(coef({2, 1}), Poly::parse("-1/2*a - 1/2*b", pr));
  EXPECT_EQ(coef({1, 3}), Poly::parse("1/3*a^2 + 5/6*a*b + 1/3*b^2", pr));
  EXPECT_EQ(coef({3, 1}), Poly::parse("1/3*a^2 + 5/6*a*b + 1/3*b^2", pr));
  EXPECT_EQ(coef({2, 2}), Poly::parse("1/4*a^2 + 1/2*a*b + 1/4*b^2 + 1/2*a + 1/2*b", pr));
  EXPECT_TRUE(verify_ring_axioms(ring, 4).ok());
}

TEST(FormalRing, RingAxiomsOnCatalog) {
  const auto euler = product_from_log(log_of("euler", 8));
  const auto report = verify_ring_axioms(euler, 8);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked.size(), 5u);
}

TEST(FormalRing, NonDistributiveProductFails) {
  const auto group = law_from_log(todd_log(6));
  const S psi = var(2, 6, 0) * var(2, 6, 1) + series(2, 6, {{{2, 2}, "1"}});
  const FormalRing<Q> r(group, single(psi));
  const auto report = verify_ring_axioms(r, 6);
  ASSERT_FALSE(report.ok());
  const auto* f = report.first_failure("psi(x,phi(y,z)) = phi(psi(x,y),psi(x,z))");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->exponents.size(), 3u);
}

TEST(FormalRing, ScaledProducts) {
  const T todd = todd_log(8);
  EXPECT_EQ(psi_scaled(todd, Q(1)).psi(), product_from_log(todd).psi());

  EXPECT_EQ(psi_scaled(single(var(1, 5, 0)), Q(3)).psi()[0], (var(2, 5, 0) * var(2, 5, 1)).scaled(Q(3)));

  const auto t4 = product_from_log(todd_log(4));
  const S lhs = psi_scaled(todd_log(4), Q(2)).psi()[0];
  const S rho2 = rho(todd_log(4), Q(2))[0];
  EXPECT_EQ(lhs, compose(rho2, std::span<const S>(&t4.psi()[0], 1)));
}

TEST(FormalRing, ScaledProductIsADifferentRing) {
  const T todd = todd_log(8);
  for (const Q a : {Q(2), Q(-3), q("1/2")}) {
    const auto r = psi_scaled(todd, a);
    EXPECT_NE(r.psi(), product_from_log(todd).psi());
    EXPECT_EQ(r.phi(), product_from_log(todd).phi());
    EXPECT_TRUE(verify_ring_axioms(r, 8).ok());
  }
}

TEST(RingHomomorphism, SigmaExamples) {
  const T todd = todd_log(8);
  const T additive = single(var(1, 8, 0));
  const auto id = sigma(todd, todd, Q(1));
  EXPECT_EQ(id.map, T::identity(RationalRing{}, 1, 8));
  EXPECT_TRUE(id.is_strict());

  const auto s = sigma(todd, additive, Q(1));
  EXPECT_EQ(s.map, todd);
  EXPECT_TRUE(s.is_strict());
  EXPECT_TRUE(verify_homomorphism(s, 8).ok());

  const auto s2 = sigma(additive, additive, Q(2));
  EXPECT_EQ(s2.map[0], var(1, 8, 0).scaled(Q(2)));
  EXPECT_FALSE(s2.is_strict());
  // sigma_2(Psi(x,y)) = Psi(sigma_1(x), sigma_2(y)) = 2xy.
  const S lhs = compose(s2.map[0], std::span<const S>(&product_from_log(additive).psi()[0], 1));
  const S sig1x = var(2, 8, 0), sig2y = var(2, 8, 1).scaled(Q(2));
  const std::vector<S> args = {sig1x, sig2y};
  EXPECT_EQ(lhs, compose(product_from_log(additive).psi()[0], std::span<const S>(args)));
  EXPECT_EQ(lhs, (var(2, 8, 0) * var(2, 8, 1)).scaled(Q(2)));
}

TEST(RingHomomorphism, BrokenMapFails) {
  const auto r = std::make_shared<const FormalRing<Q>>(product_from_log(single(var(1, 6, 0))));
  const RingHomomorphism<Q> f(single(uni(6, {"0", "1", "1"})), r, r);
  const auto report = verify_homomorphism(f, 6);
  ASSERT_FALSE(report.ok());
  const auto* fail = report.first_failure("f(phi1(x,y)) = phi2(f(x),f(y))");
  ASSERT_NE(fail, nullptr);
  EXPECT_EQ(fail->exponents, (std::vector<unsigned>{1, 1}));
}

TEST(RingHomomorphism, IdentityOnAnyRing) {
  const auto r = std::make_shared<const FormalRing<Q>>(product_from_log(log_of("l_genus", 7)));
  EXPECT_TRUE(verify_homomorphism(RingHomomorphism<Q>(T::identity(RationalRing{}, 1, 7), r, r), 7).ok());
}

TEST(FormalRingProperties, SigmaRelations) {
  Random rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const T g1 = rng.log(n, 6, 0.25), g2 = rng.log(n, 6, 0.25);
    const Q a = rng.nonzero_rational(), b = rng.nonzero_rational();
    const auto r1 = product_from_log(g1);
    const auto r2 = product_from_log(g2);
    const auto sa = sigma(g1, g2, a), sb = sigma(g1, g2, b), sab = sigma(g1, g2, a * b);

    std::vector<std::size_t> tx(n), ty(n);
    for (std::size_t i = 0; i < n; ++i) {
      tx[i] = i;
      ty[i] = n + i;
    }
    auto in_block = [&](const T& t, const std::vector<std::size_t>& target) {
      return remap_variables(t, std::span<const std::size_t>(target), 2 * n);
    };
    auto join = [](const T& x, const T& y) {
      std::vector<S> out = x.components();
      out.insert(out.end(), y.components().begin(), y.components().end());
      return out;
    };
    EXPECT_EQ(compose(sa.map, r1.phi()), compose(r2.phi(), std::span<const S>(join(in_block(sa.map, tx), in_block(sa.map, ty)))));
    EXPECT_EQ(compose(sab.map, r1.psi()), compose(r2.psi(), std::span<const S>(join(in_block(sa.map, tx), in_block(sb.map, ty)))));
  }
}

TEST(FormalRingProperties, RhoRelations) {
  Random rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    const T g = rng.log(1, 7, 0.3);
    const auto r = product_from_log(g);
    const Q a = rng.nonzero_rational(), b = rng.nonzero_rational();
    const S ra = rho(g, a)[0], rb = rho(g, b)[0], rab = rho(g, a * b)[0];
    const S rapb = rho(g, a + b)[0];
    const S phi = r.phi()[0], psi = r.psi()[0];
    auto at = [](const S& f, const S& u, const S& v) {
      const std::vector<S> args = {u, v};
      return compose(f, std::span<const S>(args));
    };
    auto lift = [](const S& f, std::size_t slot) {
      const std::size_t target[] = {slot};
      return remap_variables(f, std::span<const std::size_t>(target), 2);
    };
    // rho_a(Phi(x,y)) = Phi(rho_a(x), rho_a(y))
    EXPECT_EQ(compose(ra, std::span<const S>(&phi, 1)), at(phi, lift(ra, 0), lift(ra, 1)));
    // rho_{a+b}(x) = Phi(rho_a(x), rho_b(x))
    EXPECT_EQ(lift(rapb, 0), at(phi, lift(ra, 0), lift(rb, 0)));
    // rho_{ab}(Psi(x,y)) = Psi(rho_a(x), rho_b(y))
    EXPECT_EQ(compose(rab, std::span<const S>(&psi, 1)), at(psi, lift(ra, 0), lift(rb, 1)));
  }
}

TEST(FormalRingProperties, EveryCatalogRingPasses) {
  for (const auto& entry : catalog()) {
    const AnyRing ring = make_ring(entry.name, entry.defaults, entry.dim == 2 ? 6 : 8);
    std::visit([&](const auto& r) { EXPECT_TRUE(verify_ring_axioms(r, r.trunc_degree()).ok()) << entry.name; }, ring);
  }
}

TEST(MapBase, TqSpecializations) {
  const auto tq = std::get<FormalRing<Poly>>(make_ring("t_q", {}, 8));
  const auto todd = map_base({{"q", Q(0)}}, tq);
  EXPECT_EQ(todd.phi()[0], series(2, 8, {{{1, 0}, "1"}, {{0, 1}, "1"}, {{1, 1}, "-1"}}));
  const auto c = map_base({{"q", Q(-1)}}, tq);
  EXPECT_TRUE(oracle::equal(oracle::from_series2(c.phi()[0]), oracle::t_q_law(-1, 8)));
  EXPECT_TRUE(verify_ring_axioms(c, 8).ok());
  EXPECT_THROW(map_base({}, tq), UnassignedParameter);
}

TEST(MapBase, AbelAtZeroIsAdditive) {
  const auto abel = std::get<FormalRing<Poly>>(make_ring("abel", {}, 6));
  const auto r = map_base({{"a", Q(0)}, {"b", Q(0)}}, abel);
  EXPECT_EQ(r.phi()[0], var(2, 6, 0) + var(2, 6, 1));
  EXPECT_EQ(r.psi()[0], var(2, 6, 0) * var(2, 6, 1));
}

TEST(MapBase, CommutesWithVerification) {
  Random rng(43);
  const auto abel = std::get<FormalRing<Poly>>(make_ring("abel", {}, 6));
  for (int trial = 0; trial < 4; ++trial) {
    const auto r = map_base({{"a", rng.rational()}, {"b", rng.rational()}}, abel);
    EXPECT_TRUE(verify_ring_axioms(r, 6).ok());
  }
}

TEST(ApproxUnit, Examples) {
  EXPECT_EQ(approx_unit(single(var(1, 5, 0)), 5), Q(1));

  const auto todd = approx_unit_detailed(todd_log(20), 30);
  EXPECT_LT(todd.residual.to_double(), 1e-6);
  EXPECT_NEAR(todd.value.to_double(), 1 - std::exp(-1.0), 1e-3);
  for (std::size_t i = 1; i < todd.residuals.size(); ++i) EXPECT_LE(todd.residuals[i], todd.residuals[i - 1]);

  const Q e = approx_unit(log_of("euler", 17), 30);
  EXPECT_GT(e, Q(0));
  EXPECT_LT(e, Q(1));
}

TEST(ApproxUnit, Errors) {
  EXPECT_THROW(approx_unit(T::identity(RationalRing{}, 2, 4), 5), ShapeMismatch);
  // x - x^2 has vanishing derivative at 1/2.
  EXPECT_THROW(approx_unit(single(uni(4, {"0", "1", "-1"})), 5), Error);
}
