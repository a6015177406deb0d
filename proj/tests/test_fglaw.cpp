#include <gtest/gtest.h>

#include "oracle.hpp"
#include "random_inputs.hpp"
#include "test_support.hpp"

using namespace formal_rings;
using namespace testing_support;

namespace {

T log_of(const std::string& name, unsigned D) { return std::get<T>(make_log(name, {}, D)); }

// -log(1 - x) from the dense oracle, independent of the catalog.
T todd_log(unsigned D) {
  oracle::Uni g(D);
  for (unsigned k = 1; k <= D; ++k) g.c[k] = mpq_class(1, k);
  return single(oracle::to_series(g));
}

}  // namespace

TEST(FormalGroup, AdditiveLaw) {
  const auto g = law_from_log(single(var(1, 6, 0)));
  EXPECT_EQ(g.law[0], var(2, 6, 0) + var(2, 6, 1));
  EXPECT_TRUE(verify_group_axioms(g, 6).ok());
}

TEST(FormalGroup, ToddLawIsExact) {
  const auto g = law_from_log(todd_log(10));
  EXPECT_EQ(g.law[0], series(2, 10, {{{1, 0}, "1"}, {{0, 1}, "1"}, {{1, 1}, "-1"}}));
  const auto report = verify_group_axioms(g, 8);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked.size(), 4u);
}

TEST(FormalGroup, EulerLawMatchesClosedForm) {
  const auto g = law_from_log(log_of("euler", 9));
  EXPECT_TRUE(oracle::equal(oracle::from_series2(g.law[0]), oracle::euler_law(9)));
  const auto d5 = homogeneous_part(g.law[0], 5);
  EXPECT_EQ(d5, series(2, 9, {{{1, 4}, "-1/2"}, {{4, 1}, "-1/2"}, {{3, 2}, "-1"}, {{2, 3}, "-1"}}));
}

TEST(FormalGroup, InverseSeries) {
  EXPECT_EQ(group_inverse_series(single(var(1, 5, 0)))[0], -var(1, 5, 0));

  const auto todd = law_from_log(todd_log(8));
  const S chi = group_inverse_series(todd)[0];
  oracle::Uni expected = oracle::geometric(8);
  expected.c[0] = 0;
  for (auto& c : expected.c) c = -c;
  EXPECT_EQ(chi, oracle::to_series(expected));

  for (const auto* g : {&todd}) {
    const std::vector<S> args = {var(1, 8, 0), chi};
    EXPECT_TRUE(compose(g->law[0], std::span<const S>(args)).is_zero());
  }

  const auto euler = law_from_log(log_of("euler", 9));
  const S chi_e = group_inverse_series(euler)[0];
  EXPECT_EQ(chi_e.coefficient({1}), Q(-1));
  EXPECT_EQ(chi_e.coefficient({5}), Q(0));
  const std::vector<S> args = {var(1, 9, 0), chi_e};
  EXPECT_TRUE(compose(euler.law[0], std::span<const S>(args)).is_zero());
}

TEST(FormalGroup, RhoExamples) {
  const T todd = todd_log(8);
  EXPECT_EQ(rho(todd, Q(1)), T::identity(RationalRing{}, 1, 8));
  EXPECT_EQ(rho(todd, Q(2))[0], series(1, 8, {{{1}, "2"}, {{2}, "-1"}}));
  EXPECT_TRUE(rho(todd, Q(0))[0].is_zero());
}

TEST(FormalGroup, NonGroupLawFailsAssociativity) {
  const S phi = var(2, 6, 0) + var(2, 6, 1) + series(2, 6, {{{2, 0}, "1"}});
  const FormalGroup<Q> g{single(phi)};
  const auto report = verify_group_axioms(g, 6);
  ASSERT_FALSE(report.ok());
  const auto* f = report.first_failure("phi(phi(x,y),z) = phi(x,phi(y,z))");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->exponents.size(), 3u);
  unsigned degree = 0;
  for (unsigned e : f->exponents) degree += e;
  EXPECT_EQ(degree, 2u);
  EXPECT_NE(report.first_failure("phi(x,y) = phi(y,x)"), nullptr);
}

TEST(FormalGroup, LawsMustStartWithXPlusY) {
  EXPECT_THROW(FormalGroup<Q>{single(var(2, 4, 0))}, InvalidArgument);
  EXPECT_THROW(FormalGroup<Q>{single(var(1, 4, 0))}, ShapeMismatch);
}

TEST(FormalGroupProperties, EveryCatalogLogGivesAGroup) {
  for (const auto& entry : catalog()) {
    const AnyLog log = make_log(entry.name, entry.defaults, 8);
    std::visit([&](const auto& g) { EXPECT_TRUE(verify_group_axioms(law_from_log(g), 8).ok()) << entry.name; }, log);
  }
}

TEST(FormalGroupProperties, RhoIsMultiplicative) {
  Random rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const T g = rng.log(n, 8, 0.25);
    const Q a = rng.rational(), b = rng.rational();
    EXPECT_EQ(compose(rho(g, a), rho(g, b)), rho(g, a * b));
  }
}

TEST(FormalGroupProperties, InverseCancels) {
  Random rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const auto group = law_from_log(rng.log(n, 7, 0.25, trial % 3 != 0));
    const T chi = group_inverse_series(group);
    std::vector<S> args = T::identity(RationalRing{}, n, 7).components();
    args.insert(args.end(), chi.components().begin(), chi.components().end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(compose(group.law[i], std::span<const S>(args)).is_zero());
  }
}

TEST(FormalGroupProperties, LawIsScaleInvariant) {
  Random rng(33);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const T g = rng.log(n, 7, 0.25);
    const Q c = rng.nonzero_rational();
    std::vector<S> scaled;
    for (const auto& s : g.components()) scaled.push_back(s.scaled(c));
    EXPECT_EQ(law_from_log(T(scaled)).law, law_from_log(g).law);
  }
}
