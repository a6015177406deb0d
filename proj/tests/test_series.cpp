#include <gtest/gtest.h>

#include "oracle.hpp"
#include "random_inputs.hpp"
#include "test_support.hpp"

using namespace formal_rings;
using namespace testing_support;

namespace {

T euler_log(unsigned D) { return std::get<T>(make_log("euler", {}, D)); }

}  // namespace

TEST(Series, Add) {
  const S x = var(1, 6, 0);
  EXPECT_EQ((x + x * x) + (-x), x * x);
  EXPECT_EQ(x + S(RationalRing{}, 1, 6), x);

  const S g = euler_log(9)[0];
  const std::size_t tx[] = {0}, ty[] = {1};
  const S sum = remap_variables(g, std::span<const std::size_t>(tx), 2) + remap_variables(g, std::span<const std::size_t>(ty), 2);
  EXPECT_EQ(sum.coefficient({1, 0}), Q(1));
  EXPECT_EQ(sum.coefficient({5, 0}), q("1/10"));
  EXPECT_EQ(sum.coefficient({0, 5}), q("1/10"));
  EXPECT_EQ(sum.coefficient({0, 9}), q("1/24"));
  EXPECT_EQ(sum.size(), 6u);
}

TEST(Series, AddRejectsShapeMismatch) {
  EXPECT_THROW(var(1, 4, 0) + var(2, 4, 0), ShapeMismatch);
  EXPECT_THROW(var(1, 4, 0) + var(1, 5, 0), ShapeMismatch);
}

TEST(Series, Multiply) {
  const S x = var(2, 4, 0), y = var(2, 4, 1);
  EXPECT_EQ(x * y, series(2, 4, {{{1, 1}, "1"}}));

  const S one = S::constant(RationalRing{}, 1, 1, Q(1));
  const S t = var(1, 1, 0);
  EXPECT_EQ((one + t) * (one - t), one);

  const S g = euler_log(10)[0];
  const std::size_t tx[] = {0}, ty[] = {1};
  const S prod = remap_variables(g, std::span<const std::size_t>(tx), 2) * remap_variables(g, std::span<const std::size_t>(ty), 2);
  EXPECT_EQ(prod, series(2, 10, {{{1, 1}, "1"}, {{5, 1}, "1/10"}, {{1, 5}, "1/10"}, {{9, 1}, "1/24"}, {{1, 9}, "1/24"},
                                 {{5, 5}, "1/100"}}));
}

TEST(Series, Compose) {
  const S x2 = series(1, 5, {{{2}, "1"}});
  const S sum = var(2, 5, 0) + var(2, 5, 1);
  const S out = compose(x2, std::span<const S>(&sum, 1));
  EXPECT_EQ(out, series(2, 5, {{{2, 0}, "1"}, {{1, 1}, "2"}, {{0, 2}, "1"}}));

  const S f = series(2, 5, {{{1, 0}, "3"}, {{1, 2}, "-1/2"}, {{0, 4}, "7"}});
  EXPECT_EQ(compose(f, T::identity(RationalRing{}, 2, 5)), f);
}

TEST(Series, ComposeErrors) {
  const S f = var(2, 4, 0);
  const S bad = S::constant(RationalRing{}, 1, 4, Q(1)) + var(1, 4, 0);
  const S ok = var(1, 4, 0);
  const std::vector<S> args = {ok, bad};
  EXPECT_THROW(compose(f, std::span<const S>(args)), NonzeroConstantTerm);
  EXPECT_THROW(compose(f, std::span<const S>(args.data(), 1)), ShapeMismatch);
}

TEST(Series, EulerRoundTrip) {
  const T g = euler_log(13);
  const T h = invert_tuple(g);
  EXPECT_EQ(compose(g, h), T::identity(RationalRing{}, 1, 13));
  EXPECT_EQ(compose(h, g), T::identity(RationalRing{}, 1, 13));
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(invert_tuple(single(var(1, 6, 0))), single(var(1, 6, 0)));
  EXPECT_EQ(invert_tuple(single(uni(4, {"0", "1", "1"}))), single(uni(4, {"0", "1", "-1", "2", "-5"})));
  EXPECT_EQ(invert_tuple(euler_log(13))[0],
            series(1, 13, {{{1}, "1"}, {{5}, "-1/10"}, {{9}, "1/120"}, {{13}, "-11/15600"}}));
}

TEST(Series, InvertMatchesOracle) {
  const S f = uni(9, {"0", "1", "1"});
  const oracle::Uni h = oracle::inverse(oracle::from_series(f));
  EXPECT_EQ(invert_tuple(single(f))[0], oracle::to_series(h));
}

TEST(Series, InvertErrors) {
  EXPECT_THROW(invert_tuple(single(series(1, 4, {{{2}, "1"}}))), SingularLinearPart);
  EXPECT_THROW(invert_tuple(single(uni(4, {"1", "1"}))), NonzeroConstantTerm);
  const T singular({var(2, 3, 0) + var(2, 3, 1), var(2, 3, 0) + var(2, 3, 1)});
  EXPECT_THROW(invert_tuple(singular), SingularLinearPart);
}

TEST(Series, InvertOverParameters) {
  const PolyRing r({"a"});
  const Poly a = r.parameter("a");
  // x + a x^2 inverts to x - a x^2 + 2a^2 x^3.
  const Series<Poly> f = Series<Poly>::univariate(r, 3, {r.zero(), r.one(), a});
  const auto h = invert_tuple(SeriesTuple<Poly>({f}));
  EXPECT_EQ(h[0], Series<Poly>::univariate(r, 3, {r.zero(), r.one(), -a, a * a * Poly(r.from_rational(Q(2)))}));
  const Series<Poly> g = Series<Poly>::univariate(r, 3, {r.zero(), a});
  EXPECT_THROW(invert_tuple(SeriesTuple<Poly>({g})), SingularLinearPart);
}

TEST(Series, Order) {
  EXPECT_FALSE(S(RationalRing{}, 2, 6).order().has_value());
  EXPECT_EQ(series(2, 6, {{{2, 1}, "1"}, {{5, 0}, "1"}}).order(), 3u);
  const auto psi = product_from_log(euler_log(6)).psi();
  EXPECT_EQ(psi[0].order(), 2u);
}

TEST(Series, Truncate) {
  EXPECT_EQ(truncate(series(1, 6, {{{1}, "1"}, {{5}, "1/10"}}), 4), var(1, 4, 0));
  const S f = series(2, 6, {{{1, 1}, "2"}, {{3, 3}, "5"}});
  EXPECT_EQ(truncate(f, 6), f);
  EXPECT_THROW(truncate(f, 7), PrecisionError);
  const S h = invert_tuple(euler_log(13))[0];
  EXPECT_EQ(truncate(h, 9), series(1, 9, {{{1}, "1"}, {{5}, "-1/10"}, {{9}, "1/120"}}));
}

TEST(Series, Printing) {
  const S f = series(2, 4, {{{1, 0}, "1"}, {{1, 1}, "-1/2"}, {{0, 3}, "2"}});
  EXPECT_EQ(to_string(f, {"x", "y"}), "x - 1/2*x*y + 2*y^3");
}

TEST(SeriesProperties, MultiplicationCommutativeAssociative) {
  Random rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const S a = rng.series(3, 7, 0.15, 0), b = rng.series(3, 7, 0.15, 0), c = rng.series(3, 7, 0.15, 0);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SeriesProperties, CompositionAssociative) {
  Random rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const S f = rng.series(2, 6, 0.3, 0);
    const T g({rng.series(2, 6, 0.3), rng.series(2, 6, 0.3)});
    const T h({rng.series(2, 6, 0.3), rng.series(2, 6, 0.3)});
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
  }
}

TEST(SeriesProperties, CompositionMatchesDenseOracle) {
  Random rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const S f = rng.series(1, 8, 0.6, 0), g = rng.series(1, 8, 0.6, 1);
    EXPECT_EQ(compose(f, std::span<const S>(&g, 1)),
              oracle::to_series(oracle::compose(oracle::from_series(f), oracle::from_series(g))));
  }
}

TEST(SeriesProperties, InversionRoundTrip) {
  Random rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const T g = rng.log(n, 8, 0.2, trial % 2 == 0);
    const T h = invert_tuple(g);
    const T id = T::identity(RationalRing{}, n, 8);
    EXPECT_EQ(compose(g, h), id);
    EXPECT_EQ(compose(h, g), id);
  }
}

TEST(SeriesProperties, TruncationCoherence) {
  Random rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const S a = rng.series(2, 8, 0.25, 0), b = rng.series(2, 8, 0.25, 0);
    const T g({rng.series(2, 8, 0.25), rng.series(2, 8, 0.25)});
    for (unsigned d : {3u, 5u, 7u}) {
      EXPECT_EQ(truncate(a + b, d), truncate(a, d) + truncate(b, d));
      EXPECT_EQ(truncate(a * b, d), truncate(a, d) * truncate(b, d));
      EXPECT_EQ(truncate(compose(a, g), d), compose(truncate(a, d), truncate(g, d)));
    }
  }
}
