#include <doctest.h>

#include <cmath>
#include <random>

#include "frechet3/copula2.hpp"
#include "frechet3/copula3.hpp"
#include "frechet3/envelope.hpp"
#include "frechet3/product_lift.hpp"
#include "frechet3/quadrature.hpp"

using namespace frechet3;

namespace {

std::vector<CopulaSpec2> family_catalogue() {
  const std::vector<std::vector<double>> cyclic = {
      {1.0 / 3, 0.0, 0.0}, {0.0, 0.0, 1.0 / 3}, {0.0, 1.0 / 3, 0.0}};
  return {CopulaSpec2::pi(),
          CopulaSpec2::m(),
          CopulaSpec2::w(),
          CopulaSpec2::fgm(1.0),
          CopulaSpec2::fgm(-0.5),
          CopulaSpec2::clayton(2.0),
          CopulaSpec2::clayton(0.5),
          CopulaSpec2::checkerboard(cyclic),
          CopulaSpec2::transpose(CopulaSpec2::checkerboard(cyclic))};
}

}  // namespace

TEST_CASE("eval closed forms") {
  CHECK(CopulaSpec2::pi().eval(0.3, 0.5) == doctest::Approx(0.15).epsilon(1e-14));
  // u v + u v (1-u)(1-v) at (1/2, 1/2)
  CHECK(CopulaSpec2::fgm(1.0).eval(0.5, 0.5) ==
        doctest::Approx(5.0 / 16).epsilon(1e-14));
  // (4 + 4 - 1)^{-1/2}
  CHECK(CopulaSpec2::clayton(2.0).eval(0.5, 0.5) ==
        doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-14));
}

TEST_CASE("invalid parameters rejected") {
  CHECK_THROWS_AS(CopulaSpec2::fgm(1.5), InvalidSpecError);
  CHECK_THROWS_AS(CopulaSpec2::clayton(0.0), InvalidSpecError);
  CHECK_THROWS_AS(CopulaSpec2::clayton(-1.0), InvalidSpecError);
  CHECK_THROWS_AS(CopulaSpec2::checkerboard({{0.6, 0.0}, {0.0, 0.4}}),
                  InvalidSpecError);
  CHECK_THROWS_AS(CopulaSpec2::checkerboard({{0.5, -0.5}, {0.0, 1.0}}),
                  InvalidSpecError);
}

TEST_CASE("conditional distribution functions") {
  for (double t : {0.0, 0.3, 0.9})
    CHECK(CopulaSpec2::pi().cond_given_second(0.4, t) == doctest::Approx(0.4));
  // d/dt of the theta=1 FGM at u = 1/2 is 1/2 + (1/4)(1 - 2t)
  const CopulaSpec2 fgm = CopulaSpec2::fgm(1.0);
  CHECK(fgm.cond_given_second(0.5, 0.0) == doctest::Approx(0.75));
  CHECK(fgm.cond_given_second(0.5, 0.3) ==
        doctest::Approx(0.5 + 0.25 * (1 - 0.6)));
  CHECK(CopulaSpec2::m().cond_given_second(0.5, 0.7) == 0.0);
  // left limits at the kinks of M and W
  CHECK(CopulaSpec2::m().cond_given_second(0.5, 0.5) == 1.0);
  CHECK(CopulaSpec2::w().cond_given_second(0.5, 0.5) == 0.0);
}

TEST_CASE("rectangle volumes") {
  CHECK(CopulaSpec2::pi().volume(Rect2(0, 0, 1, 1)) == doctest::Approx(1.0));
  CHECK(CopulaSpec2::w().volume(Rect2(0, 0, 0.5, 0.5)) == doctest::Approx(0.0));
  CHECK(CopulaSpec2::m().volume(Rect2(0.2, 0.4, 0.6, 0.5)) ==
        doctest::Approx(0.1));
}

TEST_CASE("survival transform") {
  const Trivariate p3 = pi3();
  CHECK(survival3(p3, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(survival3(p3, 1, 1, 1) == doctest::Approx(0.0));
  CHECK(survival3(p3, 0.5, 0.5, 0.5) == doctest::Approx(0.125));
  CHECK(survival3(m3(), 1, 1, 1) == doctest::Approx(0.0));
}

TEST_CASE("transpose is an involution") {
  for (const CopulaSpec2& c : family_catalogue()) {
    const CopulaSpec2 tt = c.transposed().transposed();
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const double u = i / 10.0, v = j / 10.0;
        CHECK(tt.eval(u, v) == doctest::Approx(c.eval(u, v)).epsilon(1e-14));
        CHECK(c.transposed().eval(u, v) ==
              doctest::Approx(c.eval(v, u)).epsilon(1e-14));
      }
  }
}

TEST_CASE("permutations of a trivariate copula") {
  const Trivariate p3 = pi3();
  const Trivariate id = permute3(p3, Perm3(1, 2, 3));
  CHECK(id(0.2, 0.7, 0.9) == doctest::Approx(p3(0.2, 0.7, 0.9)));

  const LiftedCopula3 l =
      c_lift(CopulaSpec2::fgm(1.0), CopulaSpec2::clayton(2.0), CopulaSpec2::pi());
  const Trivariate swapped = permute3(l.fn(), Perm3(1, 3, 2));
  CHECK(swapped(0.2, 0.4, 0.8) == doctest::Approx(l.eval(0.2, 0.8, 0.4)));

  CHECK_THROWS_AS(Perm3(1, 1, 3), InvalidSpecError);
}

TEST_CASE("frechet envelope scans") {
  CHECK(frechet_envelope_check2(CopulaSpec2::pi(), GridSpec(21)).violations == 0);
  CHECK(frechet_envelope_check2(CopulaSpec2::clayton(5.0), GridSpec(21))
            .violations == 0);
  const EnvelopeReport rep = frechet_envelope_check3(m3(), GridSpec(11));
  CHECK(rep.violations == 0);
  // M attains its own upper bound everywhere
  const GridSpec g(11);
  for (int i = 0; i < g.m; ++i) {
    const double u = g.point(i);
    CHECK(m3()(u, 1.0, 1.0) == doctest::Approx(u));
  }
}

TEST_CASE("uniform margins at machine precision") {
  for (const CopulaSpec2& c : family_catalogue()) {
    for (int i = 0; i <= 100; ++i) {
      const double u = i / 100.0;
      CHECK(std::abs(c.eval(u, 1.0) - u) <= 1e-15);
      CHECK(std::abs(c.eval(1.0, u) - u) <= 1e-15);
      CHECK(c.eval(0.0, u) == 0.0);
      CHECK(c.eval(u, 0.0) == 0.0);
    }
  }
}

TEST_CASE("2-increasing on all grid rectangles") {
  const GridSpec g(21);
  for (const CopulaSpec2& c : family_catalogue()) {
    double worst = 0.0;
    for (int i1 = 0; i1 < g.m; ++i1)
      for (int i2 = i1; i2 < g.m; ++i2)
        for (int j1 = 0; j1 < g.m; ++j1)
          for (int j2 = j1; j2 < g.m; ++j2)
            worst = std::min(worst, c.volume(Rect2(g.point(i1), g.point(j1),
                                                   g.point(i2), g.point(j2))));
    CHECK(worst >= -1e-12);
  }
}

TEST_CASE("conditional d.f. integrates back to the margin") {
  const QuadratureConfig quad;
  for (const CopulaSpec2& c : family_catalogue()) {
    for (int k = 1; k <= 9; ++k) {
      const double u = k / 10.0;
      std::vector<double> kinks;
      c.collect_cond_kinks_second(u, kinks);
      const double integral = integrate(
          [&](double t) { return c.cond_given_second(u, t); }, 0.0, 1.0,
          kinks, quad);
      CHECK(integral == doctest::Approx(u).epsilon(1e-7));
    }
  }
}

TEST_CASE("conditionals are monotone in u") {
  for (const CopulaSpec2& c : family_catalogue()) {
    for (int ti = 1; ti < 20; ++ti) {
      const double t = ti / 20.0 + 0.013;  // avoid sitting exactly on kinks
      if (t >= 1.0) continue;
      double prev = -1.0;
      for (int ui = 0; ui <= 20; ++ui) {
        const double cur = c.cond_given_second(ui / 20.0, t);
        CHECK(cur >= prev - 1e-12);
        CHECK(cur >= -1e-15);
        CHECK(cur <= 1.0 + 1e-15);
        prev = cur;
      }
    }
  }
}

TEST_CASE("finite differences agree with closed-form conditionals") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> interior(0.02, 0.98);
  for (const CopulaSpec2& c : family_catalogue()) {
    for (int k = 0; k < 100; ++k) {
      const double u = interior(rng);
      double t = interior(rng);
      // keep the stencil off jump abscissae of the step conditionals
      std::vector<double> kinks;
      c.collect_cond_kinks_second(u, kinks);
      bool near_kink = false;
      for (double x : kinks)
        if (std::abs(t - x) < 1e-4) near_kink = true;
      if (near_kink) continue;
      CHECK(std::abs(cond_given_second_fd(c, u, t) -
                     c.cond_given_second(u, t)) <= 1e-5);
    }
  }
}
