#include <doctest.h>

#include <cmath>

#include "frechet3/bounds.hpp"
#include "frechet3/scan.hpp"

using namespace frechet3;

namespace {

const CopulaSpec2 kPi = CopulaSpec2::pi();
const CopulaSpec2 kM = CopulaSpec2::m();
const CopulaSpec2 kW = CopulaSpec2::w();
const CopulaSpec2 kFgm = CopulaSpec2::fgm(1.0);

// Smallest Clayton alpha in {1,...,30} refuted against (FGM(1), Pi) on the
// 21x21 grid; frozen regression value (see the scan test below).
constexpr int kMinRefutableAlpha = 3;

}  // namespace

TEST_CASE("product bounds") {
  const ProductBounds pb = product_bounds(kFgm, kPi, 0.5, 0.5);
  CHECK(pb.hi == doctest::Approx(7.0 / 16).epsilon(1e-8));
  CHECK(pb.lo <= pb.hi + 1e-10);

  // comonotone pair admits only the comonotone coupling
  for (double u : {0.25, 0.5, 0.8})
    for (double v : {0.1, 0.5, 0.9}) {
      const ProductBounds mm = product_bounds(kM, kM, u, v);
      CHECK(mm.lo == doctest::Approx(kM.eval(u, v)).epsilon(1e-8));
      CHECK(mm.hi == doctest::Approx(kM.eval(u, v)).epsilon(1e-8));
    }

  const ProductBounds ww = product_bounds(kW, kW, 0.5, 0.5);
  CHECK(ww.lo == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(ww.hi == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("pairwise compatibility refutation") {
  const GridSpec g(21);

  const CompatVerdict clayton20 =
      check_pair_compat(kFgm, kPi, CopulaSpec2::clayton(20.0), g);
  REQUIRE(clayton20.refuted());
  CHECK(std::abs(clayton20.witness->u1 - 0.5) <= 0.15);
  CHECK(std::abs(clayton20.witness->u3 - 0.5) <= 0.15);

  CHECK_FALSE(check_pair_compat(kPi, kPi, kPi, g).refuted());

  const CompatVerdict www = check_pair_compat(kW, kW, kW, g);
  REQUIRE(www.refuted());
  CHECK(www.witness->u1 == doctest::Approx(0.5));
  CHECK(www.witness->u3 == doctest::Approx(0.5));
  CHECK(www.witness->value == doctest::Approx(0.0));
  CHECK(www.witness->lower == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("minimal refutable Clayton alpha against (FGM(1), Pi)") {
  const GridSpec g(21);
  int first_refuted = -1;
  for (int alpha = 1; alpha <= 30; ++alpha) {
    const CompatVerdict v = check_pair_compat(
        kFgm, kPi, CopulaSpec2::clayton(static_cast<double>(alpha)), g);
    if (v.refuted()) {
      first_refuted = alpha;
      break;
    }
  }
  CHECK(first_refuted == kMinRefutableAlpha);
}

TEST_CASE("triple compatibility") {
  CHECK_FALSE(check_triple_compat(kM, kM, kM, GridSpec(11)).refuted());
  CHECK(check_triple_compat(kW, kW, kW, GridSpec(11)).refuted());
  CHECK_FALSE(
      check_triple_compat(kPi, CopulaSpec2::clayton(0.5), kPi, GridSpec(21))
          .refuted());
}

TEST_CASE("refutation survives a tighter quadrature tolerance") {
  QuadratureConfig quad;
  const GridSpec g(21);
  for (const auto& [c12, c23, c13] :
       {std::tuple{kFgm, kPi, CopulaSpec2::clayton(20.0)},
        std::tuple{kW, kW, kW}}) {
    const CompatVerdict v = check_pair_compat(c12, c23, c13, g, quad);
    REQUIRE(v.refuted());
    QuadratureConfig tight = quad;
    tight.tol /= 10.0;
    const ProductBounds pb =
        product_bounds(c12, c23, v.witness->u1, v.witness->u3, tight);
    const double value = c13.eval(v.witness->u1, v.witness->u3);
    CHECK((value < pb.lo - v.tol || value > pb.hi + v.tol));
  }
}

TEST_CASE("lift bounds") {
  const LiftBounds lb = lift_bounds(kPi, kPi, 0.5, 0.5, 0.5);
  CHECK(lb.hi == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(lb.lo == doctest::Approx(0.0).epsilon(1e-8));

  const LiftBounds zero = lift_bounds(kFgm, kPi, 0.3, 0.0, 0.8);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == 0.0);

  const LiftBounds full = lift_bounds(kFgm, kPi, 0.3, 1.0, 0.8);
  const ProductBounds pb = product_bounds(kFgm, kPi, 0.3, 0.8);
  CHECK(full.lo == doctest::Approx(pb.lo).epsilon(1e-10));
  CHECK(full.hi == doctest::Approx(pb.hi).epsilon(1e-10));
}

TEST_CASE("sharpness: the lifting attains the product bounds") {
  const LiftedCopula3 lo_lift = c_lift(kFgm, kPi, kW);
  const LiftedCopula3 hi_lift = c_lift(kFgm, kPi, kM);
  for (double u : {0.2, 0.5, 0.9})
    for (double v : {0.3, 0.7}) {
      const ProductBounds pb = product_bounds(kFgm, kPi, u, v);
      CHECK(lo_lift.marginal13()(u, v) == doctest::Approx(pb.lo).epsilon(1e-9));
      CHECK(hi_lift.marginal13()(u, v) == doctest::Approx(pb.hi).epsilon(1e-9));
    }
}

TEST_CASE("trivariate bounds C_L and C_U") {
  const ClCu mid = cl_cu(kPi, kPi, kPi, 0.5, 0.5, 0.5);
  CHECK(mid.cl == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(mid.cu == doctest::Approx(0.25).epsilon(1e-7));

  for (double u3 : {0.2, 0.7}) {
    const ClCu pinned = cl_cu(kPi, kPi, kPi, 1.0, 1.0, u3);
    CHECK(pinned.cl == doctest::Approx(u3).epsilon(1e-7));
    CHECK(pinned.cu == doctest::Approx(u3).epsilon(1e-7));
  }

  const ClCu m3only = cl_cu(kM, kM, kM, 0.3, 0.7, 0.5);
  CHECK(m3only.cl == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(m3only.cu == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("C_L/C_U match the closed forms for the independent triple") {
  const GridSpec g(6);
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j)
      for (int k = 0; k < g.m; ++k) {
        const double u1 = g.point(i), u2 = g.point(j), u3 = g.point(k);
        const ClCu b = cl_cu(kPi, kPi, kPi, u1, u2, u3);
        // for the independent triple both bounds coincide with the
        // pairwise-margin bounds, including the survival correction term
        const double cl = std::max({u1 * kW.eval(u2, u3), u2 * kW.eval(u1, u3),
                                    u3 * kW.eval(u1, u2)});
        const double cu =
            std::min({u1 * u2, u1 * u3, u2 * u3,
                      1.0 - u1 - u2 - u3 + u1 * u2 + u1 * u3 + u2 * u3});
        CHECK(std::abs(b.cl - cl) <= 1e-7);
        CHECK(std::abs(b.cu - cu) <= 1e-7);
      }
}

TEST_CASE("Joe bounds closed forms") {
  const JoeBounds mid = joe_bounds(kPi, kPi, kPi, 0.5, 0.5, 0.5);
  CHECK(mid.fl == doctest::Approx(0.0));
  CHECK(mid.fu == doctest::Approx(0.25));

  const JoeBounds grounded = joe_bounds(kFgm, kPi, kM, 0.0, 0.4, 0.7);
  CHECK(grounded.fl == 0.0);
  CHECK(grounded.fu == 0.0);

  // hand-evaluated regression for (FGM(1), Pi, Pi) at (0.6, 0.6, 0.6)
  const JoeBounds fgm = joe_bounds(kFgm, kPi, kPi, 0.6, 0.6, 0.6);
  CHECK(fgm.fl == doctest::Approx(0.1776).epsilon(1e-12));
  CHECK(fgm.fu == doctest::Approx(0.3376).epsilon(1e-12));
}

TEST_CASE("improvement report on small grids") {
  // the constructed 13-marginal C12 *_Pi C23 for (FGM(1), Pi) is Pi itself
  const GridSpec g21(21);
  for (int i = 0; i < g21.m; i += 2)
    for (int j = 0; j < g21.m; j += 2) {
      const double u = g21.point(i), v = g21.point(j);
      CHECK(std::abs(c_product(kFgm, kPi, kPi, u, v) - u * v) <= 1e-7);
    }

  const BoundsReport rep = improvement_report(kFgm, kPi, kPi, GridSpec(7));
  CHECK(rep.violations.empty());
  CHECK(rep.max_gap_lower >= 0.0);
  CHECK(rep.max_gap_upper > 1e-4);

  const BoundsReport pi_rep = improvement_report(kPi, kPi, kPi, GridSpec(7));
  CHECK(pi_rep.violations.empty());
  CHECK(pi_rep.max_gap_lower <= 1e-6);
  CHECK(pi_rep.max_gap_upper <= 1e-6);

  CHECK_THROWS_AS(improvement_report(kW, kW, kW, GridSpec(7)),
                  IncompatibleTripleError);
}

TEST_CASE("bivariate concordance order") {
  const GridSpec g(21);
  CHECK(concordance_leq2(kW, kPi, g).holds);
  CHECK(concordance_leq2(kPi, kM, g).holds);
  CHECK(concordance_leq2(CopulaSpec2::clayton(1.0), CopulaSpec2::clayton(3.0), g)
            .holds);
  const OrderCheck bad = concordance_leq2(kM, kW, g);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness.has_value());
}

TEST_CASE("lifted concordance comparison") {
  const GridSpec g(7);
  const LiftedCopula3 lw = c_lift(kPi, kPi, kW);
  const LiftedCopula3 lp = c_lift(kPi, kPi, kPi);
  const LiftedCopula3 lm = c_lift(kPi, kPi, kM);
  CHECK(lift_concordance_compare(lw, lm, g).holds);
  CHECK(lift_concordance_compare(lw, lp, g).holds);
  CHECK(lift_concordance_compare(lp, lp, g).holds);  // reflexivity

  const LiftedCopula3 fw =
      c_lift(CopulaSpec2::fgm(0.5), CopulaSpec2::clayton(1.0), kW);
  const LiftedCopula3 fp =
      c_lift(CopulaSpec2::fgm(0.5), CopulaSpec2::clayton(1.0), kPi);
  CHECK(lift_concordance_compare(fw, fp, g).holds);

  // family order violated
  CHECK_FALSE(lift_concordance_compare(lm, lw, g).holds);
}

TEST_CASE("cl_cu brackets concrete class members") {
  // liftings whose 13-marginal has a closed form, so the member's own
  // marginals can be fed to cl_cu as a spec triple:
  //   Pi star_M Pi   has marginals (Pi, M, Pi)
  //   Pi star_W Pi   has marginals (Pi, W, Pi)
  //   FGM star_Pi Pi has marginals (FGM(1), Pi, Pi)
  struct Case {
    LiftedCopula3 member;
    CopulaSpec2 c12, c13, c23;
  };
  const std::vector<Case> cases = {
      {c_lift(kPi, kPi, kM), kPi, kM, kPi},
      {c_lift(kPi, kPi, kW), kPi, kW, kPi},
      {c_lift(kFgm, kPi, kPi), kFgm, kPi, kPi},
  };
  const GridSpec g(6);
  for (const Case& c : cases) {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j)
        for (int k = 0; k < g.m; ++k) {
          const double u1 = g.point(i), u2 = g.point(j), u3 = g.point(k);
          const double val = c.member.eval(u1, u2, u3);
          const ClCu b = cl_cu(c.c12, c.c13, c.c23, u1, u2, u3);
          CHECK(val >= b.cl - 1e-7);
          CHECK(val <= b.cu + 1e-7);
        }
  }
}
