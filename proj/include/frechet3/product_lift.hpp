#pragma once

#include "frechet3/copula2.hpp"
#include "frechet3/copula3.hpp"
#include "frechet3/family_path.hpp"
#include "frechet3/quadrature.hpp"

namespace frechet3 {

/// (A *_C B)(u1, u3) = int_0^1 C_t( dA(u1,t)/dt, dB(t,u3)/dt ) dt.
/// The integrand's jump and kink abscissae (step conditionals of M, W and
/// checkerboard pieces, family breakpoints, argument crossings of the outer
/// copula) are registered as quadrature cuts before integration.
double c_product(const CopulaSpec2& a, const CopulaSpec2& b,
                 const FamilyPath& fam, double u1, double u3,
                 const QuadratureConfig& quad = {});

inline double c_product(const CopulaSpec2& a, const CopulaSpec2& b,
                        const CopulaSpec2& mixing, double u1, double u3,
                        const QuadratureConfig& quad = {}) {
  return c_product(a, b, FamilyPath::constant(mixing), u1, u3, quad);
}

/// Trivariate copula (A ⋆_C B): the same integrand as c_product but
/// integrated over [0, u2]. Its 2-marginals are A, A *_C B and B.
struct LiftedCopula3 {
  CopulaSpec2 a;
  CopulaSpec2 b;
  FamilyPath fam;
  QuadratureConfig quad;

  LiftedCopula3(CopulaSpec2 a_, CopulaSpec2 b_, FamilyPath fam_,
                QuadratureConfig quad_ = {})
      : a(std::move(a_)), b(std::move(b_)), fam(std::move(fam_)), quad(quad_) {}

  double eval(double u1, double u2, double u3) const;

  Trivariate fn() const {
    return [self = *this](double x, double y, double z) {
      return self.eval(x, y, z);
    };
  }

  /// 12-, 13- and 23-marginals as evaluable bivariate functions.
  std::function<double(double, double)> marginal12() const;
  std::function<double(double, double)> marginal13() const;
  std::function<double(double, double)> marginal23() const;
};

inline LiftedCopula3 c_lift(CopulaSpec2 a, CopulaSpec2 b, FamilyPath fam,
                            QuadratureConfig quad = {}) {
  return LiftedCopula3(std::move(a), std::move(b), std::move(fam), quad);
}

inline LiftedCopula3 c_lift(CopulaSpec2 a, CopulaSpec2 b, CopulaSpec2 mixing,
                            QuadratureConfig quad = {}) {
  return LiftedCopula3(std::move(a), std::move(b),
                       FamilyPath::constant(std::move(mixing)), quad);
}

}  // namespace frechet3
