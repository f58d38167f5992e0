#pragma once

#include <optional>
#include <vector>

#include "frechet3/copula2.hpp"
#include "frechet3/copula3.hpp"
#include "frechet3/grid.hpp"
#include "frechet3/product_lift.hpp"

namespace frechet3 {

/// Sharp product bounds on C(C12, C23):
/// lo = (C12 *_W C23)(u1,u3), hi = (C12 *_M C23)(u1,u3).
struct ProductBounds {
  double lo, hi;
};
ProductBounds product_bounds(const CopulaSpec2& c12, const CopulaSpec2& c23,
                             double u1, double u3,
                             const QuadratureConfig& quad = {});

struct Witness {
  double u1, u2, u3;  // u2 unused for pairwise checks
  double value, lower, upper;
};

/// NotRefuted is a necessary-condition verdict on a finite grid, not a
/// proof of compatibility.
struct CompatVerdict {
  enum class Status { Refuted, NotRefuted };
  Status status = Status::NotRefuted;
  std::optional<Witness> witness;
  int grid_points = 0;
  double tol = 0.0;

  bool refuted() const { return status == Status::Refuted; }
};

/// Scans the grid for points where C13 exits [lo - tol, hi + tol].
CompatVerdict check_pair_compat(const CopulaSpec2& c12, const CopulaSpec2& c23,
                                const CopulaSpec2& c13, const GridSpec& grid,
                                const QuadratureConfig& quad = {},
                                double tol = 1e-7);

/// Runs check_pair_compat in the three rotations of the triple, with
/// transposes materialized where the rotation needs C_ji = C_ij^t.
CompatVerdict check_triple_compat(const CopulaSpec2& c12,
                                  const CopulaSpec2& c13,
                                  const CopulaSpec2& c23, const GridSpec& grid,
                                  const QuadratureConfig& quad = {},
                                  double tol = 1e-7);

/// Sharp lifting bounds on F(C12, C23) at a point.
struct LiftBounds {
  double lo, hi;
};
LiftBounds lift_bounds(const CopulaSpec2& c12, const CopulaSpec2& c23,
                       double u1, double u2, double u3,
                       const QuadratureConfig& quad = {});

/// The trivariate bounds C_L <= C~ <= C_U on F(C12, C13, C23), maximizing /
/// minimizing over the rotations P = {(1,2,3),(1,3,2),(2,1,3)}. No clamp is
/// applied; C_L > C_U beyond tolerance signals incompatible inputs.
struct ClCu {
  double cl, cu;
};
ClCu cl_cu(const CopulaSpec2& c12, const CopulaSpec2& c13,
           const CopulaSpec2& c23, double u1, double u2, double u3,
           const QuadratureConfig& quad = {});

/// Joe's closed-form bounds F_L <= C~ <= F_U. No quadrature involved.
struct JoeBounds {
  double fl, fu;
};
JoeBounds joe_bounds(const CopulaSpec2& c12, const CopulaSpec2& c13,
                     const CopulaSpec2& c23, double u1, double u2, double u3);

struct BoundsRecord {
  double u1, u2, u3;
  double fl, cl, cu, fu;
};

struct BoundsReport {
  std::vector<BoundsRecord> records;  // row-major over the grid
  double max_gap_lower = 0.0;         // max of cl - fl
  double max_gap_upper = 0.0;         // max of fu - cu
  std::vector<Witness> violations;    // sandwich failures beyond tol
  // C_L and C_U need not be copulas; most negative grid-box volume of each.
  double cl_min_box_volume = 0.0;
  double cu_min_box_volume = 0.0;
};

struct IncompatibleTripleError : std::runtime_error {
  CompatVerdict verdict;
  IncompatibleTripleError(std::string msg, CompatVerdict v)
      : std::runtime_error(std::move(msg)), verdict(std::move(v)) {}
};

/// Full-grid sandwich check F_L - tol <= C_L and C_U <= F_U + tol. The
/// triple must pass check_triple_compat first; a refuted triple raises
/// IncompatibleTripleError carrying the witness.
BoundsReport improvement_report(const CopulaSpec2& c12, const CopulaSpec2& c13,
                                const CopulaSpec2& c23, const GridSpec& grid,
                                const QuadratureConfig& quad = {},
                                double tol = 1e-7);

struct OrderCheck {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Grid-verified pointwise concordance order C <= C'.
OrderCheck concordance_leq2(const CopulaSpec2& c, const CopulaSpec2& cp,
                            const GridSpec& grid, double tol = 1e-7);

/// Trivariate concordance order: D <= D' and survival(D) <= survival(D')
/// at every grid point.
OrderCheck concordance_leq3(const Trivariate& d, const Trivariate& dp,
                            const GridSpec& grid, double tol = 1e-7);

/// Checks A ⋆_C B <= A ⋆_C' B in the trivariate concordance order. Both
/// liftings must share A and B; the mixing families are verified to be
/// pointwise concordance-ordered first.
OrderCheck lift_concordance_compare(const LiftedCopula3& l,
                                    const LiftedCopula3& lp,
                                    const GridSpec& grid, double tol = 1e-7);

}  // namespace frechet3
