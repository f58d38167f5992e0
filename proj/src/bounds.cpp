#include "frechet3/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "frechet3/scan.hpp"

namespace frechet3 {

namespace {

struct Rotation {
  CopulaSpec2 ij, jk, ik;
  std::array<int, 3> order;  // (i, j, k)
};

// P = {(1,2,3),(1,3,2),(2,1,3)} with C_ji = C_ij^t.
std::array<Rotation, 3> rotations(const CopulaSpec2& c12,
                                  const CopulaSpec2& c13,
                                  const CopulaSpec2& c23) {
  return {Rotation{c12, c23, c13, {1, 2, 3}},
          Rotation{c13, c23.transposed(), c12, {1, 3, 2}},
          Rotation{c12.transposed(), c13, c23, {2, 1, 3}}};
}

}  // namespace

ProductBounds product_bounds(const CopulaSpec2& c12, const CopulaSpec2& c23,
                             double u1, double u3,
                             const QuadratureConfig& quad) {
  return {c_product(c12, c23, CopulaSpec2::w(), u1, u3, quad),
          c_product(c12, c23, CopulaSpec2::m(), u1, u3, quad)};
}

CompatVerdict check_pair_compat(const CopulaSpec2& c12, const CopulaSpec2& c23,
                                const CopulaSpec2& c13, const GridSpec& grid,
                                const QuadratureConfig& quad, double tol) {
  const int m = grid.m;
  struct Row {
    double excess, value, lo, hi;
  };
  std::vector<Row> rows(grid.size2());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long long idx = 0; idx < static_cast<long long>(rows.size()); ++idx) {
    const double u = grid.point(static_cast<int>(idx / m));
    const double v = grid.point(static_cast<int>(idx % m));
    const ProductBounds pb = product_bounds(c12, c23, u, v, quad);
    const double value = c13.eval(u, v);
    rows[idx] = {std::max(pb.lo - value, value - pb.hi), value, pb.lo, pb.hi};
  }
  CompatVerdict verdict;
  verdict.grid_points = static_cast<int>(rows.size());
  verdict.tol = tol;
  double worst = tol;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    if (rows[idx].excess > worst) {
      worst = rows[idx].excess;
      const double u = grid.point(static_cast<int>(idx / m));
      const double v = grid.point(static_cast<int>(idx % m));
      verdict.status = CompatVerdict::Status::Refuted;
      verdict.witness =
          Witness{u, 0.0, v, rows[idx].value, rows[idx].lo, rows[idx].hi};
    }
  }
  return verdict;
}

CompatVerdict check_triple_compat(const CopulaSpec2& c12,
                                  const CopulaSpec2& c13,
                                  const CopulaSpec2& c23, const GridSpec& grid,
                                  const QuadratureConfig& quad, double tol) {
  for (const Rotation& r : rotations(c12, c13, c23)) {
    CompatVerdict v = check_pair_compat(r.ij, r.jk, r.ik, grid, quad, tol);
    if (v.refuted()) return v;
  }
  CompatVerdict ok;
  ok.grid_points = 3 * static_cast<int>(grid.size2());
  ok.tol = tol;
  return ok;
}

LiftBounds lift_bounds(const CopulaSpec2& c12, const CopulaSpec2& c23,
                       double u1, double u2, double u3,
                       const QuadratureConfig& quad) {
  const LiftedCopula3 lo = c_lift(c12, c23, CopulaSpec2::w(), quad);
  const LiftedCopula3 hi = c_lift(c12, c23, CopulaSpec2::m(), quad);
  return {lo.eval(u1, u2, u3), hi.eval(u1, u2, u3)};
}

ClCu cl_cu(const CopulaSpec2& c12, const CopulaSpec2& c13,
           const CopulaSpec2& c23, double u1, double u2, double u3,
           const QuadratureConfig& quad) {
  const double u[3] = {u1, u2, u3};
  double cl = -1e300, cu = 1e300;
  for (const Rotation& r : rotations(c12, c13, c23)) {
    const double ui = u[r.order[0] - 1];
    const double uj = u[r.order[1] - 1];
    const double uk = u[r.order[2] - 1];
    const LiftedCopula3 lw = c_lift(r.ij, r.jk, CopulaSpec2::w(), quad);
    const LiftedCopula3 lm = c_lift(r.ij, r.jk, CopulaSpec2::m(), quad);
    const double star_w = lw.eval(ui, uj, uk);
    const double star_m = lm.eval(ui, uj, uk);
    const double prod_w = lw.eval(ui, 1.0, uk);
    const double prod_m = lm.eval(ui, 1.0, uk);
    const double cik = r.ik.eval(ui, uk);
    cl = std::max({cl, star_w, star_m + cik - prod_m});
    cu = std::min({cu, star_m, star_w + cik - prod_w});
  }
  return {cl, cu};
}

JoeBounds joe_bounds(const CopulaSpec2& c12, const CopulaSpec2& c13,
                     const CopulaSpec2& c23, double u1, double u2, double u3) {
  const double a = c12.eval(u1, u2);
  const double b = c13.eval(u1, u3);
  const double c = c23.eval(u2, u3);
  const double fu = std::min({a, b, c, 1.0 - u1 - u2 - u3 + a + b + c});
  const double fl = std::max({0.0, a + b - u1, a + c - u2, b + c - u3});
  return {fl, fu};
}

BoundsReport improvement_report(const CopulaSpec2& c12, const CopulaSpec2& c13,
                                const CopulaSpec2& c23, const GridSpec& grid,
                                const QuadratureConfig& quad, double tol) {
  CompatVerdict verdict = check_triple_compat(c12, c13, c23, grid, quad, tol);
  if (verdict.refuted()) {
    const Witness& w = *verdict.witness;
    throw IncompatibleTripleError(
        "improvement_report: triple refuted at (" + std::to_string(w.u1) +
            ", " + std::to_string(w.u3) + "): value " + std::to_string(w.value) +
            " outside [" + std::to_string(w.lower) + ", " +
            std::to_string(w.upper) + "]",
        std::move(verdict));
  }

  const int m = grid.m;
  BoundsReport rep;
  rep.records.resize(grid.size3());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (long long idx = 0; idx < static_cast<long long>(rep.records.size());
       ++idx) {
    const double u1 = grid.point(static_cast<int>(idx / (m * m)));
    const double u2 = grid.point(static_cast<int>((idx / m) % m));
    const double u3 = grid.point(static_cast<int>(idx % m));
    const ClCu b = cl_cu(c12, c13, c23, u1, u2, u3, quad);
    const JoeBounds j = joe_bounds(c12, c13, c23, u1, u2, u3);
    rep.records[idx] = {u1, u2, u3, j.fl, b.cl, b.cu, j.fu};
  }

  for (const BoundsRecord& r : rep.records) {
    rep.max_gap_lower = std::max(rep.max_gap_lower, r.cl - r.fl);
    rep.max_gap_upper = std::max(rep.max_gap_upper, r.fu - r.cu);
    if (r.cl < r.fl - tol || r.cu > r.fu + tol)
      rep.violations.push_back(
          {r.u1, r.u2, r.u3, r.cl, r.fl, r.fu});
  }

  // Box-volume diagnostics over adjacent grid cells from the stored values.
  const auto at = [&](const std::vector<double>& vals, int i, int j, int k) {
    return vals[(static_cast<std::size_t>(i) * m + j) * m + k];
  };
  std::vector<double> cl_vals(rep.records.size()), cu_vals(rep.records.size());
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    cl_vals[i] = rep.records[i].cl;
    cu_vals[i] = rep.records[i].cu;
  }
  double cl_min = 0.0, cu_min = 0.0;
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < m; ++j)
      for (int k = 0; k + 1 < m; ++k) {
        const auto vol = [&](const std::vector<double>& v) {
          return at(v, i + 1, j + 1, k + 1) - at(v, i, j + 1, k + 1) -
                 at(v, i + 1, j, k + 1) - at(v, i + 1, j + 1, k) +
                 at(v, i, j, k + 1) + at(v, i, j + 1, k) +
                 at(v, i + 1, j, k) - at(v, i, j, k);
        };
        cl_min = std::min(cl_min, vol(cl_vals));
        cu_min = std::min(cu_min, vol(cu_vals));
      }
  rep.cl_min_box_volume = cl_min;
  rep.cu_min_box_volume = cu_min;
  return rep;
}

OrderCheck concordance_leq2(const CopulaSpec2& c, const CopulaSpec2& cp,
                            const GridSpec& grid, double tol) {
  const int m = grid.m;
  std::vector<double> gaps;
  map_indexed(grid.size2(), gaps, [&](std::size_t idx) {
    const double u = grid.point(static_cast<int>(idx / m));
    const double v = grid.point(static_cast<int>(idx % m));
    return c.eval(u, v) - cp.eval(u, v);
  });
  OrderCheck res;
  const WorstPoint w = worst_of(gaps);
  if (w.value > tol) {
    res.holds = false;
    res.witness = Witness{grid.point(static_cast<int>(w.index / m)), 0.0,
                          grid.point(static_cast<int>(w.index % m)), w.value,
                          0.0, 0.0};
  }
  return res;
}

OrderCheck lift_concordance_compare(const LiftedCopula3& l,
                                    const LiftedCopula3& lp,
                                    const GridSpec& grid, double tol) {
  // family order first: C_t <= C'_t on a 2-D grid for t over the union of
  // breakpoint intervals
  std::vector<double> ts = l.fam.breakpoints();
  ts.insert(ts.end(), lp.fam.breakpoints().begin(), lp.fam.breakpoints().end());
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] < 1e-12) continue;
    const double t = 0.5 * (ts[i] + ts[i + 1]);
    const OrderCheck piece =
        concordance_leq2(l.fam.piece_at(t), lp.fam.piece_at(t), grid, tol);
    if (!piece.holds) return piece;
  }
  return concordance_leq3(l.fn(), lp.fn(), grid, tol);
}

OrderCheck concordance_leq3(const Trivariate& d, const Trivariate& dp,
                            const GridSpec& grid, double tol) {
  const int m = grid.m;
  std::vector<double> gaps;
  map_indexed(grid.size3(), gaps, [&](std::size_t idx) {
    const double u1 = grid.point(static_cast<int>(idx / (m * m)));
    const double u2 = grid.point(static_cast<int>((idx / m) % m));
    const double u3 = grid.point(static_cast<int>(idx % m));
    const double plain = d(u1, u2, u3) - dp(u1, u2, u3);
    const double surv =
        survival3(d, u1, u2, u3) - survival3(dp, u1, u2, u3);
    return std::max(plain, surv);
  });
  OrderCheck res;
  const WorstPoint w = worst_of(gaps);
  if (w.value > tol) {
    res.holds = false;
    res.witness = Witness{grid.point(static_cast<int>(w.index / (m * m))),
                          grid.point(static_cast<int>((w.index / m) % m)),
                          grid.point(static_cast<int>(w.index % m)), w.value,
                          0.0, 0.0};
  }
  return res;
}

}  // namespace frechet3
