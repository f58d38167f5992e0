#include "frechet3/product_lift.hpp"

#include <algorithm>
#include <cmath>

namespace frechet3 {

namespace {

using Fn1 = std::function<double(double)>;

// Crossing functions whose roots are kinks of t -> C(x(t), y(t)) for the
// outer family C: argument crossing for M, anti-diagonal for W, cell
// boundaries for checkerboard.
void collect_crossing_fns(const CopulaSpec2& outer, const Fn1& x, const Fn1& y,
                          std::vector<Fn1>& out) {
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MFamily>) {
          out.push_back([x, y](double t) { return x(t) - y(t); });
        } else if constexpr (std::is_same_v<T, WFamily>) {
          out.push_back([x, y](double t) { return x(t) + y(t) - 1.0; });
        } else if constexpr (std::is_same_v<T, CheckerboardFamily>) {
          const int d = fam.d();
          for (int i = 1; i < d; ++i) {
            const double c = static_cast<double>(i) / d;
            out.push_back([x, c](double t) { return x(t) - c; });
            out.push_back([y, c](double t) { return y(t) - c; });
          }
        } else if constexpr (std::is_same_v<T, TransposeFamily>) {
          collect_crossing_fns(*fam.inner, y, x, out);
        }
        // Pi / FGM / Clayton are smooth in their arguments.
      },
      outer.node());
}

double bisect_root(const Fn1& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

// Scans each smooth segment for sign changes of the crossing functions and
// appends the located roots as additional cuts.
void add_crossing_cuts(const std::vector<Fn1>& fns, double upper,
                       std::vector<double>& cuts) {
  if (fns.empty()) return;
  std::vector<double> segs = cuts;
  segs.push_back(0.0);
  segs.push_back(upper);
  std::sort(segs.begin(), segs.end());
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
  constexpr int kScan = 96;
  for (std::size_t s = 0; s + 1 < segs.size(); ++s) {
    const double a = segs[s], b = segs[s + 1];
    if (b <= 0.0 || a >= upper || b - a < 1e-12) continue;
    for (const auto& f : fns) {
      double prev_t = a + (b - a) * 1e-9;
      double prev_v = f(prev_t);
      for (int k = 1; k <= kScan; ++k) {
        const double t = (k == kScan) ? b - (b - a) * 1e-9
                                      : a + (b - a) * k / kScan;
        const double v = f(t);
        if ((prev_v <= 0.0) != (v <= 0.0))
          cuts.push_back(bisect_root(f, prev_t, t));
        prev_t = t;
        prev_v = v;
      }
    }
  }
}

double lift_integral(const CopulaSpec2& a, const CopulaSpec2& b,
                     const FamilyPath& fam, double u1, double u2, double u3,
                     const QuadratureConfig& quad) {
  u1 = std::clamp(u1, 0.0, 1.0);
  u2 = std::clamp(u2, 0.0, 1.0);
  u3 = std::clamp(u3, 0.0, 1.0);
  if (u2 <= 0.0) return 0.0;
  if (u1 <= 0.0 || u3 <= 0.0) return 0.0;
  if (u1 >= 1.0 && u3 >= 1.0) return u2;

  const Fn1 x = [&a, u1](double t) { return a.cond_given_second(u1, t); };
  const Fn1 y = [&b, u3](double t) { return b.cond_given_first(u3, t); };

  std::vector<double> cuts;
  a.collect_cond_kinks_second(u1, cuts);
  b.collect_cond_kinks_first(u3, cuts);
  for (double bp : fam.breakpoints())
    if (bp > 0.0 && bp < 1.0) cuts.push_back(bp);

  std::vector<Fn1> crossings;
  for (const auto& piece : fam.pieces())
    collect_crossing_fns(piece, x, y, crossings);
  add_crossing_cuts(crossings, u2, cuts);

  const auto integrand = [&](double t) {
    return fam.piece_at(t).eval(x(t), y(t));
  };
  return integrate(integrand, 0.0, u2, std::move(cuts), quad);
}

}  // namespace

double c_product(const CopulaSpec2& a, const CopulaSpec2& b,
                 const FamilyPath& fam, double u1, double u3,
                 const QuadratureConfig& quad) {
  return lift_integral(a, b, fam, u1, 1.0, u3, quad);
}

double LiftedCopula3::eval(double u1, double u2, double u3) const {
  return lift_integral(a, b, fam, u1, u2, u3, quad);
}

std::function<double(double, double)> LiftedCopula3::marginal12() const {
  return [self = *this](double u1, double u2) {
    return self.eval(u1, u2, 1.0);
  };
}

std::function<double(double, double)> LiftedCopula3::marginal13() const {
  return [self = *this](double u1, double u3) {
    return self.eval(u1, 1.0, u3);
  };
}

std::function<double(double, double)> LiftedCopula3::marginal23() const {
  return [self = *this](double u2, double u3) {
    return self.eval(1.0, u2, u3);
  };
}

}  // namespace frechet3
