#include "frechet3/copula2.hpp"

#include <algorithm>
#include <cmath>

namespace frechet3 {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// log(e^a + e^b - 1) without overflow; a, b >= 0 here.
double log_sum_m1(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
}

double clayton_eval(double alpha, double u, double v) {
  if (u <= 0.0 || v <= 0.0) return 0.0;
  if (u >= 1.0) return v;
  if (v >= 1.0) return u;
  const double a = -alpha * std::log(u);
  const double b = -alpha * std::log(v);
  return std::exp(-log_sum_m1(a, b) / alpha);
}

// d/dt C(u,t) = t^{-alpha-1} (u^{-alpha} + t^{-alpha} - 1)^{-(alpha+1)/alpha}
double clayton_cond(double alpha, double u, double t) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  if (t <= 0.0) return 1.0;  // limit as t -> 0+
  if (t >= 1.0) return std::pow(u, alpha + 1.0);
  const double a = -alpha * std::log(u);
  const double b = -alpha * std::log(t);
  const double logp =
      (-alpha - 1.0) * std::log(t) - (alpha + 1.0) / alpha * log_sum_m1(a, b);
  return std::exp(logp);
}

double checkerboard_eval(const CheckerboardFamily& cb, double u, double v) {
  const int d = cb.d();
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double fu = clamp01(d * u - i);
    if (fu <= 0.0) break;
    for (int j = 0; j < d; ++j) {
      const double fv = clamp01(d * v - j);
      if (fv <= 0.0) break;
      s += cb.weights[i][j] * fu * fv;
    }
  }
  return s;
}

// d/dt C(u,t): density along the column containing t, left limit at cell
// boundaries.
double checkerboard_cond(const CheckerboardFamily& cb, double u, double t) {
  const int d = cb.d();
  if (t <= 0.0) t = 0.0;
  int j = static_cast<int>(std::ceil(t * d)) - 1;  // left-limit column
  j = std::min(std::max(j, 0), d - 1);
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    const double fu = clamp01(d * u - i);
    if (fu <= 0.0) break;
    s += cb.weights[i][j] * fu;
  }
  return std::min(1.0, d * s);
}

void validate_checkerboard(const std::vector<std::vector<double>>& w) {
  const std::size_t d = w.size();
  if (d == 0) throw InvalidSpecError("checkerboard: empty weight matrix");
  const double tol = 1e-9;
  double total = 0.0;
  std::vector<double> col_sum(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    if (w[i].size() != d)
      throw InvalidSpecError("checkerboard: weight matrix must be square");
    double row_sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (w[i][j] < 0.0)
        throw InvalidSpecError("checkerboard: negative weight");
      row_sum += w[i][j];
      col_sum[j] += w[i][j];
      total += w[i][j];
    }
    if (std::abs(row_sum - 1.0 / d) > tol)
      throw InvalidSpecError("checkerboard: row mass must be 1/d");
  }
  for (std::size_t j = 0; j < d; ++j)
    if (std::abs(col_sum[j] - 1.0 / d) > tol)
      throw InvalidSpecError("checkerboard: column mass must be 1/d");
  if (std::abs(total - 1.0) > tol)
    throw InvalidSpecError("checkerboard: weights must sum to 1");
}

}  // namespace

Rect2::Rect2(double ul, double vl, double uh, double vh)
    : u_lo(clamp01(ul)), v_lo(clamp01(vl)), u_hi(clamp01(uh)), v_hi(clamp01(vh)) {
  if (u_lo > u_hi || v_lo > v_hi)
    throw InvalidSpecError("Rect2: lower corner must not exceed upper corner");
}

CopulaSpec2 CopulaSpec2::fgm(double theta) {
  if (!(theta >= -1.0 && theta <= 1.0))
    throw InvalidSpecError("fgm: theta must lie in [-1, 1]");
  return CopulaSpec2(FgmFamily{theta});
}

CopulaSpec2 CopulaSpec2::clayton(double alpha) {
  if (!(alpha > 0.0))
    throw InvalidSpecError("clayton: alpha must be positive");
  return CopulaSpec2(ClaytonFamily{alpha});
}

CopulaSpec2 CopulaSpec2::checkerboard(std::vector<std::vector<double>> weights) {
  validate_checkerboard(weights);
  return CopulaSpec2(CheckerboardFamily{std::move(weights)});
}

CopulaSpec2 CopulaSpec2::transpose(CopulaSpec2 inner) {
  return CopulaSpec2(
      TransposeFamily{std::make_shared<const CopulaSpec2>(std::move(inner))});
}

double CopulaSpec2::eval(double u, double v) const {
  u = clamp01(u);
  v = clamp01(v);
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily>) {
          return u * v;
        } else if constexpr (std::is_same_v<T, MFamily>) {
          return std::min(u, v);
        } else if constexpr (std::is_same_v<T, WFamily>) {
          return std::max(u + v - 1.0, 0.0);
        } else if constexpr (std::is_same_v<T, FgmFamily>) {
          return u * v * (1.0 + fam.theta * (1.0 - u) * (1.0 - v));
        } else if constexpr (std::is_same_v<T, ClaytonFamily>) {
          return clayton_eval(fam.alpha, u, v);
        } else if constexpr (std::is_same_v<T, CheckerboardFamily>) {
          return checkerboard_eval(fam, u, v);
        } else {
          return fam.inner->eval(v, u);
        }
      },
      node_);
}

double CopulaSpec2::cond_given_second(double u, double t) const {
  u = clamp01(u);
  t = clamp01(t);
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily>) {
          return u;
        } else if constexpr (std::is_same_v<T, MFamily>) {
          // left limit at the jump t = u
          return (u > 0.0 && t <= u) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, WFamily>) {
          return t > 1.0 - u ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, FgmFamily>) {
          return u * (1.0 + fam.theta * (1.0 - u) * (1.0 - 2.0 * t));
        } else if constexpr (std::is_same_v<T, ClaytonFamily>) {
          return clayton_cond(fam.alpha, u, t);
        } else if constexpr (std::is_same_v<T, CheckerboardFamily>) {
          return checkerboard_cond(fam, u, t);
        } else {
          return fam.inner->cond_given_first(u, t);
        }
      },
      node_);
}

double CopulaSpec2::cond_given_first(double v, double t) const {
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, TransposeFamily>) {
          return fam.inner->cond_given_second(v, t);
        } else {
          return transposed().cond_given_second(v, t);
        }
      },
      node_);
}

double CopulaSpec2::volume(const Rect2& r) const {
  return eval(r.u_hi, r.v_hi) - eval(r.u_hi, r.v_lo) - eval(r.u_lo, r.v_hi) +
         eval(r.u_lo, r.v_lo);
}

CopulaSpec2 CopulaSpec2::transposed() const {
  return std::visit(
      [&](const auto& fam) -> CopulaSpec2 {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily> || std::is_same_v<T, MFamily> ||
                      std::is_same_v<T, WFamily>) {
          return *this;  // symmetric
        } else if constexpr (std::is_same_v<T, FgmFamily> ||
                             std::is_same_v<T, ClaytonFamily>) {
          return *this;  // symmetric
        } else if constexpr (std::is_same_v<T, TransposeFamily>) {
          return *fam.inner;
        } else {
          const int d = fam.d();
          std::vector<std::vector<double>> w(d, std::vector<double>(d));
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) w[i][j] = fam.weights[j][i];
          return CopulaSpec2::checkerboard(w);
        }
      },
      node_);
}

void CopulaSpec2::collect_cond_kinks_second(double u,
                                            std::vector<double>& out) const {
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, MFamily>) {
          if (u > 0.0 && u < 1.0) out.push_back(u);
        } else if constexpr (std::is_same_v<T, WFamily>) {
          if (u > 0.0 && u < 1.0) out.push_back(1.0 - u);
        } else if constexpr (std::is_same_v<T, CheckerboardFamily>) {
          const int d = fam.d();
          for (int j = 1; j < d; ++j) out.push_back(static_cast<double>(j) / d);
        } else if constexpr (std::is_same_v<T, ClaytonFamily>) {
          // for alpha < 1 the conditional behaves like 1 - c t^alpha near
          // t = 0; a graded mesh tames the unbounded derivative there
          if (fam.alpha < 1.0)
            for (double c : {1e-8, 1e-6, 1e-4, 1e-2}) out.push_back(c);
        } else if constexpr (std::is_same_v<T, TransposeFamily>) {
          fam.inner->collect_cond_kinks_first(u, out);
        }
        // Pi / FGM conditionals are smooth in t.
      },
      node_);
}

void CopulaSpec2::collect_cond_kinks_first(double v,
                                           std::vector<double>& out) const {
  transposed().collect_cond_kinks_second(v, out);
}

double cond_given_second_fd(const CopulaSpec2& c, double u, double t,
                            double h) {
  double lo = t - h, hi = t + h;
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  return (c.eval(u, hi) - c.eval(u, lo)) / (hi - lo);
}

}  // namespace frechet3
