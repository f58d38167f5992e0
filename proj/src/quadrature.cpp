#include "frechet3/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace frechet3 {

namespace {

struct Rule {
  std::vector<double> x, w;
};

// Newton iteration on the Legendre recurrence.
Rule make_rule(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  return r;
}

const Rule& rule_for(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double gl_segment(const std::function<double(double)>& f, double a, double b,
                  int panels, const Rule& r) {
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    double ps = 0.0;
    for (std::size_t k = 0; k < r.x.size(); ++k)
      ps += r.w[k] * f(mid + half * r.x[k]);
    s += half * ps;
  }
  return s;
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return rule_for(n).x; }
const std::vector<double>& gl_weights(int n) { return rule_for(n).w; }

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::vector<double> cuts, const QuadratureConfig& cfg) {
  cfg.validate();
  if (b <= a) return 0.0;
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-14; }),
             cuts.end());
  const Rule& r = rule_for(cfg.nodes);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (hi <= a || lo >= b) continue;
    const double sa = std::max(lo, a), sb = std::min(hi, b);
    if (sb - sa < 1e-14) continue;
    int panels = cfg.panels;
    double prev = gl_segment(f, sa, sb, panels, r);
    bool converged = false;
    for (int d = 0; d < cfg.max_doublings; ++d) {
      panels *= 2;
      const double cur = gl_segment(f, sa, sb, panels, r);
      if (std::abs(cur - prev) <= cfg.tol) {
        prev = cur;
        converged = true;
        break;
      }
      prev = cur;
    }
    if (!converged)
      throw QuadratureError("quadrature did not converge on [" +
                            std::to_string(sa) + ", " + std::to_string(sb) +
                            "] at " + std::to_string(panels) + " panels");
    total += prev;
  }
  return total;
}

}  // namespace frechet3
