#include "frechet3/envelope.hpp"

#include <algorithm>

#include "frechet3/scan.hpp"

namespace frechet3 {

EnvelopeReport frechet_envelope_check2(const CopulaSpec2& c,
                                       const GridSpec& grid, double eps) {
  const int m = grid.m;
  std::vector<double> gaps;
  map_indexed(grid.size2(), gaps, [&](std::size_t idx) {
    const double u = grid.point(static_cast<int>(idx / m));
    const double v = grid.point(static_cast<int>(idx % m));
    const double val = c.eval(u, v);
    const double lo = std::max(u + v - 1.0, 0.0);
    const double hi = std::min(u, v);
    return std::max(lo - val, val - hi);
  });
  EnvelopeReport rep;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    if (gaps[i] > eps) ++rep.violations;
  const WorstPoint w = worst_of(gaps);
  rep.worst_gap = std::max(w.value, 0.0);
  rep.worst_point = {grid.point(static_cast<int>(w.index / m)),
                     grid.point(static_cast<int>(w.index % m)), 0.0};
  return rep;
}

EnvelopeReport frechet_envelope_check3(const Trivariate& d,
                                       const GridSpec& grid, double eps) {
  const int m = grid.m;
  std::vector<double> gaps;
  map_indexed(grid.size3(), gaps, [&](std::size_t idx) {
    const double u1 = grid.point(static_cast<int>(idx / (m * m)));
    const double u2 = grid.point(static_cast<int>((idx / m) % m));
    const double u3 = grid.point(static_cast<int>(idx % m));
    const double val = d(u1, u2, u3);
    const double lo = std::max(u1 + u2 + u3 - 2.0, 0.0);
    const double hi = std::min({u1, u2, u3});
    return std::max(lo - val, val - hi);
  });
  EnvelopeReport rep;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    if (gaps[i] > eps) ++rep.violations;
  const WorstPoint w = worst_of(gaps);
  rep.worst_gap = std::max(w.value, 0.0);
  rep.worst_point = {grid.point(static_cast<int>(w.index / (m * m))),
                     grid.point(static_cast<int>((w.index / m) % m)),
                     grid.point(static_cast<int>(w.index % m))};
  return rep;
}

}  // namespace frechet3
