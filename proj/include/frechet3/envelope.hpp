#pragma once

#include <array>

#include "frechet3/copula2.hpp"
#include "frechet3/copula3.hpp"
#include "frechet3/grid.hpp"

namespace frechet3 {

/// Result of scanning the Frechet-Hoeffding envelope W <= C <= M on a grid.
struct EnvelopeReport {
  int violations = 0;
  double worst_gap = 0.0;             // largest excursion outside the envelope
  std::array<double, 3> worst_point{};  // third coordinate unused in 2-D
};

EnvelopeReport frechet_envelope_check2(const CopulaSpec2& c, const GridSpec& grid,
                                       double eps = 1e-12);
EnvelopeReport frechet_envelope_check3(const Trivariate& d, const GridSpec& grid,
                                       double eps = 1e-6);

}  // namespace frechet3
