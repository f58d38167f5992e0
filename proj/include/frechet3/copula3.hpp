#pragma once

#include <array>
#include <functional>

#include "frechet3/copula2.hpp"

namespace frechet3 {

/// Any evaluable trivariate copula.
using Trivariate = std::function<double(double, double, double)>;

inline Trivariate pi3() {
  return [](double a, double b, double c) { return a * b * c; };
}
inline Trivariate m3() {
  return [](double a, double b, double c) { return std::min({a, b, c}); };
}
inline Trivariate w3() {
  return [](double a, double b, double c) {
    return std::max(a + b + c - 2.0, 0.0);
  };
}

/// Axis-aligned box in [0,1]^3, corners clamped.
struct Box3 {
  std::array<double, 3> lo, hi;
  Box3(std::array<double, 3> l, std::array<double, 3> h);
};

struct Perm3 {
  std::array<int, 3> sigma;  // 1-based images of (1,2,3)
  Perm3(int a, int b, int c);
};

double survival3(const Trivariate& d, double u1, double u2, double u3);
double volume3(const Trivariate& d, const Box3& b);

/// D^sigma(u1,u2,u3) = D(u_{sigma_1}, u_{sigma_2}, u_{sigma_3}).
Trivariate permute3(Trivariate d, const Perm3& sigma);

}  // namespace frechet3
