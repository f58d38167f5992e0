#include "frechet3/copula3.hpp"

#include <algorithm>

namespace frechet3 {

namespace {
double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }
}  // namespace

Box3::Box3(std::array<double, 3> l, std::array<double, 3> h) : lo(l), hi(h) {
  for (int i = 0; i < 3; ++i) {
    lo[i] = clamp01(lo[i]);
    hi[i] = clamp01(hi[i]);
    if (lo[i] > hi[i])
      throw InvalidSpecError("Box3: lower corner must not exceed upper corner");
  }
}

Perm3::Perm3(int a, int b, int c) : sigma{a, b, c} {
  int seen = 0;
  for (int s : sigma) {
    if (s < 1 || s > 3) throw InvalidSpecError("Perm3: entries must be 1..3");
    seen |= 1 << s;
  }
  if (seen != 0b1110) throw InvalidSpecError("Perm3: not a permutation of (1,2,3)");
}

double survival3(const Trivariate& d, double u1, double u2, double u3) {
  return 1.0 - u1 - u2 - u3 + d(u1, u2, 1.0) + d(u1, 1.0, u3) +
         d(1.0, u2, u3) - d(u1, u2, u3);
}

double volume3(const Trivariate& d, const Box3& b) {
  double s = 0.0;
  for (int mask = 0; mask < 8; ++mask) {
    double z[3];
    int n_lo = 0;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1 << i)) {
        z[i] = b.hi[i];
      } else {
        z[i] = b.lo[i];
        ++n_lo;
      }
    }
    s += (n_lo % 2 == 0 ? 1.0 : -1.0) * d(z[0], z[1], z[2]);
  }
  return s;
}

Trivariate permute3(Trivariate d, const Perm3& sigma) {
  const std::array<int, 3> s = sigma.sigma;
  return [d = std::move(d), s](double u1, double u2, double u3) {
    const double u[3] = {u1, u2, u3};
    return d(u[s[0] - 1], u[s[1] - 1], u[s[2] - 1]);
  };
}

}  // namespace frechet3
