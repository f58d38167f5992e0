#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "frechet3/copula2.hpp"
#include "frechet3/copula3.hpp"
#include "frechet3/grid.hpp"
#include "frechet3/product_lift.hpp"

namespace frechet3 {

/// Generalized (cadlag) inverse of the conditional d.f. u -> dA(u,t)/dt:
/// the infimum of {u : cond_given_second(A, u, t) >= p}. Closed forms for
/// Pi, M, W, FGM and Clayton; bisection to 1e-10 otherwise.
double inverse_conditional(const CopulaSpec2& a, double t, double p);

/// One draw (p, q) distributed according to C.
std::pair<double, double> sample_pair(const CopulaSpec2& c,
                                      std::mt19937_64& rng);

struct SampleBatch {
  std::vector<std::array<double, 3>> rows;
  std::uint64_t seed = 0;
};

/// Conditional-distribution sampling of a lifted copula: u2 = t uniform,
/// (p, q) ~ C_t, then u1 and u3 by conditional inversion of A and B.
/// Chunks derive their own seeds from (seed, chunk), so the batch is
/// reproducible for any worker count.
SampleBatch sample_lift(const LiftedCopula3& l, std::size_t n,
                        std::uint64_t seed);

/// Empirical d.f. of a sample batch (normalized rank counts).
class EmpiricalCopula3 {
 public:
  explicit EmpiricalCopula3(const SampleBatch& batch);
  double eval(double u1, double u2, double u3) const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::array<double, 3>> rows_;
};

/// Max over the grid of |empirical d.f. - analytic lifting|.
double empirical_vs_analytic(const LiftedCopula3& l,
                             const EmpiricalCopula3& emp, const GridSpec& grid);

/// Kolmogorov-Smirnov sup-distance of a sample against the uniform d.f.
double uniform_ks_distance(std::vector<double> samples);

}  // namespace frechet3
