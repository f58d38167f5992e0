#include "frechet3/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "frechet3/scan.hpp"

namespace frechet3 {

namespace {

double unif(std::mt19937_64& rng) {
  // 53-bit mantissa draw in [0, 1)
  return (rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (chunk + 1));
}

double fgm_inverse(double theta, double t, double p) {
  const double a = theta * (1.0 - 2.0 * t);
  if (std::abs(a) < 1e-12) return p;
  const double disc = (1.0 + a) * (1.0 + a) - 4.0 * a * p;
  const double s = std::sqrt(std::max(disc, 0.0));
  const double r1 = ((1.0 + a) - s) / (2.0 * a);
  const double r2 = ((1.0 + a) + s) / (2.0 * a);
  const double r = (r1 >= -1e-9 && r1 <= 1.0 + 1e-9) ? r1 : r2;
  return std::clamp(r, 0.0, 1.0);
}

double clayton_inverse(double alpha, double t, double p) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return std::pow(p, 1.0 / (alpha + 1.0));
  const double g = std::pow(p, -alpha / (alpha + 1.0)) - 1.0;
  const double base = 1.0 + std::pow(t, -alpha) * g;
  return std::pow(base, -1.0 / alpha);
}

double bisect_inverse(const CopulaSpec2& a, double t, double p) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (a.cond_given_second(mid, t) >= p)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

double inverse_conditional(const CopulaSpec2& a, double t, double p) {
  t = std::clamp(t, 0.0, 1.0);
  p = std::clamp(p, 0.0, 1.0);
  if (p <= 0.0) return 0.0;
  return std::visit(
      [&](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily>) {
          return p;
        } else if constexpr (std::is_same_v<T, MFamily>) {
          return t;
        } else if constexpr (std::is_same_v<T, WFamily>) {
          return 1.0 - t;
        } else if constexpr (std::is_same_v<T, FgmFamily>) {
          return fgm_inverse(fam.theta, t, p);
        } else if constexpr (std::is_same_v<T, ClaytonFamily>) {
          return clayton_inverse(fam.alpha, t, p);
        } else {
          return bisect_inverse(a, t, p);
        }
      },
      a.node());
}

std::pair<double, double> sample_pair(const CopulaSpec2& c,
                                      std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& fam) -> std::pair<double, double> {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily>) {
          const double p = unif(rng);
          return {p, unif(rng)};
        } else if constexpr (std::is_same_v<T, MFamily>) {
          const double p = unif(rng);
          return {p, p};
        } else if constexpr (std::is_same_v<T, WFamily>) {
          const double p = unif(rng);
          return {p, 1.0 - p};
        } else {
          const double p = unif(rng);
          const double v = unif(rng);
          return {p, inverse_conditional(c.transposed(), p, v)};
        }
      },
      c.node());
}

SampleBatch sample_lift(const LiftedCopula3& l, std::size_t n,
                        std::uint64_t seed) {
  SampleBatch batch;
  batch.seed = seed;
  batch.rows.resize(n);
  const CopulaSpec2 b_t = l.b.transposed();
  constexpr std::size_t kChunk = 4096;
  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
    std::mt19937_64 rng(chunk_seed(seed, static_cast<std::uint64_t>(c)));
    const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
    const std::size_t end = std::min(begin + kChunk, n);
    for (std::size_t i = begin; i < end; ++i) {
      const double t = unif(rng);
      const auto [p, q] = sample_pair(l.fam.piece_at(t), rng);
      batch.rows[i] = {inverse_conditional(l.a, t, p), t,
                       inverse_conditional(b_t, t, q)};
    }
  }
  return batch;
}

EmpiricalCopula3::EmpiricalCopula3(const SampleBatch& batch)
    : rows_(batch.rows) {
  if (rows_.empty()) throw InvalidSpecError("empirical copula: empty batch");
}

double EmpiricalCopula3::eval(double u1, double u2, double u3) const {
  std::size_t count = 0;
  for (const auto& r : rows_)
    if (r[0] <= u1 && r[1] <= u2 && r[2] <= u3) ++count;
  return static_cast<double>(count) / rows_.size();
}

double empirical_vs_analytic(const LiftedCopula3& l, const EmpiricalCopula3& emp,
                             const GridSpec& grid) {
  const int m = grid.m;
  std::vector<double> gaps;
  map_indexed(grid.size3(), gaps, [&](std::size_t idx) {
    const double u1 = grid.point(static_cast<int>(idx / (m * m)));
    const double u2 = grid.point(static_cast<int>((idx / m) % m));
    const double u3 = grid.point(static_cast<int>(idx % m));
    return std::abs(emp.eval(u1, u2, u3) - l.eval(u1, u2, u3));
  });
  return worst_of(gaps).value;
}

double uniform_ks_distance(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    worst = std::max({worst, (i + 1) / n - x, x - i / n});
  }
  return worst;
}

}  // namespace frechet3
