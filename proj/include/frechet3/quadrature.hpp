#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace frechet3 {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureConfig {
  int nodes = 16;        // Gauss-Legendre nodes per panel
  int panels = 32;       // panels per smooth segment
  double tol = 1e-8;     // absolute tolerance for panel-doubling convergence
  int max_doublings = 4; // doubling cap before reporting non-convergence

  void validate() const {
    if (nodes < 2) throw QuadratureError("quadrature: nodes must be >= 2");
    if (panels < 1) throw QuadratureError("quadrature: panels must be >= 1");
    if (!(tol > 0.0)) throw QuadratureError("quadrature: tol must be > 0");
  }
};

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

/// Integrates f over [a, b], splitting at the interior cut points (kinks or
/// jumps of f) so each panel sees a smooth integrand. Each smooth segment
/// starts at cfg.panels panels; panels are doubled until two successive
/// estimates agree to cfg.tol, else QuadratureError.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::vector<double> cuts, const QuadratureConfig& cfg);

}  // namespace frechet3
