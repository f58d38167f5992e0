#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace frechet3 {

struct InvalidSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned rectangle in [0,1]^2, corners clamped on construction.
struct Rect2 {
  double u_lo, v_lo, u_hi, v_hi;
  Rect2(double ul, double vl, double uh, double vh);
};

struct PiFamily {};
struct MFamily {};
struct WFamily {};

struct FgmFamily {
  double theta;  // in [-1, 1]
};

struct ClaytonFamily {
  double alpha;  // > 0
};

/// Piecewise-uniform copula on a d x d grid partition. weights[i][j] is the
/// probability mass of cell [i/d,(i+1)/d] x [j/d,(j+1)/d]; every row and
/// column must sum to 1/d so the margins are uniform.
struct CheckerboardFamily {
  std::vector<std::vector<double>> weights;
  int d() const { return static_cast<int>(weights.size()); }
};

class CopulaSpec2;

struct TransposeFamily {
  std::shared_ptr<const CopulaSpec2> inner;
};

/// Symbolic description of a bivariate copula. Evaluation, the two
/// conditional distribution functions (partial derivatives), rectangle
/// volumes and transposition are all closed-form.
class CopulaSpec2 {
 public:
  using Node = std::variant<PiFamily, MFamily, WFamily, FgmFamily,
                            ClaytonFamily, CheckerboardFamily, TransposeFamily>;

  static CopulaSpec2 pi() { return CopulaSpec2(PiFamily{}); }
  static CopulaSpec2 m() { return CopulaSpec2(MFamily{}); }
  static CopulaSpec2 w() { return CopulaSpec2(WFamily{}); }
  static CopulaSpec2 fgm(double theta);
  static CopulaSpec2 clayton(double alpha);
  static CopulaSpec2 checkerboard(std::vector<std::vector<double>> weights);
  static CopulaSpec2 transpose(CopulaSpec2 inner);

  /// C(u, v).
  double eval(double u, double v) const;

  /// P(U <= u | V = t) = d/dt C(u, t). At jump points of step-function
  /// conditionals (M, W, checkerboard) the left limit is returned.
  double cond_given_second(double u, double t) const;

  /// P(V <= v | U = t) = d/dt C(t, v).
  double cond_given_first(double v, double t) const;

  /// Alternating-sign corner sum over r; >= 0 for every copula.
  double volume(const Rect2& r) const;

  CopulaSpec2 transposed() const;

  /// Interior abscissae where t -> cond_given_second(u, t) jumps or kinks.
  void collect_cond_kinks_second(double u, std::vector<double>& out) const;
  /// Same for t -> cond_given_first(v, t).
  void collect_cond_kinks_first(double v, std::vector<double>& out) const;

  const Node& node() const { return node_; }

 private:
  explicit CopulaSpec2(Node n) : node_(std::move(n)) {}
  Node node_;
};

/// Central finite difference of t -> C(u,t) with step h (one-sided at the
/// boundaries), for cross-checking the closed-form conditionals.
double cond_given_second_fd(const CopulaSpec2& c, double u, double t,
                            double h = 1e-6);

}  // namespace frechet3
