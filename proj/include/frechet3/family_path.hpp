#pragma once

#include <vector>

#include "frechet3/copula2.hpp"

namespace frechet3 {

/// A t-indexed family {C_t} on [0,1], piecewise constant over the
/// breakpoint intervals. A constant family has a single piece.
class FamilyPath {
 public:
  FamilyPath(std::vector<double> breakpoints, std::vector<CopulaSpec2> pieces);

  /// Constant family C_t = c.
  static FamilyPath constant(CopulaSpec2 c);

  const CopulaSpec2& piece_at(double t) const;
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<CopulaSpec2>& pieces() const { return pieces_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<CopulaSpec2> pieces_;
};

}  // namespace frechet3
