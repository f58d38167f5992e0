#include "frechet3/family_path.hpp"

#include <algorithm>
#include <cmath>

namespace frechet3 {

FamilyPath::FamilyPath(std::vector<double> breakpoints,
                       std::vector<CopulaSpec2> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breakpoints_.size() != pieces_.size() + 1)
    throw InvalidSpecError("family path: need k pieces and k+1 breakpoints");
  if (std::abs(breakpoints_.front()) > 1e-14 ||
      std::abs(breakpoints_.back() - 1.0) > 1e-14)
    throw InvalidSpecError("family path: breakpoints must span [0, 1]");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw InvalidSpecError("family path: breakpoints must be strictly increasing");
}

FamilyPath FamilyPath::constant(CopulaSpec2 c) {
  return FamilyPath({0.0, 1.0}, {std::move(c)});
}

const CopulaSpec2& FamilyPath::piece_at(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx > 0) --idx;
  if (idx >= pieces_.size()) idx = pieces_.size() - 1;
  return pieces_[idx];
}

}  // namespace frechet3
