#ifndef SEIFERT_SRC_LEGENDRIAN_TRACE_HPP
#define SEIFERT_SRC_LEGENDRIAN_TRACE_HPP

#include <cstddef>
#include <vector>

#include "seifert/legendrian/front.hpp"

namespace seifert::legendrian::detail {

/// Orientation data from walking every component of a structurally valid
/// front. Directions are +1 for rightward, -1 for leftward, 0 if unset.
struct Trace {
  int components = 0;
  /// Per crossing event: direction of the strand running from p + 1 down to
  /// p (the over strand) and of the one running from p up to p + 1.
  std::vector<int> falling;
  std::vector<int> rising;
  /// Per right cusp event: +1 if the walk enters it along the upper branch.
  std::vector<int> cusp_entry;

  int crossing_sign(std::size_t k) const { return falling[k] * rising[k]; }
};

Trace trace(const std::vector<FrontEvent>& events);

}  // namespace seifert::legendrian::detail

#endif  // SEIFERT_SRC_LEGENDRIAN_TRACE_HPP
