#ifndef SEIFERT_LEGENDRIAN_RESOLUTION_HPP
#define SEIFERT_LEGENDRIAN_RESOLUTION_HPP

#include <cstddef>
#include <vector>

#include "seifert/legendrian/front.hpp"

namespace seifert::legendrian {

enum class CrossingOrigin { FrontCrossing, RightCuspLoop };

struct ResolvedCrossing {
  CrossingOrigin origin = CrossingOrigin::FrontCrossing;
  std::size_t event = 0;  // index of the front event it comes from
  int sign = 1;

  bool operator==(const ResolvedCrossing&) const = default;
};

/// Closed planar diagram read with blackboard framing.
struct ResolvedDiagram {
  std::vector<ResolvedCrossing> crossings;
};

/// Left cusps smooth out; every right cusp becomes a small loop with one
/// crossing; front crossings persist with their signs.
ResolvedDiagram ng_resolution(const FrontDiagram& f);

int blackboard_writhe(const ResolvedDiagram& r);

}  // namespace seifert::legendrian

#endif  // SEIFERT_LEGENDRIAN_RESOLUTION_HPP
