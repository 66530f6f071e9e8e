#include "seifert/legendrian/resolution.hpp"

#include "trace.hpp"

namespace seifert::legendrian {

namespace {

// The loop at a right cusp: the entering branch runs on over the returning
// one. Entering along the upper branch, the two pieces near the crossing
// point run along (1, -1) (over) and (-1, -1) (under); entering along the
// lower branch reverses both.
int loop_sign(int entry) {
  const int ox = entry, oy = -entry;
  const int ux = -entry, uy = -entry;
  const int cross = ox * uy - oy * ux;
  return cross > 0 ? 1 : -1;
}

}  // namespace

ResolvedDiagram ng_resolution(const FrontDiagram& f) {
  const auto trace = detail::trace(f.events());
  ResolvedDiagram r;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& e = f.events()[k];
    if (e.kind == EventKind::Crossing) r.crossings.push_back({CrossingOrigin::FrontCrossing, k, e.sign});
    if (e.kind == EventKind::RightCusp)
      r.crossings.push_back({CrossingOrigin::RightCuspLoop, k, loop_sign(trace.cusp_entry[k])});
  }
  return r;
}

int blackboard_writhe(const ResolvedDiagram& r) {
  int w = 0;
  for (const auto& c : r.crossings) w += c.sign;
  return w;
}

}  // namespace seifert::legendrian
