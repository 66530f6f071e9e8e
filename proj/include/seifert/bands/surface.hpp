#ifndef SEIFERT_BANDS_SURFACE_HPP
#define SEIFERT_BANDS_SURFACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "seifert/bands/word.hpp"

namespace seifert::bands {

/// Multigraph with one vertex per strand disk and one edge per band.
struct Spine {
  int vertices = 0;
  /// 0-based endpoints (i - 1, j - 1) of each letter, in word order.
  std::vector<std::pair<int, int>> edges;

  int components() const;
};

/// One pass through a band. Forward runs from the lower-indexed strand to the
/// higher-indexed one.
struct Traversal {
  std::size_t letter = 0;
  bool forward = true;

  bool operator==(const Traversal&) const = default;
};

/// Closed curve on the surface: band traversals in order, joined by arcs on
/// the disk shared by consecutive traversals.
struct HomologyCycle {
  std::size_t defining_letter = 0;
  std::vector<Traversal> steps;

  /// 0-based disk the curve is on just before steps[k].
  std::vector<int> disks(const BandWord& w) const;
};

struct BandSurface {
  BandWord word;
  Spine spine;
  std::vector<HomologyCycle> basis;
};

Spine make_spine(const BandWord& w);

/// Cycle basis of the spine. Letters are scanned in word order; a letter whose
/// endpoints are already connected closes a cycle: the band itself, forward,
/// followed by the current forest path back. The band then replaces the
/// oldest band on that path, so consecutive parallel bands give consecutive
/// cycles. Letters that join two components are forest edges.
BandSurface homology_basis(const BandWord& w);

}  // namespace seifert::bands

#endif  // SEIFERT_BANDS_SURFACE_HPP
