#ifndef SEIFERT_BANDS_RIBBON_HPP
#define SEIFERT_BANDS_RIBBON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "seifert/bands/diagram.hpp"
#include "seifert/bands/surface.hpp"

namespace seifert::bands::ribbon {

struct Point3 {
  std::int64_t x = 0, y = 0, z = 0;

  bool operator==(const Point3&) const = default;
};

/// Closed polygon; the last vertex joins back to the first.
using Polygon = std::vector<Point3>;

/// Parallel projection (x, y, z) -> (a x - p z, a y - q z), viewed from +z.
struct Tilt {
  std::int64_t a = 1009, p = 7, q = 3;
};

/// Tilts tried in order until one gives a generic projection.
const std::vector<Tilt>& default_tilts();

/// Integer piecewise-linear model of the canonical surface.
///
/// Strand k's disk is the half-plane y <= 0 at height z = -k H, normal +z, so
/// strand 1 is nearest the viewer. Letter s sits at x = (s + 1) X: its band
/// leaves disk i along +y, drops at y = delta in front of the edges of the
/// disks in between, makes one half twist and returns to disk j. A curve
/// drawn at offset o crosses the band at x = x_s - o on disk i and x = x_s + o
/// on disk j; on a disk it runs down to y = -depth, across, and back up.
class Model {
 public:
  static constexpr std::int64_t kGrid = 4;
  static constexpr std::int64_t kHeight = 64;
  static constexpr std::int64_t kPush = 1;
  /// Sense of the half twist; fixed so that one band gives framing -1.
  static constexpr int kTwist = -1;
  /// Side the positive push-off goes to, relative to the disk normal +z.
  static constexpr int kCoorientation = 1;

  /// Room for `slots` distinct offsets per band.
  Model(const BandSurface& surface, int slots);

  /// Basis cycle k drawn with offset and depth kGrid * slot, 1 <= slot <= slots.
  Polygon curve(std::size_t k, int slot) const;

  /// The same curve pushed kPush off the surface along the co-orientation.
  Polygon push_off(std::size_t k, int slot) const;

 private:
  struct Vertex {
    Point3 at;
    Point3 normal;
  };

  std::vector<Vertex> trace(std::size_t k, int slot) const;
  void band_vertices(std::size_t letter, std::int64_t offset, std::vector<Vertex>& out) const;

  const BandSurface* surface_;
  int slots_;
  std::int64_t delta_;
  std::int64_t spacing_;
};

/// Crossings of the projected pair, or nullopt if the projection is not
/// generic (touching or overlapping edges). Component 0 is a, 1 is b.
/// Throws std::logic_error if the polygons actually meet in space.
std::optional<PlanarDiagram> project(const Polygon& a, const Polygon& b, const Tilt& tilt);

/// Linking number of two disjoint closed polygons.
int linking_number(const Polygon& a, const Polygon& b);

}  // namespace seifert::bands::ribbon

#endif  // SEIFERT_BANDS_RIBBON_HPP
