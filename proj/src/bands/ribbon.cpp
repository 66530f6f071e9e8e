#include "seifert/bands/ribbon.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifert::bands::ribbon {

namespace {

using i128 = __int128;

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 20;

struct Point2 {
  std::int64_t u = 0, v = 0;
};

Point2 flatten(const Point3& p, const Tilt& t) { return {t.a * p.x - t.p * p.z, t.a * p.y - t.q * p.z}; }

i128 cross(const Point2& a, const Point2& b) { return i128(a.u) * b.v - i128(a.v) * b.u; }

Point2 minus(const Point2& a, const Point2& b) { return {a.u - b.u, a.v - b.v}; }

i128 orient(const Point2& a, const Point2& b, const Point2& c) { return cross(minus(b, a), minus(c, a)); }

int sgn(i128 x) { return (x > 0) - (x < 0); }

// c is known to be collinear with ab.
bool within(const Point2& a, const Point2& b, const Point2& c) {
  return std::min(a.u, b.u) <= c.u && c.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= c.v &&
         c.v <= std::max(a.v, b.v);
}

Point3 add(const Point3& a, const Point3& b, std::int64_t scale) {
  return {a.x + scale * b.x, a.y + scale * b.y, a.z + scale * b.z};
}

}  // namespace

const std::vector<Tilt>& default_tilts() {
  static const std::vector<Tilt> tilts{
      {1009, 7, 3}, {997, -5, 11}, {1013, 13, -17}, {983, -19, -23}, {1021, 29, 31}};
  return tilts;
}

Model::Model(const BandSurface& surface, int slots) : surface_(&surface), slots_(slots) {
  if (slots < 1) throw std::invalid_argument("ribbon model needs at least one slot");
  const std::int64_t widest = kGrid * slots;
  delta_ = widest + 2 * kGrid;
  spacing_ = 2 * widest + 4 * kGrid;
  const auto reach_x = static_cast<std::int64_t>(surface.word.size() + 1) * spacing_ + widest;
  const auto reach_z = static_cast<std::int64_t>(surface.word.strands() + 1) * kHeight;
  if (reach_x >= kCoordinateLimit || reach_z >= kCoordinateLimit || delta_ + widest >= kCoordinateLimit)
    throw std::length_error("band word too large for the integer ribbon model");
}

void Model::band_vertices(std::size_t letter, std::int64_t o, std::vector<Vertex>& out) const {
  const auto& g = surface_->word.letters()[letter];
  const std::int64_t zi = -g.i * kHeight;
  const std::int64_t zj = -g.j * kHeight;
  const std::int64_t xs = static_cast<std::int64_t>(letter + 1) * spacing_;
  const std::int64_t d = delta_;
  const std::int64_t h = kHeight;
  out.push_back({{xs - o, 0, zi}, {0, 0, 1}});
  out.push_back({{xs - o, d, zi}, {0, 1, 1}});
  out.push_back({{xs - o, d, zi - h / 4}, {0, 1, 0}});
  out.push_back({{xs, d + kTwist * o, zi - 3 * h / 8}, {kTwist, 0, 0}});
  out.push_back({{xs + o, d, zi - h / 2}, {0, -1, 0}});
  out.push_back({{xs + o, d, zj}, {0, -1, 1}});
  out.push_back({{xs + o, 0, zj}, {0, 0, 1}});
}

std::vector<Model::Vertex> Model::trace(std::size_t k, int slot) const {
  if (k >= surface_->basis.size()) throw std::out_of_range("ribbon: no such basis cycle");
  if (slot < 1 || slot > slots_) throw std::out_of_range("ribbon: slot out of range");
  const std::int64_t o = kGrid * slot;
  const auto& steps = surface_->basis[k].steps;

  std::vector<std::vector<Vertex>> bands;
  for (const auto& step : steps) {
    std::vector<Vertex> piece;
    band_vertices(step.letter, o, piece);
    if (!step.forward) std::reverse(piece.begin(), piece.end());
    bands.push_back(std::move(piece));
  }

  std::vector<Vertex> out;
  for (std::size_t t = 0; t < bands.size(); ++t) {
    out.insert(out.end(), bands[t].begin(), bands[t].end());
    const Point3 arrive = bands[t].back().at;
    const Point3 leave = bands[(t + 1) % bands.size()].front().at;
    if (arrive.z != leave.z) throw std::logic_error("ribbon: consecutive bands do not share a disk");
    out.push_back({{arrive.x, -o, arrive.z}, {0, 0, 1}});
    out.push_back({{leave.x, -o, leave.z}, {0, 0, 1}});
  }
  return out;
}

Polygon Model::curve(std::size_t k, int slot) const {
  Polygon p;
  for (const auto& v : trace(k, slot)) p.push_back(v.at);
  return p;
}

Polygon Model::push_off(std::size_t k, int slot) const {
  Polygon p;
  for (const auto& v : trace(k, slot)) p.push_back(add(v.at, v.normal, kCoorientation * kPush));
  return p;
}

std::optional<PlanarDiagram> project(const Polygon& a, const Polygon& b, const Tilt& tilt) {
  PlanarDiagram diagram{2, {}};
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < na; ++i) {
    const Point3& a1 = a[i];
    const Point3& a2 = a[(i + 1) % na];
    const Point2 p1 = flatten(a1, tilt), p2 = flatten(a2, tilt);
    for (std::size_t j = 0; j < nb; ++j) {
      const Point3& b1 = b[j];
      const Point3& b2 = b[(j + 1) % nb];
      const Point2 q1 = flatten(b1, tilt), q2 = flatten(b2, tilt);

      const i128 d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
      const i128 d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
      if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0) {
        const bool touch = (d1 == 0 && within(q1, q2, p1)) || (d2 == 0 && within(q1, q2, p2)) ||
                           (d3 == 0 && within(p1, p2, q1)) || (d4 == 0 && within(p1, p2, q2));
        if (touch) return std::nullopt;
        continue;
      }
      if (sgn(d1) == sgn(d2) || sgn(d3) == sgn(d4)) continue;

      const Point2 r = minus(p2, p1), s = minus(q2, q1), w = minus(q1, p1);
      const i128 den = cross(r, s);
      const i128 za = i128(a1.z) * den + cross(w, s) * (a2.z - a1.z);
      const i128 zb = i128(b1.z) * den + cross(w, r) * (b2.z - b1.z);
      const int depth = sgn(za - zb) * sgn(den);
      if (depth == 0) throw std::logic_error("ribbon: the two polygons intersect");
      if (depth > 0)
        diagram.crossings.push_back({0, 1, sgn(den)});
      else
        diagram.crossings.push_back({1, 0, -sgn(den)});
    }
  }
  return diagram;
}

int linking_number(const Polygon& a, const Polygon& b) {
  for (const auto& tilt : default_tilts())
    if (auto d = project(a, b, tilt)) return bands::linking_number(*d, 0, 1);
  throw std::runtime_error("ribbon: no generic projection among the default tilts");
}

}  // namespace seifert::bands::ribbon
