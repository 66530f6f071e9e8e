#ifndef SEIFERT_BANDS_DIAGRAM_HPP
#define SEIFERT_BANDS_DIAGRAM_HPP

#include <vector>

namespace seifert::bands {

struct Crossing {
  int over = 0;
  int under = 0;
  int sign = 1;

  bool operator==(const Crossing&) const = default;
};

/// Oriented link diagram reduced to its crossing list. Components are
/// 0-based.
struct PlanarDiagram {
  int components = 0;
  std::vector<Crossing> crossings;
};

/// Throws std::invalid_argument on a bad component or sign.
void validate(const PlanarDiagram& d);

/// Half the signed count of crossings between c1 and c2. Throws
/// std::invalid_argument if c1 == c2, an index is out of range, or the signed
/// count is odd.
int linking_number(const PlanarDiagram& d, int c1, int c2);

}  // namespace seifert::bands

#endif  // SEIFERT_BANDS_DIAGRAM_HPP
