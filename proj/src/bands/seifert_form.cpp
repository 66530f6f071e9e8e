#include "seifert/bands/seifert_form.hpp"

#include "seifert/bands/ribbon.hpp"
#include "seifert/exactla/elimination.hpp"
#include "seifert/exactla/spectral.hpp"

namespace seifert::bands {

exactla::IntMatrix seifert_matrix(const BandSurface& s) {
  const auto g = static_cast<exactla::Index>(s.basis.size());
  exactla::IntMatrix v(g, g);
  if (g == 0) return v;

  // Curves take odd slots and push-off sources even ones, so no two
  // polygons share a lane.
  const ribbon::Model model(s, static_cast<int>(2 * g));
  std::vector<ribbon::Polygon> curves, pushed;
  for (exactla::Index k = 0; k < g; ++k) {
    curves.push_back(model.curve(static_cast<std::size_t>(k), static_cast<int>(2 * k + 1)));
    pushed.push_back(model.push_off(static_cast<std::size_t>(k), static_cast<int>(2 * k + 2)));
  }
  for (exactla::Index k = 0; k < g; ++k)
    for (exactla::Index l = 0; l < g; ++l)
      v(k, l) = ribbon::linking_number(curves[static_cast<std::size_t>(k)],
                                       pushed[static_cast<std::size_t>(l)]);
  return v;
}

exactla::IntMatrix symmetrized_form(const BandSurface& s) { return exactla::symmetrize(seifert_matrix(s)); }

exactla::BigInt alexander_determinant(const BandSurface& s) {
  return abs(exactla::determinant(symmetrized_form(s)));
}

}  // namespace seifert::bands
