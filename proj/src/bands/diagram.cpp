#include "seifert/bands/diagram.hpp"

#include <stdexcept>
#include <string>

namespace seifert::bands {

void validate(const PlanarDiagram& d) {
  if (d.components < 0) throw std::invalid_argument("diagram: negative component count");
  for (const auto& c : d.crossings) {
    if (c.over < 0 || c.over >= d.components || c.under < 0 || c.under >= d.components)
      throw std::invalid_argument("diagram: crossing refers to a missing component");
    if (c.sign != 1 && c.sign != -1)
      throw std::invalid_argument("diagram: crossing sign " + std::to_string(c.sign) + " is not +-1");
  }
}

int linking_number(const PlanarDiagram& d, int c1, int c2) {
  validate(d);
  if (c1 < 0 || c1 >= d.components || c2 < 0 || c2 >= d.components)
    throw std::invalid_argument("linking_number: component index out of range");
  if (c1 == c2) throw std::invalid_argument("linking_number: components must differ");
  long long total = 0;
  for (const auto& c : d.crossings) {
    const bool between = (c.over == c1 && c.under == c2) || (c.over == c2 && c.under == c1);
    if (between) total += c.sign;
  }
  if (total % 2 != 0)
    throw std::invalid_argument("linking_number: odd signed crossing count " +
                                std::to_string(total));
  return static_cast<int>(total / 2);
}

}  // namespace seifert::bands
