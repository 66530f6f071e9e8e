#ifndef SEIFERT_BANDS_SEIFERT_FORM_HPP
#define SEIFERT_BANDS_SEIFERT_FORM_HPP

#include "seifert/bands/surface.hpp"
#include "seifert/exactla/types.hpp"

namespace seifert::bands {

/// V(k, l) = lk(gamma_k, gamma_l^+) over the basis of `s`, measured on the
/// explicit ribbon model.
exactla::IntMatrix seifert_matrix(const BandSurface& s);

/// V + V^T.
exactla::IntMatrix symmetrized_form(const BandSurface& s);

/// |det(V + V^T)|; 1 for the empty matrix.
exactla::BigInt alexander_determinant(const BandSurface& s);

}  // namespace seifert::bands

#endif  // SEIFERT_BANDS_SEIFERT_FORM_HPP
