#ifndef SEIFERT_EXACTLA_HPP
#define SEIFERT_EXACTLA_HPP

#include "seifert/exactla/elimination.hpp"
#include "seifert/exactla/polynomial.hpp"
#include "seifert/exactla/spectral.hpp"
#include "seifert/exactla/types.hpp"

#endif  // SEIFERT_EXACTLA_HPP
