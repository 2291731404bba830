#ifndef RSIEGEL_RSIEGEL_HPP
#define RSIEGEL_RSIEGEL_HPP

#include "errors.hpp"
#include "numeric.hpp"
#include "exact_types.hpp"
#include "exactcoeff.hpp"
#include "psifun.hpp"
#include "theta.hpp"
#include "zeta_eval.hpp"
#include "contour.hpp"
#include "zeros.hpp"

#endif
