// Shared aliases for multivariate polynomials over Q and Q(zeta).
#pragma once

#include "cyclo.hpp"
#include "mpoly.hpp"

namespace k3x {

using CForm = MPoly<CycloElem>;
using RForm = MPoly<Rational>;

}  // namespace k3x
