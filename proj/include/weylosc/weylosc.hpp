#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/matrix.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"
#include "weylosc/realize.hpp"
#include "weylosc/specfun.hpp"
#include "weylosc/spectral.hpp"
