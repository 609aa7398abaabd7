#pragma once

#include "sphmax/common.hpp"
#include "sphmax/quadrature.hpp"
#include "sphmax/analytic.hpp"
#include "sphmax/grid.hpp"
#include "sphmax/measure.hpp"
#include "sphmax/ladder.hpp"
#include "sphmax/riesz.hpp"
#include "sphmax/operators.hpp"
#include "sphmax/radial.hpp"
#include "sphmax/report.hpp"
#include "sphmax/verify.hpp"
#include "sphmax/capacity.hpp"
