#pragma once

#include "gfresnel/amplitude.hpp"
#include "gfresnel/cutoff.hpp"
#include "gfresnel/error.hpp"
#include "gfresnel/extrapolation.hpp"
#include "gfresnel/fresnel.hpp"
#include "gfresnel/oscillatory.hpp"
#include "gfresnel/quadratic_phase.hpp"
#include "gfresnel/quadrature.hpp"
#include "gfresnel/regularization.hpp"
#include "gfresnel/series.hpp"
#include "gfresnel/special_functions.hpp"
#include "gfresnel/stationary_phase.hpp"
#include "gfresnel/types.hpp"
