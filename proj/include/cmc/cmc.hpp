#pragma once

#include "cmc/common.hpp"
#include "cmc/quadrature.hpp"
#include "cmc/integrals.hpp"
#include "cmc/ball.hpp"
#include "cmc/profile.hpp"
#include "cmc/curvature.hpp"
#include "cmc/analysis.hpp"
#include "cmc/verify.hpp"
