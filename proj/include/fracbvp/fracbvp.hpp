#pragma once

// Umbrella header.

#include "fracbvp/bvp.hpp"
#include "fracbvp/config.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/expr.hpp"
#include "fracbvp/fracops.hpp"
#include "fracbvp/greens.hpp"
#include "fracbvp/grid.hpp"
#include "fracbvp/linalg.hpp"
#include "fracbvp/rational.hpp"
#include "fracbvp/specfun.hpp"
