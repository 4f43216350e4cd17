#pragma once

// Umbrella header: the full r-congruence calculus with the default
// arbitrary-precision integer type.

#include "algebra.hpp"
#include "bigint.hpp"
#include "classes.hpp"
#include "core.hpp"
#include "integer.hpp"
#include "oracle.hpp"
#include "ring.hpp"
#include "shift.hpp"
#include "solve.hpp"
