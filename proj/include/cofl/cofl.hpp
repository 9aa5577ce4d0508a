#pragma once

// Umbrella header.

#include "cofl/approx.hpp"
#include "cofl/candidates.hpp"
#include "cofl/decision.hpp"
#include "cofl/geometry.hpp"
#include "cofl/io.hpp"
#include "cofl/oracle.hpp"
#include "cofl/parametric.hpp"
#include "cofl/polynomial.hpp"
