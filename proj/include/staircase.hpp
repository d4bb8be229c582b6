#pragma once

#include "staircase/asep.hpp"
#include "staircase/core.hpp"
#include "staircase/counting.hpp"
#include "staircase/enumerator.hpp"
#include "staircase/exact.hpp"
#include "staircase/polyengine.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/random.hpp"
#include "staircase/sampler.hpp"
#include "staircase/stats.hpp"
#include "staircase/verify.hpp"

namespace staircase {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace staircase
