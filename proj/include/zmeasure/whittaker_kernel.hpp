#pragma once

// The Whittaker kernel on R \ {0}: the xi -> 1 scaling limit of the
// hypergeometric kernel.

#include "zmeasure/kernel.hpp"
#include "zmeasure/params.hpp"
#include "zmeasure/specfun.hpp"

namespace zmeasure {

// t^{1/4} / (Gamma(1 +- z) Gamma(1 +- z') x)^{1/2} W_{(+-s+1)/2, (z-z')/2}(x)
double whittaker_p(Sign sign, double x, const ZParams& zp, const specfun::WhittakerOptions& opts = {});
// Same with t^{3/4} and W_{(+-s-1)/2, (z-z')/2}.
double whittaker_q(Sign sign, double x, const ZParams& zp, const specfun::WhittakerOptions& opts = {});

inline constexpr double kWhittakerDiagonalTolerance = 1e-6;

// Block entry for x, y > 0. The diagonal of ++ / -- is a symmetric
// numerical limit with Richardson extrapolation; PrecisionError when two
// successive extrapolants differ by more than kWhittakerDiagonalTolerance.
double whittaker_block_entry(Block b, double x, double y, const ZParams& zp,
                             const specfun::WhittakerOptions& opts = {});

// K(u, v) for nonzero reals, dispatched on the signs of u and v.
double whittaker_kernel(double u, double v, const ZParams& zp, const specfun::WhittakerOptions& opts = {});

}  // namespace zmeasure
