#pragma once

namespace randrank {

// Standard normal CDF. Uses erfc so the lower tail keeps relative accuracy.
double normal_cdf(double x);

// Inverse standard normal CDF (Wichura's AS241 rational approximations,
// accurate to ~1e-16 relative). Throws ValidationError unless 0 < p < 1.
double normal_quantile(double p);

} // namespace randrank
