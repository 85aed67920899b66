#pragma once

namespace codescout {

// Standard normal cdf via erfc.
double norm_cdf(double x);

// Quantile of the standard normal: rational approximation followed by one Newton
// step against norm_cdf. Absolute error below 1e-8 on (0,1). Throws outside (0,1).
double inv_norm_cdf(double u);

}  // namespace codescout
