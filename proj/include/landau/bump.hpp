#pragma once

namespace landau {

/// C-infinity monotone ramp on (0,1): T(u) = exp(1 - 1/(1-u^2)), with
/// T(u)=1 for u<=0 and T(u)=0 for u>=1.
double smooth_ramp(double u);
double smooth_ramp_deriv(double u);

/// Even smooth bump g: 1 on |w|<=1/2, 0 on |w|>=1, ramp T(2|w|-1) between.
double bump(double omega);
double bump_deriv(double omega);

/// integral of g over the line (cached quadrature value).
double bump_mass();

/// Lowpass cutoff profile: 1 on |w|<=1, 0 on |w|>=2; equals bump(w/2).
double lowpass_profile(double omega);

}  // namespace landau
