#pragma once

namespace cinfty {

/// The built-in smooth step rho0 and its derivatives.
///
/// rho0(t) = phi(2 - t) / (phi(2 - t) + phi(t - 1)) with phi(s) = exp(-1/s) for
/// s > 0 and 0 otherwise, so rho0 is identically 1 on t <= 1, identically 0 on
/// t >= 2 and strictly between 0 and 1 in between. `order` selects the
/// derivative; derivatives are computed with truncated Taylor arithmetic.
double rho0(double t, int order = 0);

}  // namespace cinfty
