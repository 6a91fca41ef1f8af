#pragma once

namespace qrabi::specfun {

/// Associated Laguerre polynomial L_n^k(x), by upward recurrence in n.
/// Throws NegativeDegree if n < 0 or k < 0.
double laguerre(int n, int k, double x);

/// Fock-basis matrix element <m| exp(alpha (a† - a)) |n>.
/// Throws NegativeIndex if m or n is negative.
double displaced_fock_overlap(int m, int n, double alpha);

} // namespace qrabi::specfun
