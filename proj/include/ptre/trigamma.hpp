#ifndef PTRE_TRIGAMMA_HPP
#define PTRE_TRIGAMMA_HPP

#include <complex>

namespace ptre {

/**
 * Trigamma function psi_1(z) = sum_{n>=0} 1/(n+z)^2 for complex z.
 *
 * The argument is shifted upward with psi_1(z) = psi_1(z+1) + 1/z^2 until
 * |z| >= 8, where the asymptotic expansion with seven Bernoulli terms is
 * accurate to about 1e-15 relative. Poles at z = 0, -1, -2, ... are not
 * handled; callers only evaluate it with Re z > 0.
 */
std::complex<double> trigamma(std::complex<double> z);

double trigamma(double x);

} // namespace ptre

#endif
