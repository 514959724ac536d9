#include <ptre/trigamma.hpp>

#include <array>
#include <cmath>

namespace ptre {

namespace {

constexpr double asymptotic_threshold = 8.0;

// B_2, B_4, ..., B_14
constexpr std::array<double, 7> bernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,
};

template <typename T>
T trigamma_impl(T z)
{
    T shift_sum = T(0);
    while (std::abs(z) < asymptotic_threshold) {
        shift_sum += T(1) / (z * z);
        z += T(1);
    }

    const T inv = T(1) / z;
    const T inv2 = inv * inv;
    // Horner form of sum_k B_{2k} z^{-(2k+1)}
    T series = T(0);
    for (auto it = bernoulli.rbegin(); it != bernoulli.rend(); ++it)
        series = series * inv2 + T(*it);
    series *= inv2 * inv;

    return shift_sum + inv + T(0.5) * inv2 + series;
}

} // namespace

std::complex<double> trigamma(std::complex<double> z)
{
    return trigamma_impl(z);
}

double trigamma(double x)
{
    return trigamma_impl(x);
}

} // namespace ptre
