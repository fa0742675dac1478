#include "primelab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primelab/errors.hpp"

namespace primelab {

namespace {

// Godfrey's Lanczos coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

std::complex<double> lanczos_gamma(std::complex<double> z) {
    // Valid for Re(z) >= 0.5.
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int k = 1; k < 15; ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
           std::exp(-t) * x;
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    if (is_nonpositive_integer(z))
        throw std::invalid_argument("gamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        const std::complex<double> s =
            std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z);
        return std::numbers::pi / s;
    }
    return lanczos_gamma(z);
}

std::complex<double> exp_integral_e1(std::complex<double> s) {
    if (!(s.real() > 0.0))
        throw std::invalid_argument("E1 requires Re(s) > 0");
    constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
    if (std::abs(s) <= 4.0) {
        // E1(s) = -gamma - log s + sum_{k>=1} (-1)^{k+1} s^k / (k k!)
        std::complex<double> sum = 0.0;
        std::complex<double> term = 1.0;  // s^k / k!
        for (int k = 1; k < 64; ++k) {
            term *= -s / static_cast<double>(k);
            const std::complex<double> contrib = -term / static_cast<double>(k);
            sum += contrib;
            if (std::abs(contrib) < 1e-18 * (1.0 + std::abs(sum))) break;
        }
        return -kEulerGamma - std::log(s) + sum;
    }
    // Continued fraction E1(s) = e^{-s} / (s + 1 - 1/(s + 3 - 4/(s + 5 - ...)))
    // evaluated with the modified Lentz algorithm.
    constexpr double tiny = 1e-300;
    std::complex<double> b = s + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int n = 1; n < 200; ++n) {
        const double a = -static_cast<double>(n) * n;
        b += 2.0;
        d = 1.0 / (b + a * d);
        c = b + a / c;
        const std::complex<double> delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-s) * h;
}

}  // namespace primelab
