#include "cantorlp/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cantorlp/util.hpp"

namespace cantorlp {

namespace {

constexpr double kPi = std::numbers::pi;

// e^{-2 pi i a} from the reduced fractional part of a; remainder() is exact,
// so the phase stays accurate for arbitrarily large |a|.
inline std::complex<double> unit_phase(double a) {
    const double r = std::remainder(2.0 * a, 2.0);  // 2a mod 2 in [-1, 1]
    return {std::cos(kPi * r), -std::sin(kPi * r)};
}

}  // namespace

double sinpi(double x) {
    const double r = std::remainder(x, 2.0);
    return std::sin(kPi * r);
}

double cospi(double x) {
    const double r = std::remainder(x, 2.0);
    return std::cos(kPi * r);
}

std::complex<double> phi(double t) {
    const double w = 2.0 * kPi * t;
    if (std::abs(w) < 1e-4) {
        // phi(t) = sum_n (-iw)^n / (n+1)!; four terms reach ~1e-18 here.
        const double w2 = w * w;
        const double re = 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
        const double im = -w / 2.0 + w * w2 / 24.0;
        return {re, im};
    }
    // Real part sin(w)/w and imaginary part -2 sin^2(w/2)/w are both
    // cancellation-free rewrites of (1 - e^{-iw})/(iw).
    const double s = sinpi(2.0 * t);
    const double h = sinpi(t);
    return {s / w, -2.0 * h * h / w};
}

std::complex<double> lambda0_hat(std::span<const double> xi) {
    std::complex<double> prod(1.0, 0.0);
    for (double t : xi) prod *= phi(t);
    return prod;
}

std::complex<double> cube_ft(std::span<const double> corner, double side,
                             std::span<const double> xi) {
    double dot = 0.0;
    std::complex<double> prod(1.0, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j) {
        dot += corner[j] * xi[j];
        prod *= phi(side * xi[j]);
    }
    return unit_phase(dot) * prod;
}

std::complex<double> mu_hat(const CubeMeasure& mu, std::span<const double> xi) {
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i)
        sum += mu.masses[i] * cube_ft(mu.corner(i), mu.sides[i], xi);
    return sum;
}

std::complex<double> expected_mu_hat(double rho, std::span<const double> xi) {
    if (!(rho > 0.0 && rho < 0.5))
        throw ConfigError("rho must lie in (0, 1/2), got " + std::to_string(rho));
    std::complex<double> prod(1.0, 0.0);
    for (double t : xi) prod *= phi(rho * t) * phi((1.0 - rho) * t);
    return prod;
}

std::complex<double> expected_subdivision_ft(std::span<const double> corner, double side,
                                             double rho, std::span<const double> xi) {
    if (!(rho > 0.0 && rho < 0.5))
        throw ConfigError("rho must lie in (0, 1/2), got " + std::to_string(rho));
    const double r = rho * side;
    double dot = 0.0;
    std::complex<double> prod(1.0, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j) {
        dot += corner[j] * xi[j];
        prod *= phi(r * xi[j]) * phi((side - r) * xi[j]);
    }
    return unit_phase(dot) * prod;
}

double envelope(const CubeMeasure& mu, std::span<const double> xi) {
    std::vector<double> terms(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double prod = mu.masses[i];
        for (double t : xi) {
            const double a = kPi * mu.sides[i] * std::abs(t);
            if (a > 1.0) prod /= a;
        }
        terms[i] = prod;
    }
    return pairwise_sum(terms);
}

}  // namespace cantorlp
