#include "periodlab/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace periodlab::num {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, n = 9 (Godfrey coefficients)
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_core(cplx z) {
    // valid for Re z > 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}
} // namespace

cplx gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        cplx s = std::sin(kPi * z);
        if (s == cplx(0.0, 0.0)) throw std::domain_error("gamma: pole at nonpositive integer");
        return kPi / (s * gamma_core(1.0 - z));
    }
    return gamma_core(z);
}

cplx log_gamma(cplx z) { return std::log(gamma(z)); }

cplx beta(cplx a, cplx b) { return gamma(a) * gamma(b) / gamma(a + b); }

cplx sv_beta(cplx a, cplx b) {
    return gamma(a) * gamma(b) * gamma(1.0 - a - b) / (gamma(a + b) * gamma(1.0 - a) * gamma(1.0 - b));
}

double zeta(int n) {
    if (n < 2) throw std::domain_error("zeta: need n >= 2");
    const int N = 200;
    double s = 0.0;
    for (int k = 1; k <= N; ++k) s += std::pow(double(k), -n);
    // Euler-Maclaurin tail at N
    double Nn = std::pow(double(N), -n);
    double tail = double(N) * Nn / (n - 1) - 0.5 * Nn;
    double f1 = -n * Nn / N;                                  // f'(N)
    double f3 = -double(n) * (n + 1) * (n + 2) * Nn / (double(N) * N * N); // f'''(N)
    tail -= f1 / 12.0;
    tail += f3 / 720.0;
    return s + tail;
}

double sv_zeta(int n) {
    if (n % 2 == 0) return 0.0;
    return 2.0 * zeta(n);
}

} // namespace periodlab::num
