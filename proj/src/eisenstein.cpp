#include "pgl2/eisenstein.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace pgl2 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// upper incomplete gamma Gamma(a,x) by the Lentz continued fraction; good for
// x >= pi and the moderate |a| this module needs
cplx gamma_upper(cplx a, double x) {
    const double tiny = 1e-300;
    cplx b = x + 1.0 - a;
    cplx C = 1e300;
    cplx D = 1.0 / b;
    cplx f = D;
    for (int i = 1; i < 500; ++i) {
        cplx an = -double(i) * (double(i) - a);
        b += 2.0;
        D = an * D + b;
        if (std::abs(D) < tiny) D = tiny;
        C = b + an / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        cplx delta = D * C;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x + a * std::log(cplx(x, 0.0))) * f;
}

// G_a(x) = int_1^inf t^{a-1} e^{-xt} dt = x^{-a} Gamma(a, x)
cplx g_integral(cplx a, double x) {
    return std::exp(-a * std::log(cplx(x, 0.0))) * gamma_upper(a, x);
}

// r2 counts for small n (theta series); r2[0] unused
std::vector<int> r2_counts(int nmax) {
    std::vector<int> r2(nmax + 1, 0);
    int m = int(std::sqrt(double(nmax))) + 1;
    for (int a = -m; a <= m; ++a)
        for (int b = -m; b <= m; ++b) {
            int n = a * a + b * b;
            if (n >= 1 && n <= nmax) r2[n]++;
        }
    return r2;
}

// theta-accelerated Epstein zeta of Z^2: Z(u) = sum_{v != 0} |v|^{-2u},
// via pi^{-u} Gamma(u) Z(u) = 1/(u-1) - 1/u + sum_n r2(n) [G_u(pi n) + G_{1-u}(pi n)]
cplx epstein_theta(cplx u, double* tail_bound) {
    const int N = 32;
    static const std::vector<int> r2 = r2_counts(64);
    cplx acc = 1.0 / (u - 1.0) - 1.0 / u;
    for (int n = 1; n <= N; ++n) {
        if (!r2[n]) continue;
        acc += double(r2[n]) * (g_integral(u, kPi * n) + g_integral(1.0 - u, kPi * n));
    }
    // |G_a(pi n)| <= e^{-pi n} * 2/(pi n) for pi n well above |a|; r2(n) <= 4n
    *tail_bound = 16.0 * (N + 1) * std::exp(-kPi * (N + 1));
    cplx pref = std::pow(cplx(kPi, 0.0), u) / gamma_fn(u);
    *tail_bound *= std::abs(pref);
    return pref * acc;
}

// direct coprime lattice sum with Moebius over divisors inside the radius
cplx lattice_direct(cplx u, long R, double sigma, double* tail_bound) {
    // r2 sieve up to R^2, then coprime correction r2cop[g^2 m] += mu(g) r2[m]
    const std::int64_t R2 = std::int64_t(R) * R;
    std::vector<std::int32_t> mu(R + 1, 1);
    {
        std::vector<std::int32_t> primes;
        std::vector<bool> comp(R + 1, false);
        for (long i = 2; i <= R; ++i) {
            if (!comp[i]) {
                for (long j = i; j <= R; j += i) {
                    if (j > i) comp[j] = true;
                    mu[j] = (j / i) % i == 0 ? 0 : -mu[j];
                }
                // zero out multiples of i^2 handled above via (j/i)%i
            }
        }
    }
    std::vector<std::int32_t> r2(R2 + 1, 0);
    for (long a = 0; a <= R; ++a) {
        std::int64_t aa = std::int64_t(a) * a;
        long bmax = long(std::sqrt(double(R2 - aa)));
        while (std::int64_t(bmax) * bmax + aa > R2) --bmax;
        for (long b = (a == 0 ? 1 : 0); b <= bmax; ++b) {
            std::int64_t n = aa + std::int64_t(b) * b;
            int mult = (a == 0 || b == 0) ? 2 : 4;
            r2[n] += mult;
        }
    }
    // coprime-pair counts: r2cop(n) = sum_{g^2 | n} mu(g) r2(n/g^2)
    std::vector<std::int32_t> r2cop(r2.begin(), r2.end());
    for (long g = 2; g <= R; ++g) {
        if (!mu[g]) continue;
        std::int64_t g2 = std::int64_t(g) * g;
        for (std::int64_t m = 1; m * g2 <= R2; ++m)
            r2cop[m * g2] += mu[g] * r2[m];
    }
    cplx total = 0.0;
    bool real_u = std::abs(u.imag()) < 1e-300;
    for (std::int64_t n = 1; n <= R2; ++n) {
        if (!r2cop[n]) continue;
        if (real_u)
            total += double(r2cop[n]) * std::pow(double(n), -u.real());
        else
            total += double(r2cop[n]) * std::exp(-u * std::log(double(n)));
    }
    // integral-comparison tail for the full (hence also the coprime) sum
    *tail_bound = 2.0 * kPi * std::pow(double(R), 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0);
    return total / 2.0;  // modulo sign
}

}  // namespace

cplx whittaker_fourier_fin(long n, cplx s) {
    // multiplicative: p^{-m/2} sum_{k=0}^m p^{(2k-m)s} over p^m || n
    cplx val = 1.0;
    long rem = n;
    for (long p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        int m = 0;
        while (rem % p == 0) { rem /= p; ++m; }
        cplx lp = std::log(double(p));
        cplx f = 0.0;
        for (int k = 0; k <= m; ++k) f += std::exp(double(2 * k - m) * s * lp);
        val *= std::pow(double(p), -0.5 * m) * f;
    }
    if (rem > 1) {
        cplx lp = std::log(double(rem));
        val *= std::pow(double(rem), -0.5) * (std::exp(s * lp) + std::exp(-s * lp));
    }
    return val;
}

EisensteinValue eval_lattice(cplx s, double eps) {
    double sigma = s.real();
    if (sigma <= 0.5)
        throw NotConvergent("eval_lattice: lattice sum diverges for Re s <= 1/2");
    cplx u = s + 0.5;
    double tail = 0.0;
    // terms are |v|^{-2 Re u}; integral comparison gives
    // tail <= 2 pi R^{2-2Re u}/(2Re u - 2) = 2 pi R^{1-2 sigma}/(2 sigma - 1)
    double Rneed = std::pow(2.0 * kPi / ((2.0 * sigma - 1.0) * 0.5 * eps), 1.0 / (2.0 * sigma - 1.0));
    cplx val;
    if (Rneed <= 3500.0) {
        long R = long(Rneed) + 2;
        val = lattice_direct(u, R, u.real(), &tail);
    } else {
        // same series, theta-accelerated: exact apart from an e^{-pi N} truncation
        cplx z2u = zeta_fn(2.0 * u);
        if (std::abs(z2u) < 1e-8)
            throw ZetaDenominatorNearZero("eval_lattice: zeta(2s+1) too small");
        val = epstein_theta(u, &tail) / (2.0 * z2u);
        tail /= 2.0 * std::abs(z2u);
    }
    return {s, val, EisensteinRoute::Lattice, tail};
}

EisensteinValue eval_fourier(cplx s, double eps) {
    if (std::abs(s - cplx(0.5)) < 0.02)
        throw PoleError(cplx(0.5), "eval_fourier: pole at s = 1/2");
    cplx z2s1 = zeta_fn(2.0 * s + 1.0);
    if (std::abs(z2s1) < 1e-8)
        throw ZetaDenominatorNearZero("eval_fourier: zeta(2s+1) near zero");
    cplx val = 1.0 + lambda_value(2.0 * s) / lambda_value(2.0 * s + 1.0);
    cplx pref = 2.0 / z2s1;
    cplx gam = gamma_fn(s + 0.5);
    double tail = 0.0;
    double sr = s.real();
    for (long n = 1; n <= 30; ++n) {  // 2 pi n stays inside the K range; e^{-2pi n} is long converged
        cplx warch = 2.0 * std::pow(cplx(kPi, 0.0), s + 0.5) * std::sqrt(double(n)) *
                     bessel_k_impl(s, 2.0 * kPi * n) / gam;
        cplx term = pref * whittaker_fourier_fin(n, s) * warch;
        val += term;
        // K_{Re s}(2 pi m) <= K_{Re s}(2 pi n) e^{-2 pi (m-n)} for m > n, and the
        // divisor factor grows slower than m^{|Re s|+1}
        double kb = std::abs(bessel_k_impl(cplx(sr, 0.0), 2.0 * kPi * n).real());
        double growth = std::pow(double(n + 1), std::abs(sr) + 1.5) / std::pow(double(n), std::abs(sr) + 1.5);
        double ratio = growth * std::exp(-2.0 * kPi);
        tail = std::abs(pref) * 2.0 * std::pow(kPi, sr + 0.5) * std::pow(double(n + 1), std::abs(sr) + 1.5) *
               kb * std::exp(-2.0 * kPi) / std::abs(gam) / (1.0 - ratio);
        if (tail < eps && n >= 6) break;
    }
    return {s, val, EisensteinRoute::Fourier, tail};
}

LaurentExpansion laurent_at(const std::function<cplx(cplx)>& f, cplx center,
                            int max_order, double radius, double eps) {
    LaurentExpansion le;
    le.center = center;
    le.radius_used = radius;
    int N = 64;
    std::vector<cplx> prev;
    while (N <= 8192) {
        std::vector<cplx> coef(2 * max_order + 1, 0.0);
        for (int j = 0; j < N; ++j) {
            double th = 2.0 * kPi * j / N;
            cplx e(std::cos(th), std::sin(th));
            cplx fz = f(center + radius * e);
            // c_k = (1/N) sum f(center + r e^{i th}) (r e^{i th})^{-k}
            cplx w = std::pow(cplx(radius, 0.0) * e, double(max_order));  // for k = -max_order
            for (int k = -max_order; k <= max_order; ++k) {
                coef[k + max_order] += fz * w;
                w /= radius * e;
            }
        }
        for (auto& c : coef) c /= double(N);
        if (!prev.empty()) {
            double diff = 0.0;
            for (size_t i = 0; i < coef.size(); ++i) diff = std::max(diff, std::abs(coef[i] - prev[i]));
            if (diff < eps) {
                for (int k = -max_order; k <= max_order; ++k) le.coefficients[k] = coef[k + max_order];
                return le;
            }
        }
        prev = std::move(coef);
        N *= 2;
    }
    throw NoConvergence("laurent_at: contour coefficients did not stabilize");
}

double residue_at_half() {
    auto E = [](cplx z) { return eval_fourier(z, 1e-12).value; };
    auto le = laurent_at(E, cplx(0.5), 1, 0.05, 1e-10);
    return le.coeff(-1).real();
}

KroneckerConstants kronecker_constants() {
    const auto& c = named_constants();
    double ce = 2.0 * c.euler_gamma - 2.0 * std::log(2.0) - 4.0 * std::log(c.eta_at_i);
    double ct = 3.0 / kPi * ce - 36.0 * c.zeta_prime_2 / std::pow(kPi, 3);
    return {ce, ct};
}

}  // namespace pgl2
