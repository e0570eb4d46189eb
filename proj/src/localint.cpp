#include "pgl2/localint.hpp"

#include <cmath>
#include <vector>

namespace pgl2 {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// 1/Gamma(z), entire; reflection keeps it finite at the poles of Gamma
cplx recip_gamma(cplx z) {
    if (z.real() < 0.5) return std::sin(kPi * z) * gamma_fn(1.0 - z) / kPi;
    return 1.0 / gamma_fn(z);
}

cplx qpow(long q, cplx e) { return std::exp(e * std::log(double(q))); }

// local zeta factor zeta_p(z) = (1 - q^{-z})^{-1} with a proximity guard
cplx zeta_p(long q, cplx z) {
    cplx den = 1.0 - qpow(q, -z);
    if (std::abs(den) < 1e-10) throw PoleProximity("local zeta factor: denominator near zero");
    return 1.0 / den;
}

// x-shell integral without psi: int max{1, q^{-m}, |x|}^{-u} dx, exact
cplx x_integral_plain(long q, cplx u, long m) {
    long r = std::max(0L, -m);
    cplx val = qpow(q, double(r) * (1.0 - u));
    cplx ratio = qpow(q, 1.0 - u);
    val += (1.0 - 1.0 / double(q)) * qpow(q, double(r + 1) * (1.0 - u)) / (1.0 - ratio);
    return val;
}

// x-shell integral with psi(alpha x), v(alpha) = k (any sign), exact finite sum
cplx x_integral_psi(long q, cplx u, long m, int k) {
    long r = std::max(0L, -m);
    long n0 = std::max(0, -k);
    // n >= n0: height factor q^{-u max(r, -n)} = q^{-u r}; sum of shell volumes = q^{-n0}
    cplx val = qpow(q, -u * double(r)) * qpow(q, -double(n0));
    for (int n = -k; n <= -1; ++n)
        val += qpow(q, -u * double(std::max(r, long(-n)))) * qpow(q, -double(n)) * (1.0 - 1.0 / double(q));
    val -= qpow(q, double(k)) * qpow(q, -u * double(std::max(r, long(k) + 1)));
    return val;
}

struct WhittakerTwist {
    cplx chi;
    long q;
    cplx w(long m) const {
        if (m < 0) return 0.0;
        cplx qf = std::pow(double(q), -0.5 * double(m));
        if (std::abs(chi - 1.0) < 1e-9) return qf * double(m + 1);
        if (std::abs(chi + 1.0) < 1e-9) return qf * double(m + 1) * (m % 2 ? -1.0 : 1.0);
        cplx u = std::log(chi);
        return qf * std::sinh(double(m + 1) * u) / std::sinh(u);
    }
};

}  // namespace

SatakeParam::SatakeParam(cplx chi_, long q_, double delta_) : chi(chi_), q(q_), delta(delta_) {
    if (!is_prime(q))
        throw std::invalid_argument("SatakeParam: q must be prime");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("SatakeParam: delta must lie in (0, 1/2)");
    double a = std::abs(chi);
    if (a == 0.0 || a < std::pow(double(q), -delta) * (1 - 1e-12) ||
        a > std::pow(double(q), delta) * (1 + 1e-12))
        throw std::invalid_argument("SatakeParam: |chi| outside the Ramanujan window");
}

cplx whittaker_unramified(const SatakeParam& sp, long m) {
    return WhittakerTwist{sp.chi, sp.q}.w(m);
}

cplx l_function(const SatakeParam& sp, cplx s) {
    cplx z = qpow(sp.q, -s);
    cplx den = (1.0 - sp.chi * z) * (1.0 - z / sp.chi);
    if (std::abs(den) < 1e-12) throw PoleProximity("l_function: denominator near zero");
    return 1.0 / den;
}

cplx hecke_l_identity(const SatakeParam& sp, cplx s, int M) {
    cplx acc = 0.0;
    for (int m = 0; m <= M; ++m)
        acc += qpow(sp.q, double(m) * (0.5 - s)) * whittaker_unramified(sp, m);
    return acc;
}

cplx height_integral_nonarch(long p, cplx s, cplx w) {
    return zeta_p(p, s - 1.0) * zeta_p(p, w) / zeta_p(p, s + w);
}

cplx height_integral_arch(cplx s, cplx w) {
    for (cplx a : {(s - 1.0) / 2.0, w / 2.0}) {
        double n = std::round(a.real());
        if (n <= 0.25 && std::abs(a - cplx(n)) < 1e-8)
            throw PoleProximity("height_integral_arch: Gamma pole");
    }
    return std::sqrt(kPi) * gamma_fn((s - 1.0) / 2.0) * gamma_fn(w / 2.0) * recip_gamma((s + w) / 2.0);
}

cplx height_integral_twisted(Place place, long p, cplx s, cplx w, cplx tau) {
    if (place == Place::Finite)
        return zeta_p(p, s + tau - 1.0) * zeta_p(p, w - tau) / zeta_p(p, s + w);
    for (cplx a : {(s + tau - 1.0) / 2.0, (w - tau) / 2.0}) {
        double n = std::round(a.real());
        if (n <= 0.25 && std::abs(a - cplx(n)) < 1e-8)
            throw PoleProximity("height_integral_twisted: Gamma pole");
    }
    return std::sqrt(kPi) * gamma_fn((s + tau - 1.0) / 2.0) * gamma_fn((w - tau) / 2.0) *
           recip_gamma((s + w) / 2.0);
}

BigRat character_shell_integral(long p, int beta_valuation, ShellMeasure measure) {
    BigRat v;
    if (beta_valuation >= 0)
        v = 1;
    else if (beta_valuation == -1)
        v = BigRat(-1, p - 1);
    else
        v = 0;
    if (measure == ShellMeasure::Additive) v *= BigRat(p - 1, p);
    return v;
}

cplx oracle_nonarch(long p, cplx s, cplx w, const OracleOptions& opt) {
    const long q = p;
    cplx u = s + w;
    int twists = int(bool(opt.satake)) + int(bool(opt.eisenstein_t)) + int(bool(opt.tau));
    if (twists > 1) throw std::invalid_argument("oracle_nonarch: at most one twist");

    if (opt.satake || opt.eisenstein_t) {
        if (!opt.alpha_valuation)
            throw std::invalid_argument("oracle_nonarch: Whittaker twist needs alpha");
        int k = *opt.alpha_valuation;
        WhittakerTwist W{opt.satake ? opt.satake->chi : qpow(q, cplx(0.0, -*opt.eisenstein_t)), q};
        if (opt.satake && s.real() <= 0.5 + opt.satake->delta)
            throw TruncationNotProvablyComplete("oracle_nonarch: Re s too small for the Whittaker tail");
        if (!opt.satake && s.real() <= 0.5)
            throw TruncationNotProvablyComplete("oracle_nonarch: Re s too small for the Whittaker tail");
        const int M = 48;
        cplx val = 0.0;
        for (long m = -k; m <= M; ++m)
            val += qpow(q, double(m) * (1.0 - s)) * W.w(k + m) * x_integral_psi(q, u, m, k);
        // tail m > M: the x-integral is constant in m there
        cplx Xc = x_integral_psi(q, u, std::max(long(M), 0L), k);
        cplx chi = W.chi;
        if (std::abs(chi - 1.0) < 1e-9 || std::abs(chi + 1.0) < 1e-9) {
            // W = q^{-(k+m)/2}(k+m+1)(+-1)^{k+m}: arithmetico-geometric closed form
            double sgn = (std::abs(chi + 1.0) < 1e-9) ? -1.0 : 1.0;
            cplx rho = qpow(q, 1.0 - s) * std::pow(double(q), -0.5) * sgn;
            cplx rM = std::pow(rho, double(M + 1));
            cplx head = rM * (double(k + M + 2) / (1.0 - rho) + rho / ((1.0 - rho) * (1.0 - rho)));
            double sk = (sgn < 0 && (k % 2)) ? -1.0 : 1.0;
            val += Xc * sk * std::pow(double(q), -0.5 * double(k)) * head;
        } else {
            cplx ci = 1.0 / chi, den = chi - ci;
            cplx rp = qpow(q, 0.5 - s) * chi, rm = qpow(q, 0.5 - s) * ci;
            cplx qk = std::pow(double(q), -0.5 * double(k));
            cplx tp = qk * std::pow(chi, double(k + 1)) * std::pow(rp, double(M + 1)) / (1.0 - rp);
            cplx tm = qk * std::pow(ci, double(k + 1)) * std::pow(rm, double(M + 1)) / (1.0 - rm);
            val += Xc * (tp - tm) / den;
        }
        return val;
    }

    // plain or |a|^tau twist
    cplx tau = opt.tau.value_or(cplx(0.0));
    if (s.real() + tau.real() <= 1.0 || (w - tau).real() <= 0.0)
        throw TruncationNotProvablyComplete("oracle_nonarch: shell sums diverge at these parameters");
    cplx Xp = x_integral_plain(q, u, 0);
    // m >= 0: X is constant, torus factor q^{m(1-s-tau)} sums geometrically
    cplx val = Xp / (1.0 - qpow(q, 1.0 - s - tau));
    const int RR = 48;
    for (int r = 1; r < RR; ++r)
        val += qpow(q, double(-r) * (1.0 - s - tau)) * x_integral_plain(q, u, -r);
    // exact remainder: for r >= RR the summand equals q^{-r(w-tau)} Xp
    val += Xp * qpow(q, double(-RR) * (w - tau)) / (1.0 - qpow(q, -(w - tau)));
    return val;
}

BigRat oracle_nonarch_exact(long p, long s, long w, long tau) {
    if (s + tau <= 1 || w - tau <= 0)
        throw TruncationNotProvablyComplete("oracle_nonarch_exact: outside convergence region");
    const BigRat one = 1;
    auto qp = [&](long e) {  // q^e as a rational, e any sign
        boost::multiprecision::cpp_int v = 1;
        for (long i = 0; i < std::abs(e); ++i) v *= p;
        return e >= 0 ? BigRat(v) : BigRat(1, v);
    };
    long u = s + w;
    auto xplain = [&](long m) {
        long r = std::max(0L, -m);
        BigRat val = qp(r * (1 - u));
        val += (one - qp(-1)) * qp((r + 1) * (1 - u)) / (one - qp(1 - u));
        return val;
    };
    BigRat Xp = xplain(0);
    BigRat val = Xp / (one - qp(1 - s - tau));
    const int RR = 48;
    for (int r = 1; r < RR; ++r) val += qp(-r * (1 - s - tau)) * xplain(-r);
    val += Xp * qp(-RR * (w - tau)) / (one - qp(-(w - tau)));
    return val;
}

cplx j_cuspidal(const SatakeParam& sp, int k, cplx s, cplx w) {
    if (k < 0) return 0.0;
    const long q = sp.q;
    cplx L = l_function(sp, s - 0.5);
    auto W = [&](long j) { return whittaker_unramified(sp, k + j); };
    cplx val = W(0) + L * (qpow(q, -(s - 1.0)) * W(1) - qpow(q, -2.0 * (s - 0.5)) * W(0));
    for (int m = 1; m <= k; ++m) val += qpow(q, -double(m) * w) * W(-m);
    cplx t = 0.0;
    for (int m = 1; m <= k; ++m)
        t += qpow(q, -(s - 1.0) - double(m) * w) * W(-m + 1) -
             qpow(q, -2.0 * (s - 0.5) - double(m) * w) * W(-m);
    val += (1.0 - 1.0 / double(q)) * L * t;
    val -= L * qpow(q, -s - double(k + 1) * w);
    return val;
}

cplx j_eisenstein(double t, long p, int k, cplx s, cplx w) {
    SatakeParam sp(qpow(p, cplx(0.0, -t)), p, 0.25);
    return j_cuspidal(sp, k, s, w);
}

cplx whittaker_arch(cplx mu, double a) {
    if (a == 0.0) throw std::invalid_argument("whittaker_arch: a must be nonzero");
    if (std::abs(mu.real()) >= 0.5)
        throw OutOfValidatedRange("whittaker_arch: |Re mu| must be < 1/2");
    double t = std::abs(a);
    return std::sqrt(t) * bessel_k_impl(mu, 2.0 * kPi * t) / bessel_k_impl(mu, 2.0 * kPi);
}

cplx j_arch_quadrature(cplx mu, int alpha, cplx s, cplx w, double eps) {
    if (alpha <= 0) throw std::invalid_argument("j_arch_quadrature: alpha must be positive");
    if (s.real() <= 1.0 || (s + w).real() <= 0.0)
        throw PoleProximity("j_arch_quadrature: outside the holomorphy domain");
    // J = 4 int_0^inf int_0^inf W(alpha t) (t^2+x^2+1)^{-(s+w)/2} t^{s-2} cos(2 pi alpha x) dt dx
    double srw = (s + w).real();
    double Xmax = std::pow(4.0 / (eps * (srw - 1.0)), 1.0 / (srw - 1.0));
    Xmax = std::max(Xmax, 8.0);
    double Tt = (45.0 + kPi * std::abs(mu.imag()) / 2.0) / (2.0 * kPi * alpha) + 0.25;
    double tlo = 2e-7 / alpha;
    cplx cexp = -(s + w) / 2.0;
    cplx Kref = bessel_k_impl(mu, 2.0 * kPi);

    auto run = [&](int nt, int nx) {
        // Simpson in t of [Simpson in x]; Whittaker values and cos weights cached
        double ht = (Tt - tlo) / nt;
        double hx = Xmax / nx;
        std::vector<double> cosw(nx + 1), x2(nx + 1);
        for (int j = 0; j <= nx; ++j) {
            double wx = (j == 0 || j == nx) ? 1.0 : (j % 2 ? 4.0 : 2.0);
            cosw[j] = wx * std::cos(2.0 * kPi * alpha * j * hx);
            x2[j] = double(j) * hx * double(j) * hx;
        }
        cplx acc = 0.0;
        for (int i = 0; i <= nt; ++i) {
            double t = tlo + i * ht;
            double wt = (i == 0 || i == nt) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            cplx W = std::sqrt(double(alpha) * t) * bessel_k_impl(mu, 2.0 * kPi * alpha * t) / Kref;
            if (std::abs(W) < 1e-22) continue;
            cplx tpow = std::exp((s - 2.0) * std::log(t));
            double r = t * t + 1.0;
            cplx xacc = 0.0;
            for (int j = 0; j <= nx; ++j)
                xacc += cosw[j] * std::exp(cexp * std::log(r + x2[j]));
            acc += wt * W * tpow * xacc * (hx / 3.0);
        }
        return acc * (ht / 3.0) * 4.0;
    };

    int nt = 1200, nx = 3000;
    cplx v1 = run(nt, nx);
    cplx v2 = run(2 * nt, 2 * nx);
    if (std::abs(v1 - v2) > eps) {
        cplx v3 = run(4 * nt, 4 * nx);
        if (std::abs(v2 - v3) > eps)
            throw QuadratureBudgetExceeded("j_arch_quadrature: refinement did not reach eps");
        return v3;
    }
    return v2;
}

cplx z_res(cplx s, cplx w) {
    for (cplx a : {s - 1.0, w}) {
        if (std::abs(a) < 0.005 || std::abs(a - 1.0) < 0.005)
            throw PoleProximity("z_res: Lambda pole");
    }
    cplx den = lambda_value(s + w);
    if (std::abs(den) < 1e-12) throw PoleProximity("z_res: Lambda(s+w) near zero");
    return lambda_value(s - 1.0) * lambda_value(w) / den;
}

cplx euler_product_check(cplx s, cplx w, long P) {
    std::vector<bool> comp(P, false);
    cplx prod = height_integral_arch(s, w);
    for (long p = 2; p < P; ++p) {
        if (comp[p]) continue;
        for (long j = 2 * p; j < P; j += p) comp[j] = true;
        prod *= height_integral_nonarch(p, s, w);
    }
    return prod;
}

}  // namespace pgl2
