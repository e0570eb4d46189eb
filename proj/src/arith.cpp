#include "pgl2/arith.hpp"

#include <cmath>

namespace pgl2 {

namespace mp = boost::multiprecision;

PrimitivePoint canonicalize(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (a == 0 && b == 0 && c == 0 && d == 0) throw AllZeroError();
    if (a * d - b * c == 0) throw BoundaryPointError();
    BigInt g = mp::gcd(mp::gcd(abs(a), abs(b)), mp::gcd(abs(c), abs(d)));
    a /= g; b /= g; c /= g; d /= g;
    BigInt* first = a != 0 ? &a : b != 0 ? &b : c != 0 ? &c : &d;
    if (*first < 0) { a = -a; b = -b; c = -c; d = -d; }
    return {a, b, c, d};
}

BundleParams BundleParams::from_xy(const Rat& x, const Rat& y) {
    if (!(x > 0 && x + y > 0)) throw NotBigError();
    BundleParams bp;
    bp.x = x;
    bp.y = y;
    Rat disc = 2 * y - x;
    if (disc > 0) {
        bp.case_tag = CaseTag::Rigid;
        bp.a_L = Rat(2) / x;
        bp.b_L = 1;
    } else if (disc < 0) {
        bp.case_tag = CaseTag::NonRigid;
        bp.a_L = Rat(3) / (x + y);
        bp.b_L = 1;
    } else {
        bp.case_tag = CaseTag::AnticanonicalLine;
        bp.a_L = Rat(2) / x;
        bp.b_L = 2;
    }
    return bp;
}

namespace {

// v_p, with v_p(0) treated as +infinity by the callers
long valuation(BigInt n, const BigInt& p) {
    if (n == 0) return -1;  // sentinel, callers never use it
    n = abs(n);
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

long min_valuation(const BigInt& u, const BigInt& v, const BigInt& p) {
    if (u == 0 && v == 0) throw BoundaryPointError();
    if (u == 0) return valuation(v, p);
    if (v == 0) return valuation(u, p);
    return std::min(valuation(u, p), valuation(v, p));
}

Rat pow_rat(const BigInt& p, long e) {
    BigInt v = mp::pow(p, unsigned(std::abs(e)));
    return e >= 0 ? Rat(v) : Rat(1, v);
}

}  // namespace

long local_height_exponent(const PrimitivePoint& pt, const BigInt& prime, Divisor div) {
    long vall = std::min(min_valuation(pt.a, pt.b, prime), min_valuation(pt.c, pt.d, prime));
    long vcd = min_valuation(pt.c, pt.d, prime);
    // H_E = max|entries| / max(|c|,|d|)  ->  p^{vcd - vall}
    if (div == Divisor::E) return vcd - vall;
    // H_D = max|entries| max(|c|,|d|) / |det|  ->  p^{v(det) - vall - vcd}
    return valuation(pt.det(), prime) - vall - vcd;
}

Rat local_height_finite(const PrimitivePoint& pt, const BigInt& prime, Divisor div) {
    return pow_rat(prime, local_height_exponent(pt, prime, div));
}

double local_height_arch(const PrimitivePoint& pt, Divisor div) {
    double S = pt.sigma().convert_to<double>();
    double cd = pt.cd_norm2().convert_to<double>();
    if (div == Divisor::E) return std::sqrt(S / cd);
    double det = abs(pt.det()).convert_to<double>();
    return std::sqrt(S * cd) / det;
}

GlobalHeight global_height(const PrimitivePoint& p, const BundleParams& L) {
    GlobalHeight gh;
    gh.sigma = p.sigma();
    gh.cd_norm2 = p.cd_norm2();
    gh.cd_gcd = p.cd_gcd();
    double xs = L.x.convert_to<double>(), ys = L.y.convert_to<double>();
    double lg = 0.5 * (xs + ys) * std::log(gh.sigma.convert_to<double>()) +
                0.5 * (xs - ys) * std::log(gh.cd_norm2.convert_to<double>()) +
                (ys - xs) * std::log(gh.cd_gcd.convert_to<double>());
    gh.value = std::exp(lg);
    return gh;
}

bool height_lt(const PrimitivePoint& p, const BundleParams& L, const Rat& B) {
    if (!(B > 0)) throw std::invalid_argument("height_lt: B must be positive");
    // Raise to the power 2Q with Q the common denominator of x and y; then
    // H^{2Q} = Sigma^{Q(x+y)} S2^{Q(x-y)} g^{2Q(y-x)} and all exponents are integers.
    BigInt qx = denominator(L.x), qy = denominator(L.y);
    BigInt Q = qx * qy / mp::gcd(qx, qy);
    Rat exy = Rat(Q) * (L.x + L.y), exm = Rat(Q) * (L.x - L.y);
    long e1 = numerator(exy).convert_to<long>();        // Q(x+y) > 0 (bigness)
    long e2 = numerator(exm).convert_to<long>();        // Q(x-y), any sign
    long q = Q.convert_to<long>();
    // quick double-precision screen with a wide safety margin
    {
        double h = global_height(p, L).value;
        double b = B.convert_to<double>();
        if (h < b * (1.0 - 1e-9)) return true;
        if (h > b * (1.0 + 1e-9)) return false;
    }
    BigInt S = p.sigma(), S2 = p.cd_norm2(), g = p.cd_gcd();
    // lhs = Sigma^{e1} S2^{e2} g^{-2 e2} * den(B)^{2Q} vs rhs = num(B)^{2Q}; move
    // negative exponents across
    BigInt lhs = mp::pow(S, unsigned(e1));
    BigInt rhs = mp::pow(numerator(B), unsigned(2 * q));
    lhs *= mp::pow(denominator(B), unsigned(2 * q));
    if (e2 >= 0) {
        lhs *= mp::pow(S2, unsigned(e2));
        rhs *= mp::pow(g, unsigned(2 * e2));
    } else {
        lhs *= mp::pow(g, unsigned(-2 * e2));
        rhs *= mp::pow(S2, unsigned(-e2));
    }
    return lhs < rhs;
}

}  // namespace pgl2
