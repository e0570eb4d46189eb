#ifndef PGL2_LOCALINT_HPP
#define PGL2_LOCALINT_HPP

#include <optional>
#include <stdexcept>

#include "pgl2/specfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pgl2 {

using BigRat = boost::multiprecision::cpp_rational;

struct PoleProximity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadratureBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationNotProvablyComplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Satake parameter chi(varpi) of an unramified principal series at a prime q,
/// constrained to the Ramanujan window q^{-delta} <= |chi| <= q^{delta}.
struct SatakeParam {
    cplx chi;
    long q;
    double delta;
    SatakeParam(cplx chi_, long q_, double delta_);
};

/// W_pi(varpi^m): 0 for m < 0, q^{-m/2} sinh((m+1) log chi)/sinh(log chi) for
/// m >= 0, with the chi -> +-1 limit q^{-m/2} (m+1) (+-1)^m taken stably.
cplx whittaker_unramified(const SatakeParam& sp, long m);

/// Partial sum sum_{m<=M} q^{m(1/2-s)} W(varpi^m); converges to l_function.
cplx hecke_l_identity(const SatakeParam& sp, cplx s, int M);
cplx l_function(const SatakeParam& sp, cplx s);

/// (1 - q^{-(s+w)}) / ((1 - q^{-(s-1)})(1 - q^{-w})), the plain local height integral.
cplx height_integral_nonarch(long p, cplx s, cplx w);

/// sqrt(pi) Gamma((s-1)/2) Gamma(w/2) / Gamma((s+w)/2).
cplx height_integral_arch(cplx s, cplx w);

enum class Place { Finite, Archimedean };
/// zeta_p(s+tau-1) zeta_p(w-tau)/zeta_p(s+w) at a finite place (pass p);
/// sqrt(pi) Gamma((s+tau-1)/2) Gamma((w-tau)/2)/Gamma((s+w)/2) at infinity.
cplx height_integral_twisted(Place place, long p, cplx s, cplx w, cplx tau);

enum class ShellMeasure { Multiplicative, Additive };
/// Exact value of the unit-shell character integral: with the multiplicative
/// measure on O^x (vol 1): 1 if v(beta) >= 0, -1/(q-1) if v(beta) = -1, else 0.
/// Additive variant carries vol(O^x) = 1 - 1/q.
BigRat character_shell_integral(long p, int beta_valuation, ShellMeasure measure);

/// Options for the exact shell-sum oracle. At most one twist may be set.
struct OracleOptions {
    std::optional<int> alpha_valuation;      // enables the psi(alpha x) factor
    std::optional<SatakeParam> satake;       // Whittaker twist W_pi
    std::optional<double> eisenstein_t;      // Whittaker twist with chi = p^{-it}
    std::optional<cplx> tau;                 // |a|^tau torus twist
};

/// Exact finite evaluation of the local integral by torus/x-valuation shells.
/// All shell x-integrals are closed rationals in 1/q; infinite shell ranges are
/// summed as exact geometric series. No truncation error beyond rounding.
cplx oracle_nonarch(long p, cplx s, cplx w, const OracleOptions& opt);

/// Exact-rational variant for the untwisted/integer-twist integral at integer (s,w).
BigRat oracle_nonarch_exact(long p, long s, long w, long tau = 0);

/// The closed formula for J_{pi_v}(alpha) with k = v(alpha) >= 0.
cplx j_cuspidal(const SatakeParam& sp, int k, cplx s, cplx w);

/// Eisenstein variant: j_cuspidal with chi = p^{-it}.
cplx j_eisenstein(double t, long p, int k, cplx s, cplx w);

/// Normalized archimedean Whittaker value |a|^{1/2} K_mu(2 pi |a|)/K_mu(2 pi).
cplx whittaker_arch(cplx mu, double a);

/// J_{pi_infty}(alpha) by adaptive 2-D quadrature in Iwasawa coordinates.
cplx j_arch_quadrature(cplx mu, int alpha, cplx s, cplx w, double eps);

/// Lambda(s-1) Lambda(w) / Lambda(s+w) and its Euler-product check over p < P.
cplx z_res(cplx s, cplx w);
cplx euler_product_check(cplx s, cplx w, long P);

}  // namespace pgl2

#endif
