#ifndef PGL2_EISENSTEIN_HPP
#define PGL2_EISENSTEIN_HPP

#include <functional>
#include <stdexcept>

#include "pgl2/specfun.hpp"

namespace pgl2 {

struct NotConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZetaDenominatorNearZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EisensteinRoute { Lattice, Fourier };

struct EisensteinValue {
    cplx s;
    cplx value;
    EisensteinRoute route;
    double tail_bound;  // rigorous bound on the truncation error
};

/// E(s,e) as the coprime lattice sum sum_{(c,d) coprime}/± (c^2+d^2)^{-(s+1/2)}.
/// Requires Re s > 1/2. Direct Moebius summation where the radius is feasible,
/// theta-accelerated (incomplete-gamma) summation of the same series otherwise.
EisensteinValue eval_lattice(cplx s, double eps);

/// E(s,e) by the Fourier expansion: 1 + Lambda(2s)/Lambda(2s+1)
/// + (2/zeta(2s+1)) sum_n W_fin(n,s) W_arch(n,s). Valid off s = 1/2; gives the
/// analytic continuation for Re s <= 1/2 as well.
EisensteinValue eval_fourier(cplx s, double eps);

/// Laurent coefficients of f around `center` by a trapezoidal Cauchy contour,
/// doubling nodes until stable to eps. Pole order at the center must be <= 2.
LaurentExpansion laurent_at(const std::function<cplx(cplx)>& f, cplx center,
                            int max_order, double radius, double eps = 1e-10);

/// Order-(-1) Laurent coefficient of E(s,e) at s = 1/2 (equals 3/pi).
double residue_at_half();

struct KroneckerConstants {
    double c_of_e;          // 2 gamma - 2 log 2 - 4 log eta(i)
    double constant_term;   // (3/pi) C(e) - 36 zeta'(2)/pi^3
};
KroneckerConstants kronecker_constants();

// divisor-sum Whittaker factor W_fin(n,s) = sigma_{2s}(n)/n^{s+1/2}, exposed for tests
cplx whittaker_fourier_fin(long n, cplx s);

}  // namespace pgl2

#endif
