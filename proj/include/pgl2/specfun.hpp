#ifndef PGL2_SPECFUN_HPP
#define PGL2_SPECFUN_HPP

#include <complex>
#include <map>
#include <stdexcept>

namespace pgl2 {

using cplx = std::complex<double>;

struct PoleError : std::runtime_error {
    cplx pole;
    explicit PoleError(cplx at, const std::string& what) : std::runtime_error(what), pole(at) {}
};

struct OutOfValidatedRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested accuracy for special-function evaluation.
struct Precision {
    double target_eps = 1e-12;
    int working_digits = 25;
};

/// Constants computed once at startup and cached (thread-safe init).
struct NamedConstants {
    double euler_gamma;
    double zeta3;
    double zeta_prime_2;
    double zeta_prime_3;
    double gamma_quarter;   // Gamma(1/4)
    double eta_at_i;        // Gamma(1/4)/(2 pi^{3/4})
    double catalan;
};
const NamedConstants& named_constants();

/// Gamma(z), relative error < 1e-12 for |z| <= 100. Throws PoleError at 0, -1, -2, ...
cplx gamma_fn(cplx z);
cplx log_gamma(cplx z);

/// Riemann zeta by Euler-Maclaurin, valid well beyond Re s > -1. Throws PoleError at s = 1.
cplx zeta_fn(cplx s);
cplx zeta_prime(cplx s);

// Laurent data around an expansion point: coefficients c_k for k in [kmin, kmax].
struct LaurentExpansion {
    cplx center;
    std::map<int, cplx> coefficients;
    double radius_used = 0.0;
    cplx coeff(int k) const {
        auto it = coefficients.find(k);
        return it == coefficients.end() ? cplx(0.0) : it->second;
    }
};

/// Completed zeta Lambda(s) = pi^{-s/2} Gamma(s/2) zeta(s); simple poles at 0 and 1.
struct LambdaResult {
    bool is_laurent;
    cplx value;                 // valid when !is_laurent
    LaurentExpansion laurent;   // valid when is_laurent (within 0.05 of a pole)
};
LambdaResult lambda_completed(cplx s);
/// Direct value; caller must stay away from the poles.
cplx lambda_value(cplx s);

/// Modified Bessel K of complex order by quadrature of the cosh integral.
/// Validated for |Re nu| <= 10, |Im nu| <= 50, 0.01 <= x <= 200; throws OutOfValidatedRange.
/// Accuracy is absolute for large |Im nu| (the representation cancels heavily there).
cplx bessel_k(cplx order, double x);

// Wider-clamp variant used internally (x down to 1e-6); same algorithm and tests.
cplx bessel_k_impl(cplx order, double x);

}  // namespace pgl2

#endif
