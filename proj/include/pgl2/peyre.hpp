#ifndef PGL2_PEYRE_HPP
#define PGL2_PEYRE_HPP

#include <map>
#include <string>

#include "pgl2/arith.hpp"

namespace pgl2 {

/// Alpha invariant: 1/12 on the anticanonical line, 1/(2x) rigid, 1/(x+y) non-rigid.
Rat alpha_invariant(const BundleParams& bundle);

/// Local Tamagawa density (1-p^{-2})(1-p^{-3})/(1-p^{-1})^2 = #X(F_p)/p^3.
Rat local_density(long p);

/// 2 pi^2 prod_{p<P} (1-p^{-2})(1-p^{-3}); converges to 12/zeta(3).
double tamagawa_anticanonical(long P);

struct LeadingConstantReport {
    BundleParams bundle;
    double a_L;
    int b_L;
    double c_value;
    std::map<std::string, double> ingredients;
};

/// Leading constant: 1/zeta(3) anticanonical; (3/(pi x)) Lambda(2y/x)/Lambda(2+2y/x)
/// rigid; E(3x/(x+y)-3/2, e)/((x+y) Lambda(3)) non-rigid.
LeadingConstantReport leading_constant(const BundleParams& bundle);

struct ManinConstants {
    double C;  // N(B) = B log B/zeta(3) + C B + o(B)
    double A;  // residue of the double-pole factor; A = C + 1/zeta(3)
};
ManinConstants manin_constants();

/// Predicted main term: B log B/zeta(3) + C B on the anticanonical line,
/// (c/a_L) B^{a_L} for the simple-pole cases.
double predicted_count(const BundleParams& bundle, double B);

}  // namespace pgl2

#endif
