#ifndef PGL2_ARITH_HPP
#define PGL2_ARITH_HPP

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgl2 {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct AllZeroError : std::runtime_error {
    AllZeroError() : std::runtime_error("canonicalize: all entries zero") {}
};
struct BoundaryPointError : std::runtime_error {
    BoundaryPointError() : std::runtime_error("canonicalize: det = 0, point lies on the boundary") {}
};
struct UndecidableAtPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBigError : std::runtime_error {
    NotBigError() : std::runtime_error("bundle is not big (need x > 0 and x + y > 0)") {}
};

/// A rational point of PGL2(Q): primitive integer quadruple, det != 0,
/// first nonzero entry positive.
struct PrimitivePoint {
    BigInt a, b, c, d;

    BigInt sigma() const { return a * a + b * b + c * c + d * d; }
    BigInt det() const { return a * d - b * c; }
    BigInt cd_norm2() const { return c * c + d * d; }
    BigInt cd_gcd() const { return boost::multiprecision::gcd(c, d); }  // >= 1 since det != 0
};

PrimitivePoint canonicalize(BigInt a, BigInt b, BigInt c, BigInt d);

enum class CaseTag { AnticanonicalLine, Rigid, NonRigid };

/// A big Q-line bundle L = x D~ + y E with its adjoint invariants.
struct BundleParams {
    Rat x, y;
    Rat a_L;
    int b_L;
    CaseTag case_tag;

    static BundleParams from_xy(const Rat& x, const Rat& y);
    static BundleParams anticanonical() { return from_xy(2, 1); }
};

enum class Divisor { E, Dtilde };

/// Valuation exponent e with H_{divisor,p} = p^e, from the defining max/|det| formulas.
long local_height_exponent(const PrimitivePoint& p, const BigInt& prime, Divisor div);
/// The same local height as an exact rational p^e.
Rat local_height_finite(const PrimitivePoint& p, const BigInt& prime, Divisor div);
/// Archimedean local height (Euclidean norms).
double local_height_arch(const PrimitivePoint& p, Divisor div);

/// Global height H_Dtilde^x H_E^y together with the exact comparison token.
/// Closed form: H = Sigma^{(x+y)/2} (c^2+d^2)^{(x-y)/2} g^{y-x}, g = gcd(c,d).
struct GlobalHeight {
    double value;
    BigInt sigma, cd_norm2, cd_gcd;  // exact token for comparisons
};
GlobalHeight global_height(const PrimitivePoint& p, const BundleParams& L);

/// Exact test H_L(p) < B for rational B > 0. Integer comparison after clearing
/// all denominators; ties are detected exactly (strict inequality fails).
bool height_lt(const PrimitivePoint& p, const BundleParams& L, const Rat& B);

}  // namespace pgl2

#endif
