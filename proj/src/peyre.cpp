#include "pgl2/peyre.hpp"
#include "pgl2/eisenstein.hpp"
#include "pgl2/localint.hpp"

#include <cmath>
#include <vector>

namespace pgl2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Rat alpha_invariant(const BundleParams& bundle) {
    switch (bundle.case_tag) {
        case CaseTag::AnticanonicalLine:
            // cone integral over {x >= 0, y - x >= 0} of e^{-(4y-x)}
            return Rat(1, 12);
        case CaseTag::Rigid:
            return 1 / (2 * bundle.x);
        case CaseTag::NonRigid:
            return 1 / (bundle.x + bundle.y);
    }
    return 0;
}

Rat local_density(long p) {
    // (1-p^{-2})(1-p^{-3})/(1-p^{-1})^2, cleared to integers
    Rat p2 = Rat(BigInt(p) * p), p3 = Rat(BigInt(p) * p * p);
    return (1 - 1 / p2) * (1 - 1 / p3) / ((1 - Rat(1, p)) * (1 - Rat(1, p)));
}

double tamagawa_anticanonical(long P) {
    if (P < 2) throw std::invalid_argument("tamagawa_anticanonical: P >= 2");
    std::vector<bool> comp(P, false);
    double prod = 1.0;
    for (long p = 2; p < P; ++p) {
        if (comp[p]) continue;
        for (long j = 2 * p; j < P; j += p) comp[j] = true;
        double ip = 1.0 / double(p);
        prod *= (1.0 - ip * ip) * (1.0 - ip * ip * ip);
    }
    return 2.0 * kPi * kPi * prod;
}

LeadingConstantReport leading_constant(const BundleParams& bundle) {
    LeadingConstantReport rep;
    rep.bundle = bundle;
    rep.a_L = bundle.a_L.convert_to<double>();
    rep.b_L = bundle.b_L;
    double x = bundle.x.convert_to<double>(), y = bundle.y.convert_to<double>();
    switch (bundle.case_tag) {
        case CaseTag::AnticanonicalLine: {
            double alpha = alpha_invariant(bundle).convert_to<double>();
            double tau = 12.0 / named_constants().zeta3;
            rep.ingredients["alpha"] = alpha;
            rep.ingredients["tamagawa"] = tau;
            rep.c_value = alpha * tau;  // = 1/zeta(3)
            break;
        }
        case CaseTag::Rigid: {
            double r = 2.0 * y / x;
            if (std::abs(r - 1.0) < 1e-6 || std::abs(r) < 1e-6)
                throw PoleProximity("leading_constant: Lambda argument at a pole");
            double num = lambda_value(r).real(), den = lambda_value(2.0 + r).real();
            rep.ingredients["lambda_ratio"] = num / den;
            rep.c_value = 3.0 / (kPi * x) * num / den;
            break;
        }
        case CaseTag::NonRigid: {
            double sarg = 3.0 * x / (x + y) - 1.5;
            if (std::abs(sarg - 0.5) < 0.02)
                throw PoleProximity("leading_constant: Eisenstein argument at the pole");
            double Ev = eval_fourier(cplx(sarg, 0.0), 1e-10).value.real();
            double lam3 = lambda_value(3.0).real();
            rep.ingredients["eisenstein"] = Ev;
            rep.ingredients["lambda3"] = lam3;
            rep.c_value = Ev / ((x + y) * lam3);
            break;
        }
    }
    return rep;
}

ManinConstants manin_constants() {
    // zeta(3) A = 7 gamma + 4 log 2 + 6 log pi - 8 log Gamma(1/4)
    //            - 24 zeta'(2)/pi^2 - 3 zeta'(3)/zeta(3) - 3, and C = A - 1/zeta(3).
    static const ManinConstants mc = [] {
        const auto& n = named_constants();
        double zA = 7.0 * n.euler_gamma + 4.0 * std::log(2.0) + 6.0 * std::log(kPi) -
                    8.0 * std::log(n.gamma_quarter) - 24.0 / (kPi * kPi) * n.zeta_prime_2 -
                    3.0 * n.zeta_prime_3 / n.zeta3 - 3.0;
        ManinConstants m;
        m.A = zA / n.zeta3;
        m.C = (zA - 1.0) / n.zeta3;
        return m;
    }();
    return mc;
}

double predicted_count(const BundleParams& bundle, double B) {
    if (!(B > 1.0)) throw std::invalid_argument("predicted_count: need B > 1");
    if (bundle.case_tag == CaseTag::AnticanonicalLine) {
        // H_{xD+yE} = H_{-K}^{x/2} on the line 2y = x, so the count below B is
        // the anticanonical count below B^{a_L}
        double a = bundle.a_L.convert_to<double>();
        if (std::abs(a - 1.0) > 1e-12) B = std::pow(B, a);
        return (B * std::log(B)) / named_constants().zeta3 + manin_constants().C * B;
    }
    double a = bundle.a_L.convert_to<double>();
    double c = leading_constant(bundle).c_value;
    return c / a * std::pow(B, a);
}

}  // namespace pgl2
