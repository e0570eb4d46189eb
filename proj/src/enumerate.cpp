#include "pgl2/enumerate.hpp"
#include "pgl2/peyre.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

namespace pgl2 {

namespace mp = boost::multiprecision;

namespace {

// integer exponents of the comparison H^{2Q} = Sigma^{e1} S2^{e2} g^{-2 e2} < B^{2Q}
struct HeightExponents {
    long e1;            // Q(x+y) > 0
    long e2;            // Q(x-y)
    long q2;            // 2Q
    BigInt bnum, bden;  // num(B)^{2Q}, den(B)^{2Q}
    double log_b2q;     // log(B^{2Q})
};

HeightExponents make_exponents(const BundleParams& L, const Rat& B) {
    HeightExponents he;
    BigInt qx = denominator(L.x), qy = denominator(L.y);
    BigInt Q = qx * qy / mp::gcd(qx, qy);
    he.e1 = numerator(Rat(Q) * (L.x + L.y)).convert_to<long>();
    he.e2 = numerator(Rat(Q) * (L.x - L.y)).convert_to<long>();
    he.q2 = 2 * Q.convert_to<long>();
    he.bnum = mp::pow(numerator(B), unsigned(he.q2));
    he.bden = mp::pow(denominator(B), unsigned(he.q2));
    he.log_b2q = he.q2 * std::log(B.convert_to<double>());
    return he;
}

bool sigma_passes(std::int64_t S, std::int64_t S2, std::int64_t g, const HeightExponents& he) {
    BigInt lhs = mp::pow(BigInt(S), unsigned(he.e1)) * he.bden;
    BigInt rhs = he.bnum;
    if (he.e2 >= 0) {
        lhs *= mp::pow(BigInt(S2), unsigned(he.e2));
        rhs *= mp::pow(BigInt(g), unsigned(2 * he.e2));
    } else {
        lhs *= mp::pow(BigInt(g), unsigned(-2 * he.e2));
        rhs *= mp::pow(BigInt(S2), unsigned(-he.e2));
    }
    return lhs < rhs;
}

// largest Sigma passing the strict height test for this (c,d); -1 if none
std::int64_t sigma_limit(std::int64_t S2, std::int64_t g, const HeightExponents& he,
                         std::int64_t cap) {
    if (S2 == 0) return -1;
    double est = (he.log_b2q + 2.0 * he.e2 * std::log(double(g)) -
                  he.e2 * std::log(double(S2))) / he.e1;
    std::int64_t L = est > 43.0 ? cap : std::int64_t(std::exp(std::max(est, 0.0)));
    L = std::min(L, cap);
    if (L < 1) L = 1;
    while (L < cap && sigma_passes(L + 1, S2, g, he)) ++L;
    while (L >= 1 && !sigma_passes(L, S2, g, he)) --L;
    return L == 0 ? -1 : L;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = std::int64_t(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// core: counts per bound (ascending) over canonical primitive points; work is
// partitioned by c-strips, per-thread histograms merged by integer addition
std::vector<std::uint64_t> count_core(const BundleParams& bundle, const std::vector<Rat>& bounds,
                                      unsigned threads, std::int64_t sigma_cap_override,
                                      std::vector<std::array<std::int64_t, 4>>* sink) {
    const size_t nb = bounds.size();
    std::vector<HeightExponents> hes;
    hes.reserve(nb);
    for (const auto& B : bounds) hes.push_back(make_exponents(bundle, B));

    std::int64_t smax = search_radius(bundle, bounds.back());
    if (sigma_cap_override >= 0) smax = sigma_cap_override;
    if (smax > (std::int64_t(1) << 31))
        throw RadiusOverflow("enumeration radius exceeds the configured budget");
    std::int64_t R = isqrt64(smax);

    // rough work estimate to refuse infeasible requests early
    {
        double est = 0.0;
        const auto& he = hes.back();
        for (std::int64_t c = 0; c <= R; c += 13) {
            for (std::int64_t d = -R; d <= R; d += 13) {
                std::int64_t S2 = c * c + d * d;
                if (S2 == 0 || S2 > smax) continue;
                std::int64_t L = sigma_limit(S2, std::gcd(c, std::llabs(d)), he, smax);
                if (L > S2) est += 1.6 * double(L - S2) * 169.0;
            }
        }
        if (est > 8e9) throw RadiusOverflow("estimated enumeration work exceeds the budget");
    }

    if (threads == 0) threads = 1;
    std::atomic<std::int64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(nb, 0));
    std::vector<std::vector<std::array<std::int64_t, 4>>> sinks(sink ? threads : 0);

    auto worker = [&](unsigned tid) {
        auto& hist = partial[tid];
        std::vector<std::int64_t> lims(nb);
        for (;;) {
            std::int64_t ci = next.fetch_add(1);
            if (ci > 2 * R) break;
            std::int64_t c = ci - R;
            std::int64_t dmax = isqrt64(smax - c * c);
            for (std::int64_t d = -dmax; d <= dmax; ++d) {
                if (c == 0 && d == 0) continue;
                std::int64_t S2 = c * c + d * d;
                std::int64_t g = std::gcd(std::llabs(c), std::llabs(d));
                std::int64_t lmax = -1;
                for (size_t j = 0; j < nb; ++j) {
                    lims[j] = sigma_limit(S2, g, hes[j], smax);
                    lmax = std::max(lmax, lims[j]);
                }
                if (lmax <= S2) continue;
                std::int64_t ab2max = lmax - S2;
                std::int64_t amax = isqrt64(ab2max);
                for (std::int64_t a = 0; a <= amax; ++a) {
                    std::int64_t bmax = isqrt64(ab2max - a * a);
                    std::int64_t b = a == 0 ? 1 : -bmax;
                    for (; b <= bmax; ++b) {
                        if (a * d - b * c == 0) continue;
                        if (std::gcd(std::gcd(a, std::llabs(b)), g) != 1) continue;
                        std::int64_t S = S2 + a * a + b * b;
                        size_t j = 0;
                        while (j < nb && lims[j] < S) ++j;
                        if (j == nb) continue;
                        ++hist[j];
                        if (sink) sinks[tid].push_back({a, b, c, d});
                    }
                }
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> counts(nb, 0);
    for (unsigned t = 0; t < threads; ++t)
        for (size_t j = 0; j < nb; ++j) counts[j] += partial[t][j];
    for (size_t j = 1; j < nb; ++j) counts[j] += counts[j - 1];
    if (sink)
        for (auto& s : sinks)
            sink->insert(sink->end(), s.begin(), s.end());
    return counts;
}

unsigned resolve_threads(std::optional<unsigned> hint) {
    if (hint && *hint >= 1) return *hint;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

}  // namespace

std::int64_t search_radius(const BundleParams& bundle, const Rat& B) {
    if (!(B > 0)) throw std::invalid_argument("search_radius: B must be positive");
    BigInt qx = denominator(bundle.x), qy = denominator(bundle.y);
    BigInt Q = qx * qy / mp::gcd(qx, qy);
    long q = Q.convert_to<long>();
    long e;
    if (bundle.x >= bundle.y)
        e = numerator(Rat(Q) * (bundle.x + bundle.y)).convert_to<long>();  // floor(B^{2/(x+y)})
    else
        e = numerator(Rat(2 * Q) * bundle.x).convert_to<long>();           // floor(B^{1/x})
    BigInt bn = mp::pow(numerator(B), unsigned(2 * q));
    BigInt bd = mp::pow(denominator(B), unsigned(2 * q));
    auto ok = [&](std::int64_t S) { return mp::pow(BigInt(S), unsigned(e)) * bd <= bn; };
    double est = std::pow(B.convert_to<double>(), 2.0 * double(q) / double(e));
    auto S = std::int64_t(est);
    if (S < 1) S = 1;
    while (ok(S + 1)) ++S;
    while (S > 0 && !ok(S)) --S;
    return S;
}

CountRecord count_points(const CountQuery& q) {
    auto t0 = std::chrono::steady_clock::now();
    auto counts = count_core(q.bundle, {q.bound}, resolve_threads(q.thread_hint), -1, nullptr);
    auto t1 = std::chrono::steady_clock::now();
    CountRecord r;
    r.bound = q.bound;
    r.count = counts[0];
    r.main_term = predicted_count(q.bundle, q.bound.convert_to<double>());
    r.residual = (double(r.count) - r.main_term) / q.bound.convert_to<double>();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::vector<CountRecord> count_grid(const BundleParams& bundle, const Rat& B0, const Rat& ratio,
                                    int k, std::optional<unsigned> thread_hint) {
    if (!(ratio > 1) || k < 1) throw std::invalid_argument("count_grid: need ratio > 1, k >= 1");
    std::vector<Rat> bounds;
    Rat B = B0;
    for (int j = 0; j < k; ++j) {
        bounds.push_back(B);
        B *= ratio;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto counts = count_core(bundle, bounds, resolve_threads(thread_hint), -1, nullptr);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::vector<CountRecord> out;
    for (int j = 0; j < k; ++j) {
        CountRecord r;
        r.bound = bounds[j];
        r.count = counts[j];
        r.main_term = predicted_count(bundle, bounds[j].convert_to<double>());
        r.residual = (double(r.count) - r.main_term) / bounds[j].convert_to<double>();
        r.elapsed_ms = ms;
        out.push_back(r);
    }
    return out;
}

std::uint64_t count_with_sigma_cap(const BundleParams& bundle, const Rat& B,
                                   std::int64_t sigma_cap, unsigned threads) {
    return count_core(bundle, {B}, threads, sigma_cap, nullptr)[0];
}

std::uint64_t stream_points(const CountQuery& q, std::ostream& out) {
    std::vector<std::array<std::int64_t, 4>> pts;
    auto counts = count_core(q.bundle, {q.bound}, 1, -1, &pts);
    std::sort(pts.begin(), pts.end());
    for (const auto& p : pts)
        out << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << '\n';
    return counts[0];
}

}  // namespace pgl2
