#ifndef PGL2_ENUMERATE_HPP
#define PGL2_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "pgl2/arith.hpp"

namespace pgl2 {

struct RadiusOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountQuery {
    BundleParams bundle;
    Rat bound;
    std::optional<unsigned> thread_hint;
};

struct CountRecord {
    Rat bound;
    std::uint64_t count = 0;
    double main_term = 0.0;   // from the predicted asymptotic
    double residual = 0.0;    // (count - main_term)/bound
    double elapsed_ms = 0.0;
};

/// Largest admissible Sigma = a^2+b^2+c^2+d^2: floor(B^{2/(x+y)}) when x >= y,
/// floor(B^{1/x}) otherwise. Exact integer floor.
std::int64_t search_radius(const BundleParams& bundle, const Rat& B);

/// Exhaustive deterministic count of canonical primitive points with H_L < B.
CountRecord count_points(const CountQuery& q);

/// Counts at B0 * ratio^j, j = 0..k-1, in one enumeration pass.
std::vector<CountRecord> count_grid(const BundleParams& bundle, const Rat& B0,
                                    const Rat& ratio, int k,
                                    std::optional<unsigned> thread_hint = {});

/// Test hook: count with an explicit Sigma cap (radius-soundness checks).
std::uint64_t count_with_sigma_cap(const BundleParams& bundle, const Rat& B,
                                   std::int64_t sigma_cap, unsigned threads);

/// Stream all points with H_L < B to `out`, one "a b c d" per line,
/// sorted lexicographically. Single-threaded.
std::uint64_t stream_points(const CountQuery& q, std::ostream& out);

}  // namespace pgl2

#endif
