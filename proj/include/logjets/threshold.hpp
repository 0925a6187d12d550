#pragma once

#include "leading.hpp"
#include "unipoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace logjets {

// Outcome of the degree sweep: the least d whose positivity window contains a
// point where the delta-cubic is positive, plus supporting evidence.
struct ThresholdResult {
    long minimal_d = 0;
    bool previous_d_fails = false;   // the window at minimal_d - 1 is nonempty and fails
    Rational window_lo, window_hi;   // open interval (12/(d-4), 1/18) at minimal_d
    Rational witness;                // point of the window with positive value
    long weight_threshold = 0;       // least m with m (1/6 - 3 delta) > 3d + 2 at the witness
};

inline std::optional<std::pair<Rational, Rational>> positivity_window(long d) {
    if (d <= 4) return std::nullopt;
    Rational lo(12, Integer(d - 4)), hi(1, 18);
    if (lo >= hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

inline bool window_admits_positive(const std::map<int, DCoeffs>& table, long d) {
    auto w = positivity_window(d);
    if (!w) return false;
    return exists_positive_on_open(delta_cubic(table, d), w->first, w->second);
}

inline long least_weight_above(const Rational& delta, long d) {
    Rational slope = Rational(1, 6) - 3 * delta;
    if (slope <= 0) throw std::domain_error("weight bound needs delta < 1/18");
    Rational bound = Rational(3 * d + 2) / slope;
    Integer fl = rational_floor(bound);
    long m = long(fl) + 1;
    if (Rational(m) * slope <= Rational(3 * d + 2)) ++m;
    return m;
}

inline ThresholdResult threshold_search(const std::map<int, DCoeffs>& table, long d_lo = 5,
                                        long d_hi = 5000) {
    for (long d = d_lo; d <= d_hi; ++d) {
        if (!window_admits_positive(table, d)) continue;
        ThresholdResult r;
        r.minimal_d = d;
        auto w = positivity_window(d);
        r.window_lo = w->first;
        r.window_hi = w->second;
        r.previous_d_fails = positivity_window(d - 1).has_value() &&
                             !window_admits_positive(table, d - 1);
        r.witness = positive_witness(delta_cubic(table, d), w->first, w->second);
        r.weight_threshold = least_weight_above(r.witness, d);
        return r;
    }
    throw std::runtime_error("no degree in range admits a positive window point");
}

} // namespace logjets
