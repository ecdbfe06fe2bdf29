#pragma once

#include <factstat/stat_expr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace factstat {

inline constexpr unsigned kDefaultStableDegreeLimit = 40;

struct StabilityReport {
    long k = 0;
    unsigned d_max = 0;
    /// (d, <P_d, psi_d^k>) for every degree evaluated, starting at d = k + 1.
    std::vector<std::pair<unsigned, Rational>> sequence;
    bool stabilized = false;
    std::optional<Rational> value;
    /// First degree of the run of equal values.
    std::optional<unsigned> onset;
    /// Equal consecutive values required before declaring stability.
    static constexpr unsigned kRun = 3;
};

/// <P_d, psi_d^k> for the single row k, without building the whole family.
inline Rational inner_with_psi_row(const ClassFunction& p, long k) {
    const unsigned d = p.degree();
    if (k < 0 || k >= static_cast<long>(d)) return 0;
    Rational sum = 0;
    for (const auto& [lambda, v] : p.values()) {
        if (v == 0) continue;
        // psi_d^k(l) / z_l is the coefficient of q^{d-k} in count_all(l).
        sum += v * count_all(lambda).coeff(d - static_cast<unsigned>(k));
    }
    return sum;
}

/// Evaluates <P_d, psi_d^k> for d = k+1, k+2, ... and stops once three
/// consecutive values agree. The three-in-a-row rule is a heuristic: the
/// sequence is known to be eventually constant but no onset bound is used.
inline StabilityReport stable_inner(const StatExpr& e, long k, unsigned d_max,
                                    unsigned limit = kDefaultStableDegreeLimit) {
    if (k < 0) throw std::invalid_argument("stable_inner needs k >= 0");
    if (d_max > limit)
        throw resource_error("d_max " + std::to_string(d_max) + " exceeds the configured limit " + std::to_string(limit));
    StabilityReport report;
    report.k = k;
    report.d_max = d_max;
    unsigned run = 0;
    for (unsigned d = static_cast<unsigned>(k) + 1; d <= d_max; ++d) {
        Rational v = inner_with_psi_row(eval_stat(e, d), k);
        if (!report.sequence.empty() && report.sequence.back().second == v) ++run;
        else run = 1;
        report.sequence.emplace_back(d, v);
        if (run == StabilityReport::kRun) {
            report.stabilized = true;
            report.value = v;
            report.onset = d - (StabilityReport::kRun - 1);
            break;
        }
    }
    return report;
}

}  // namespace factstat
