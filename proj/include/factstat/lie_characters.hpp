#pragma once

#include <factstat/measures.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace factstat {

/// Character families read off the product identities by coefficient
/// extraction:
///   psi: H^{2k}(PConf_d(R^3)) = Lie_d^k,   psi_d^k(l) = [q^{d-k}] z_l * count_all(l)
///   phi: H^k(PConf_d(C)),                   phi_d^k(l) = (-1)^k [q^{d-k}] z_l * count_sf(l)
///   chi: H^k(PConf_d(C)/C^x),               chi^k = phi^k - chi^{k-1}, chi^{-1} = 0
///
/// The phi sign: the squarefree identity carries (-1)^k phi_d^k as the
/// coefficient of q^{d-k} in z_l * prod_j binom(M_j(q), m_j), so undoing the
/// sign gives the formula above.
enum class CharacterKind { psi, phi, chi };

inline std::string_view to_string(CharacterKind k) {
    switch (k) {
        case CharacterKind::psi: return "psi";
        case CharacterKind::phi: return "phi";
        case CharacterKind::chi: return "chi";
    }
    return "?";
}

inline CharacterKind parse_character_kind(std::string_view s) {
    if (s == "psi") return CharacterKind::psi;
    if (s == "phi") return CharacterKind::phi;
    if (s == "chi") return CharacterKind::chi;
    throw std::invalid_argument("unknown character kind: " + std::string(s));
}

namespace detail {

inline void require_partition_of(const Partition& lambda, unsigned d) {
    if (lambda.size() != d)
        throw std::invalid_argument("partition " + to_string(lambda) + " is not a partition of " + std::to_string(d));
}

/// Integer coefficients of z_l * count(l), index = power of q.
inline std::vector<Integer> scaled_counts(const QPoly& count, const Partition& lambda) {
    QPoly scaled = count * Rational(lambda.z());
    std::vector<Integer> out(lambda.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = to_integer(scaled.coeff(i), "character coefficient at " + to_string(lambda));
    return out;
}

/// phi_d^k(l) for k = 0..d-1.
inline std::vector<Integer> phi_row(const Partition& lambda) {
    const unsigned d = lambda.size();
    auto c = scaled_counts(count_sf(lambda), lambda);
    std::vector<Integer> out(d);
    for (unsigned k = 0; k < d; ++k) out[k] = k % 2 == 0 ? c[d - k] : Integer(-c[d - k]);
    return out;
}

/// chi_d^k(l) for k = 0..d-2, checking that the telescope closes with chi_d^{d-1} = 0.
inline std::vector<Integer> chi_row(const Partition& lambda) {
    const unsigned d = lambda.size();
    auto phi = phi_row(lambda);
    std::vector<Integer> out(d);
    Integer prev = 0;
    for (unsigned k = 0; k < d; ++k) {
        out[k] = phi[k] - prev;
        prev = out[k];
    }
    if (out[d - 1] != 0)
        throw internal_error("chi telescope does not vanish in top degree at " + to_string(lambda));
    out.pop_back();
    return out;
}

}  // namespace detail

/// psi_d^k(lambda); zero for k outside [0, d-1].
inline Integer psi(unsigned d, long k, const Partition& lambda) {
    detail::require_partition_of(lambda, d);
    if (k < 0 || k >= static_cast<long>(d)) return 0;
    auto c = detail::scaled_counts(count_all(lambda), lambda);
    return c[d - static_cast<unsigned>(k)];
}

/// phi_d^k(lambda); zero for k outside [0, d-1].
inline Integer phi(unsigned d, long k, const Partition& lambda) {
    detail::require_partition_of(lambda, d);
    if (k < 0 || k >= static_cast<long>(d)) return 0;
    return detail::phi_row(lambda)[static_cast<std::size_t>(k)];
}

/// chi_d^k(lambda) for d >= 2; zero for k outside [0, d-2].
inline Integer chi(unsigned d, long k, const Partition& lambda) {
    detail::require_partition_of(lambda, d);
    if (d < 2) throw std::invalid_argument("chi needs d >= 2");
    auto row = detail::chi_row(lambda);
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
}

/// Full character table for one family: values[k][i] is the character in
/// degree k at partitions[i], partitions in reverse-lexicographic order.
struct CharacterFamily {
    unsigned d = 0;
    CharacterKind kind = CharacterKind::psi;
    std::vector<Partition> partitions;
    std::vector<std::vector<Integer>> values;

    std::size_t degrees() const { return values.size(); }
    const Integer& at(std::size_t k, std::size_t i) const { return values.at(k).at(i); }
};

inline CharacterFamily compute_character_family(unsigned d, CharacterKind kind) {
    if (d < 1) throw std::invalid_argument("character family needs d >= 1");
    if (kind == CharacterKind::chi && d < 2) throw std::invalid_argument("chi family needs d >= 2");
    CharacterFamily fam{d, kind, partitions_of(d), {}};
    const std::size_t rows = kind == CharacterKind::chi ? d - 1 : d;
    fam.values.assign(rows, std::vector<Integer>(fam.partitions.size()));
    for (std::size_t i = 0; i < fam.partitions.size(); ++i) {
        const auto& lambda = fam.partitions[i];
        std::vector<Integer> col;
        switch (kind) {
            case CharacterKind::psi: {
                auto c = detail::scaled_counts(count_all(lambda), lambda);
                for (unsigned k = 0; k < d; ++k) col.push_back(c[d - k]);
                break;
            }
            case CharacterKind::phi: col = detail::phi_row(lambda); break;
            case CharacterKind::chi: col = detail::chi_row(lambda); break;
        }
        for (std::size_t k = 0; k < rows; ++k) fam.values[k][i] = col[k];
    }
    return fam;
}

struct RegularCheckReport {
    unsigned d = 0;
    bool passed = true;
    /// Partitions where sum_k psi_d^k disagrees with the regular character.
    std::vector<Partition> offending;
    std::vector<Integer> sums;
};

/// Checks sum_k psi_d^k(l) = d! at l = [1^d] and 0 elsewhere.
inline RegularCheckReport regular_check(const CharacterFamily& psi_family) {
    if (psi_family.kind != CharacterKind::psi) throw std::invalid_argument("regular_check needs the psi family");
    const unsigned d = psi_family.d;
    RegularCheckReport report{d, true, {}, {}};
    const Partition identity = Partition::ones(d);
    for (std::size_t i = 0; i < psi_family.partitions.size(); ++i) {
        Integer sum = 0;
        for (const auto& row : psi_family.values) sum += row[i];
        report.sums.push_back(sum);
        const Integer expected = psi_family.partitions[i] == identity ? factorial(d) : Integer(0);
        if (sum != expected) {
            report.passed = false;
            report.offending.push_back(psi_family.partitions[i]);
        }
    }
    return report;
}

inline RegularCheckReport regular_check(unsigned d) {
    return regular_check(compute_character_family(d, CharacterKind::psi));
}

}  // namespace factstat
