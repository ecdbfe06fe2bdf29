#pragma once

#include <factstat/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace factstat {

/// Integer partition stored as a weakly decreasing list of positive parts.
/// The canonical form is unique, so partitions order and hash by their parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        if (!parts_.empty() && parts_.back() == 0) throw std::invalid_argument("partition parts must be positive");
        for (unsigned p : parts_) size_ += p;
    }

    /// The partition [1^d].
    static Partition ones(unsigned d) { return Partition(std::vector<unsigned>(d, 1)); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// m_j: the number of parts equal to j.
    unsigned multiplicity(unsigned j) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), j));
    }

    /// rk = d - l.
    unsigned rank() const { return size_ - static_cast<unsigned>(parts_.size()); }

    /// (-1)^(d - l): sign of any permutation of this cycle type.
    int sign() const { return rank() % 2 == 0 ? 1 : -1; }

    /// Centralizer order z = prod_j j^{m_j} m_j!.
    Integer z() const {
        Integer out = 1;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t run = i;
            while (run < parts_.size() && parts_[run] == parts_[i]) ++run;
            const auto m = static_cast<unsigned long>(run - i);
            out *= pow_int(Integer(parts_[i]), m) * factorial(static_cast<unsigned>(m));
            i = run;
        }
        return out;
    }

    /// Pairs (j, m_j) with m_j > 0 in increasing j.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            if (!out.empty() && out.back().first == *it) ++out.back().second;
            else out.emplace_back(*it, 1);
        }
        return out;
    }

    /// Conjugate partition (transpose of the Young diagram).
    Partition conjugate() const {
        std::vector<unsigned> out;
        if (!parts_.empty()) {
            for (unsigned col = 1; col <= parts_.front(); ++col) {
                unsigned h = 0;
                for (unsigned p : parts_) h += p >= col;
                out.push_back(h);
            }
        }
        return Partition(std::move(out));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

/// Bracket notation, e.g. "[2,1,1,1]".
inline std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

/// Exponent notation, e.g. "(1^3 2^1)".
inline std::string to_exponent_string(const Partition& p) {
    std::string out = "(";
    bool first = true;
    for (auto [j, m] : p.multiplicities()) {
        if (!first) out += " ";
        out += std::to_string(j) + "^" + std::to_string(m);
        first = false;
    }
    return out + ")";
}

/// All partitions of d, each once, in reverse-lexicographic order of their
/// part lists: [d] first, [1^d] last.
inline std::vector<Partition> partitions_of(unsigned d) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // Greedy descent: at each step the next part is at most the previous one.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

}  // namespace factstat
