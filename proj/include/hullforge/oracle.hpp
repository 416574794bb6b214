// Brute-force oracles: exhaustive minimum distance, MDS-by-minors, and hull
// dimension by codeword enumeration. Deliberately independent of the fast
// linear-algebra paths so the two can check each other. Each oracle is
// budgeted and reports nullopt when the instance is too large, which callers
// treat as a distinct non-fatal outcome.

#pragma once

#include "grs.hpp"
#include "hull.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace hullforge {

struct OracleBudgets {
    std::uint64_t distance_words = 100000;  // max q^k for exhaustive distance
    std::uint64_t hull_words = 10000;       // max q^k for hull enumeration
    std::uint64_t minor_length = 14;        // max N for the all-minors MDS check
};

// HULLFORGE_BUDGET=<words> overrides both codeword-enumeration caps.
inline OracleBudgets budgets_from_env() {
    OracleBudgets b;
    if (const char* s = std::getenv("HULLFORGE_BUDGET")) {
        std::string v(s);
        if (!v.empty()) {
            std::uint64_t words = std::stoull(v);
            b.distance_words = words;
            b.hull_words = words;
        }
    }
    return b;
}

namespace detail {

// q^k if it stays within cap, otherwise nullopt.
inline std::optional<std::uint64_t> words_within(std::uint64_t q, std::uint64_t k,
                                                 std::uint64_t cap) {
    std::uint64_t words = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (words > cap / q) return std::nullopt;
        words *= q;
    }
    if (words > cap) return std::nullopt;
    return words;
}

// Walks every message vector in odometer order, maintaining the codeword
// incrementally: one digit change costs one scaled row addition.
template <typename Visit>
void for_each_codeword(const GrsCode& code, Visit&& visit) {
    const Field& f = *code.field;
    std::uint64_t q = f.q();
    Matrix gen = generator_matrix(code);
    std::size_t N = gen.cols();
    std::vector<Elem> msg(code.k, 0);
    std::vector<Elem> word(N, 0);
    visit(word);
    for (;;) {
        std::size_t i = 0;
        while (i < code.k) {
            Elem old = msg[i];
            if (old + 1 < q) {
                msg[i] = old + 1;
                Elem delta = f.sub(msg[i], old);
                for (std::size_t j = 0; j < N; ++j)
                    word[j] = f.add(word[j], f.mul(delta, gen.at(i, j)));
                break;
            }
            msg[i] = 0;
            Elem delta = f.sub(0, old);
            for (std::size_t j = 0; j < N; ++j)
                word[j] = f.add(word[j], f.mul(delta, gen.at(i, j)));
            ++i;
        }
        if (i == code.k) return;
        visit(word);
    }
}

}  // namespace detail

// Exhaustive minimum distance over all q^k codewords.
inline std::optional<std::uint32_t> min_distance_enum(const GrsCode& code,
                                                      const OracleBudgets& budgets) {
    const Field& f = *code.field;
    auto words = detail::words_within(f.q(), code.k, budgets.distance_words);
    if (!words) return std::nullopt;
    std::uint32_t best = static_cast<std::uint32_t>(code.length()) + 1;
    bool first = true;
    detail::for_each_codeword(code, [&](const std::vector<Elem>& w) {
        if (first) {  // skip the zero word
            first = false;
            return;
        }
        std::uint32_t wt = 0;
        for (Elem e : w) wt += e != 0;
        if (wt < best) best = wt;
    });
    return best;
}

// MDS check from first principles: every k-column minor of the generator
// matrix must be invertible.
inline std::optional<bool> mds_minor_check(const GrsCode& code, const OracleBudgets& budgets) {
    std::size_t N = code.length();
    if (N > budgets.minor_length) return std::nullopt;
    Matrix gen = generator_matrix(code);
    std::size_t k = code.k;
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
        Matrix minor(code.field, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) minor.at(r, c) = gen.at(r, cols[c]);
        if (rank(minor) != k) return false;
        // next k-combination of [0, N)
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cols[i] + (k - i) < N) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

// Hull dimension by counting codewords that also lie in the dual. The count
// must be a power of q; anything else means the fast paths and this oracle
// cannot both be right.
inline std::optional<std::uint32_t> hull_enum(const GrsCode& code, InnerProduct kind,
                                              const OracleBudgets& budgets) {
    const Field& f = *code.field;
    auto words = detail::words_within(f.q(), code.k, budgets.hull_words);
    if (!words) return std::nullopt;
    std::uint64_t count = 0;
    detail::for_each_codeword(code, [&](const std::vector<Elem>& w) {
        if (dual_membership(code, w, kind)) ++count;
    });
    std::uint64_t q = f.q();
    std::uint32_t dim = 0;
    std::uint64_t pw = 1;
    while (pw < count) {
        pw *= q;
        ++dim;
    }
    if (pw != count)
        throw CertificationError("hull enumeration count is not a power of the field size");
    return dim;
}

}  // namespace hullforge
