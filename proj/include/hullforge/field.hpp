// Arithmetic in GF(p^m) backed by full discrete-log tables.
//
// An element with polynomial-basis digits (c_0, ..., c_{m-1}) is encoded as
// the integer sum c_i * p^i, so the elements of GF(p^m) are exactly the
// integers in [0, p^m). The modulus is the monic primitive polynomial of
// degree m whose integer encoding sum c_i * p^i (leading c_m = 1 included) is
// smallest; the residue class of x, written omega, is then a generator of the
// multiplicative group and the dlog/antilog tables are built from its powers.
//
// Fields of even extension degree double as quadratic extensions GF(q0^2)
// with q0 = p^(m/2); conj/norm/norm_preimage work relative to that subfield.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullforge {

using Elem = std::uint32_t;

// A caller-facing contract was violated (bad parameters, out-of-range request).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Independently computed certificates failed to agree, or a certified value
// did not match its target.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

[[noreturn]] inline void invariant_breach(const std::string& msg) {
    throw std::logic_error("internal invariant breach: " + msg);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    std::uint32_t p;
    std::uint32_t m;
};

// Factors q as p^m with p prime; rejects anything that is not a prime power.
inline PrimePower factor_prime_power(std::uint64_t q) {
    require(q >= 2, "prime power expected, got " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    for (std::uint64_t rest = q; rest > 1; rest /= p) {
        require(rest % p == 0, "not a prime power: " + std::to_string(q));
        ++m;
    }
    return {static_cast<std::uint32_t>(p), m};
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Tables are dense in q, so the field size is capped. Sizes up to 2^16
    // are the supported budget; the cap leaves headroom beyond it.
    static constexpr std::uint64_t max_size = 1ull << 20;

    // Canonical field: smallest-encoding primitive modulus.
    static FieldPtr make(std::uint32_t p, std::uint32_t m) {
        return FieldPtr(new Field(p, m, select_modulus(p, m)));
    }

    // Field with an explicit modulus, which must be monic of degree m and
    // primitive (x must generate the multiplicative group).
    static FieldPtr make(std::uint32_t p, std::uint32_t m, const std::vector<Elem>& modulus) {
        return FieldPtr(new Field(p, m, modulus));
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    // Multiplicative generator (the class of x).
    Elem omega() const { return exp_[1 % (q_ - 1)]; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return (a + b) % p_;
        if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
        Elem out = 0;
        for (std::uint32_t i = 0; i < m_; ++i)
            out += ((digit(a, i) + digit(b, i)) % p_) * powp_[i];
        return out;
    }

    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[std::size_t(log_[a]) + log_[b]];
    }

    Elem inv(Elem a) const {
        require(a != 0, "inverse of zero");
        return exp_[(q_ - 1) - log_[a]];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    }

    std::uint32_t dlog(Elem a) const {
        require(a != 0, "dlog of zero");
        return log_[a];
    }

    // omega^j for any exponent.
    Elem exp_of(std::uint64_t j) const { return exp_[j % (q_ - 1)]; }

    std::uint32_t digit(Elem a, std::uint32_t i) const {
        if (m_ == 1) return a;
        return digits_[std::size_t(a) * m_ + i];
    }

    // Membership in the subfield GF(p^d), for d dividing m. Nonzero elements
    // of the subfield are exactly the powers of omega whose dlog is divisible
    // by (q-1)/(p^d-1).
    bool in_subfield(Elem a, std::uint32_t d) const {
        require(d >= 1 && m_ % d == 0, "subfield degree must divide m");
        if (a == 0) return true;
        return log_[a] % subfield_step(d) == 0;
    }

    // All p^d elements of GF(p^d) inside this field, ascending by encoding.
    std::vector<Elem> subfield_elements(std::uint32_t d) const {
        require(d >= 1 && m_ % d == 0, "subfield degree must divide m");
        std::uint64_t step = subfield_step(d);
        std::uint64_t count = (std::uint64_t(q_) - 1) / step;
        std::vector<Elem> out;
        out.reserve(count + 1);
        out.push_back(0);
        for (std::uint64_t j = 0; j < count; ++j) out.push_back(exp_[j * step]);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Quadratic-extension view: this field as GF(q0^2), q0 = p^(m/2).
    std::uint32_t base_order() const {
        require(m_ % 2 == 0, "quadratic-extension view needs even extension degree");
        std::uint32_t q0 = 1;
        for (std::uint32_t i = 0; i < m_ / 2; ++i) q0 *= p_;
        return q0;
    }

    // The order-2 automorphism a -> a^q0 fixing GF(q0) pointwise.
    Elem conj(Elem a) const { return pow(a, base_order()); }

    // Norm onto GF(q0): a -> a^(q0+1). Surjective on units.
    Elem norm(Elem a) const { return pow(a, base_order() + 1u); }

    bool in_base_subfield(Elem a) const {
        require_even();
        return in_subfield(a, m_ / 2);
    }

    // Square root, or nullopt for quadratic non-residues. When two roots
    // exist the one with the smaller encoding is returned; in characteristic
    // two the root is unique.
    std::optional<Elem> sqrt(Elem a) const {
        if (a == 0) return Elem(0);
        std::uint32_t j = log_[a];
        if (p_ == 2) return pow(a, std::uint64_t(q_) / 2);
        if (j % 2 != 0) return std::nullopt;
        Elem s = exp_[j / 2];
        return std::min(s, neg_[s]);
    }

    // Smallest v by encoding with v^(q0+1) = u, for u a unit of the
    // designated subfield GF(q0). There are exactly q0+1 such v.
    Elem norm_preimage(Elem u) const {
        std::uint32_t q0 = base_order();
        if (u == 0) return 0;  // zero is its own unique preimage
        require(in_subfield(u, m_ / 2), "norm preimage target must lie in the base subfield");
        std::uint64_t t0 = std::uint64_t(log_[u]) / (q0 + 1);
        Elem best = exp_[t0];
        for (std::uint32_t i = 1; i <= q0; ++i)
            best = std::min(best, exp_[(t0 + std::uint64_t(i) * (q0 - 1)) % (q_ - 1)]);
        return best;
    }

private:
    Field(std::uint32_t p, std::uint32_t m, const std::vector<Elem>& modulus)
        : p_(p), m_(m), modulus_(modulus) {
        require(is_prime(p), "p must be prime, got " + std::to_string(p));
        require(m >= 1, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            require(q <= max_size, "field size exceeds supported budget");
        }
        q_ = static_cast<std::uint32_t>(q);
        require(modulus.size() == std::size_t(m) + 1, "modulus must have degree m");
        require(modulus[m] == 1, "modulus must be monic");
        for (Elem c : modulus) require(c < p, "modulus digit out of range");
        require(modulus[0] != 0, "modulus must not vanish at zero");

        powp_.resize(m + 1);
        powp_[0] = 1;
        for (std::uint32_t i = 1; i <= m; ++i) powp_[i] = powp_[i - 1] * p_;

        build_tables();
    }

    void require_even() const {
        require(m_ % 2 == 0, "quadratic-extension view needs even extension degree");
    }

    std::uint64_t subfield_step(std::uint32_t d) const {
        std::uint64_t sub = 1;
        for (std::uint32_t i = 0; i < d; ++i) sub *= p_;
        return (std::uint64_t(q_) - 1) / (sub - 1);
    }

    // Multiplies a digit vector by x modulo the given modulus digits.
    static void mul_by_x(std::vector<std::uint32_t>& dig, const std::vector<Elem>& modulus,
                         std::uint32_t p) {
        std::uint32_t m = static_cast<std::uint32_t>(dig.size());
        std::uint32_t carry = dig[m - 1];
        for (std::uint32_t i = m; i-- > 1;) dig[i] = dig[i - 1];
        dig[0] = 0;
        if (carry != 0) {
            for (std::uint32_t i = 0; i < m; ++i)
                dig[i] = static_cast<std::uint32_t>(
                    (dig[i] + std::uint64_t(p - modulus[i]) * carry) % p);
        }
    }

    // Multiplicative order of x in GF(p)[x]/(f), or 0 if the loop guard trips.
    static std::uint64_t order_of_x(const std::vector<Elem>& modulus, std::uint32_t p,
                                    std::uint32_t m, std::uint64_t limit) {
        std::vector<std::uint32_t> dig(m, 0);
        dig[0] = 1;
        for (std::uint64_t steps = 1; steps <= limit; ++steps) {
            mul_by_x(dig, modulus, p);
            bool one = dig[0] == 1;
            for (std::uint32_t i = 1; one && i < m; ++i) one = dig[i] == 0;
            if (one) return steps;
        }
        return 0;
    }

    // Smallest-encoding monic primitive polynomial of degree m over GF(p).
    // A monic f with f(0) != 0 is primitive exactly when x has order p^m - 1
    // in the quotient ring, so candidates are scanned in encoding order and
    // tested by direct order computation.
    static std::vector<Elem> select_modulus(std::uint32_t p, std::uint32_t m) {
        require(is_prime(p), "p must be prime, got " + std::to_string(p));
        require(m >= 1, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            require(q <= max_size, "field size exceeds supported budget");
        }
        std::vector<Elem> cand(m + 1, 0);
        cand[m] = 1;
        for (std::uint64_t low = 1; low < q; ++low) {
            if (low % p == 0) continue;  // constant term zero: x is not a unit
            std::uint64_t rest = low;
            for (std::uint32_t i = 0; i < m; ++i) {
                cand[i] = static_cast<Elem>(rest % p);
                rest /= p;
            }
            if (order_of_x(cand, p, m, q - 1) == q - 1) return cand;
        }
        invariant_breach("no primitive polynomial found");
    }

    void build_tables() {
        std::uint64_t q = q_;
        require(order_of_x(modulus_, p_, m_, q - 1) == q - 1,
                "modulus is not primitive");

        exp_.resize(2 * (q - 1));
        log_.assign(q, 0xffffffffu);
        std::vector<std::uint32_t> dig(m_, 0);
        dig[0] = 1;
        for (std::uint64_t j = 0; j < q - 1; ++j) {
            Elem enc = 0;
            for (std::uint32_t i = 0; i < m_; ++i) enc += dig[i] * powp_[i];
            exp_[j] = enc;
            log_[enc] = static_cast<std::uint32_t>(j);
            mul_by_x(dig, modulus_, p_);
        }
        for (std::uint64_t j = 0; j < q - 1; ++j) exp_[q - 1 + j] = exp_[j];

        if (m_ > 1) {
            digits_.resize(q * m_);
            for (std::uint64_t a = 0; a < q; ++a) {
                std::uint64_t rest = a;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    digits_[a * m_ + i] = static_cast<std::uint16_t>(rest % p_);
                    rest /= p_;
                }
            }
        }

        neg_.resize(q);
        for (std::uint64_t a = 0; a < q; ++a) {
            Elem out = 0;
            for (std::uint32_t i = 0; i < m_; ++i)
                out += ((p_ - digit(static_cast<Elem>(a), i)) % p_) * powp_[i];
            neg_[a] = out;
        }

        if (p_ != 2 && m_ > 1 && q <= 1024) {
            add_.resize(q * q);
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b) {
                    Elem out = 0;
                    for (std::uint32_t i = 0; i < m_; ++i)
                        out += ((digit(static_cast<Elem>(a), i) +
                                 digit(static_cast<Elem>(b), i)) % p_) * powp_[i];
                    add_[a * q + b] = static_cast<std::uint16_t>(out);
                }
        }
    }

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    std::vector<Elem> powp_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<std::uint16_t> digits_;
    std::vector<std::uint16_t> add_;
};

inline bool same_field(const Field& a, const Field& b) {
    return &a == &b || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
}

}  // namespace hullforge
