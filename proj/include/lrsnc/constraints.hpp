#ifndef LRSNC_CONSTRAINTS_HPP
#define LRSNC_CONSTRAINTS_HPP

// Zero patterns Z_1..Z_k ⊆ [n] and the condition
//   |∩_{i∈Ω} Z_i| + |Ω| ≤ k   for every nonempty Ω ⊆ [k].

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrsnc/errors.hpp"
#include "lrsnc/sumrank.hpp"

namespace lrsnc {

/// Zero sets are 0-based column indices, kept sorted and duplicate-free.
struct SupportConstraint {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> zero_sets;

    SupportConstraint() = default;
    SupportConstraint(std::size_t n_, std::vector<std::vector<std::size_t>> z) : n(n_), zero_sets(std::move(z)) {
        for (auto& s : zero_sets) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (!s.empty() && s.back() >= n) throw std::invalid_argument("zero set index outside [n]");
        }
    }

    std::size_t k() const { return zero_sets.size(); }
    bool contains(std::size_t i, std::size_t j) const {
        return std::binary_search(zero_sets[i].begin(), zero_sets[i].end(), j);
    }
    friend bool operator==(const SupportConstraint&, const SupportConstraint&) = default;
};

inline constexpr std::size_t kSubsetGuard = 24;

struct ConditionReport {
    bool holds = true;
    std::vector<std::size_t> witness;  ///< lexicographically least violating Ω (0-based), empty if none
    bool equality_system = true;       ///< equality for every Ω
    std::size_t k_tilde = 0;           ///< max_Ω |∩ Z_i| + |Ω|
};

namespace detail {

class Bits {
  public:
    explicit Bits(std::size_t n, bool full = false) : w_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
        if (full && n % 64) w_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    }
    void set(std::size_t j) { w_[j / 64] |= std::uint64_t{1} << (j % 64); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

  private:
    std::vector<std::uint64_t> w_;
};

inline std::vector<Bits> to_bits(const SupportConstraint& sc) {
    std::vector<Bits> b;
    b.reserve(sc.k());
    for (const auto& z : sc.zero_sets) {
        Bits x(sc.n);
        for (std::size_t j : z) x.set(j);
        b.push_back(std::move(x));
    }
    return b;
}

inline void guard_rows(std::size_t k) {
    if (k > kSubsetGuard) throw guard_exceeded("subset scan limited to k <= 24 rows");
}

/// Preorder DFS over increasing index sequences, which visits Ω in
/// lexicographic order. Subtrees below an empty intersection carry no
/// violation and no value above k, so they are pruned once equality is
/// already known to fail.
struct Scan {
    const std::vector<Bits>& z;
    std::size_t k;
    ConditionReport rep;
    std::vector<std::size_t> omega;

    void visit(std::size_t start, const Bits& inter) {
        for (std::size_t i = start; i < k; ++i) {
            const Bits next = inter & z[i];
            omega.push_back(i);
            const std::size_t c = next.count();
            const std::size_t val = c + omega.size();
            rep.k_tilde = std::max(rep.k_tilde, val);
            if (val != k) rep.equality_system = false;
            if (val > k && rep.holds) {
                rep.holds = false;
                rep.witness = omega;
            }
            if (c > 0 || rep.equality_system) visit(i + 1, next);
            omega.pop_back();
        }
    }
};

/// Some Ω containing row i violates the condition.
inline bool violated_through(const std::vector<Bits>& z, std::size_t k, std::size_t i) {
    std::vector<std::size_t> others;
    for (std::size_t r = 0; r < k; ++r)
        if (r != i) others.push_back(r);
    bool bad = false;
    auto rec = [&](auto&& self, std::size_t start, const Bits& inter, std::size_t size) -> void {
        if (bad) return;
        const std::size_t c = inter.count();
        if (c + size > k) {
            bad = true;
            return;
        }
        if (c == 0) return;
        for (std::size_t a = start; a < others.size() && !bad; ++a) self(self, a + 1, inter & z[others[a]], size + 1);
    };
    rec(rec, 0, z[i], 1);
    return bad;
}

}  // namespace detail

inline ConditionReport check_condition(const SupportConstraint& sc) {
    if (sc.k() == 0) throw std::invalid_argument("support constraint needs k >= 1");
    detail::guard_rows(sc.k());
    const auto z = detail::to_bits(sc);
    detail::Scan s{z, sc.k(), {}, {}};
    // Ω = [k] alone gives at least k; pruned subtrees never exceed it.
    s.rep.k_tilde = sc.k();
    s.visit(0, detail::Bits(sc.n, true));
    return s.rep;
}

inline std::size_t k_tilde(const SupportConstraint& sc) { return check_condition(sc).k_tilde; }

/// Grow every Z_i to size k-1: rows in order, candidate columns ascending,
/// keeping a column only if the condition still holds.
inline SupportConstraint complete_zero_sets(const SupportConstraint& sc) {
    const auto rep = check_condition(sc);
    if (!rep.holds) throw condition_violated("zero pattern violates the support condition", rep.witness);
    const std::size_t k = sc.k();
    SupportConstraint out = sc;
    for (std::size_t i = 0; i < k; ++i)
        if (out.zero_sets[i].size() > k - 1)
            throw condition_violated("row " + std::to_string(i + 1) + " has more than k-1 zeros", {i});
    auto z = detail::to_bits(out);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < sc.n && out.zero_sets[i].size() < k - 1; ++j) {
            if (out.contains(i, j)) continue;
            const detail::Bits saved = z[i];
            z[i].set(j);
            if (detail::violated_through(z, k, i)) {
                z[i] = saved;
                continue;
            }
            auto& s = out.zero_sets[i];
            s.insert(std::upper_bound(s.begin(), s.end(), j), j);
        }
        if (out.zero_sets[i].size() != k - 1)
            throw synthesis_failed("greedy completion could not extend row " + std::to_string(i + 1) + " to k-1 zeros");
    }
    return out;
}

/// Rows grouped by message (r_g rows each); columns grouped by source in
/// order (n_J each). Row of message g is zero on the columns of every source
/// that cannot see g. Access sets hold 0-based message indices.
inline SupportConstraint derive_zero_sets(std::span<const std::vector<std::size_t>> access,
                                          std::span<const std::size_t> r, std::span<const std::size_t> n_J) {
    if (access.size() != n_J.size()) throw std::invalid_argument("derive_zero_sets: one width per source required");
    const std::size_t h = r.size();
    std::vector<std::vector<bool>> sees(access.size(), std::vector<bool>(h, false));
    for (std::size_t s = 0; s < access.size(); ++s)
        for (std::size_t g : access[s]) {
            if (g >= h) throw std::invalid_argument("derive_zero_sets: message index out of range");
            sees[s][g] = true;
        }
    for (std::size_t g = 0; g < h; ++g) {
        bool any = false;
        for (std::size_t s = 0; s < access.size(); ++s) any |= sees[s][g];
        if (!any) throw infeasible("message " + std::to_string(g + 1) + " is held by no source");
    }
    std::size_t n = 0;
    std::vector<std::size_t> off;
    for (std::size_t w : n_J) {
        off.push_back(n);
        n += w;
    }
    std::vector<std::vector<std::size_t>> zs;
    for (std::size_t g = 0; g < h; ++g) {
        std::vector<std::size_t> z;
        for (std::size_t s = 0; s < access.size(); ++s)
            if (!sees[s][g])
                for (std::size_t c = 0; c < n_J[s]; ++c) z.push_back(off[s] + c);
        for (std::size_t c = 0; c < r[g]; ++c) zs.push_back(z);
    }
    return SupportConstraint(n, std::move(zs));
}

/// Decomposes x = p^e; false if x is not a prime power.
inline bool prime_power(std::uint64_t x, unsigned& p, unsigned& e) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d) continue;
        unsigned c = 0;
        while (x % d == 0) {
            x /= d;
            ++c;
        }
        if (x != 1) return false;
        p = static_cast<unsigned>(d);
        e = c;
        return true;
    }
    p = static_cast<unsigned>(x);
    e = 1;
    return true;
}

struct FieldParams {
    std::uint64_t q = 0;
    unsigned p = 0, e = 0;
    unsigned m = 0;        ///< max(⌈k-1+log_q k⌉, max n_l)
    unsigned m_sharp = 0;  ///< smallest m ≥ max n_l with q^m > (k-1)(q-1)q^{k-2} + q^{n_l-1} for all l
};

namespace detail {

using sat128 = unsigned __int128;
inline constexpr sat128 kSat = ~sat128{0} >> 1;

inline sat128 sat_mul(sat128 a, sat128 b) { return (a != 0 && b > kSat / a) ? kSat : a * b; }
inline sat128 sat_add(sat128 a, sat128 b) { return a > kSat - b ? kSat : a + b; }
inline sat128 sat_pow(std::uint64_t b, std::size_t e) {
    sat128 r = 1;
    for (std::size_t i = 0; i < e && r != kSat; ++i) r = sat_mul(r, b);
    return r;
}

}  // namespace detail

inline FieldParams suggest_field_params(std::size_t k, std::size_t ell, const OrderedPartition& parts) {
    if (k == 0 || ell == 0) throw std::invalid_argument("suggest_field_params: k and ell must be positive");
    FieldParams fp;
    for (std::uint64_t q = ell + 1;; ++q)
        if (prime_power(q, fp.p, fp.e)) {
            fp.q = q;
            break;
        }
    std::size_t max_part = 0;
    for (std::size_t p : parts.parts()) max_part = std::max(max_part, p);

    // ⌈log_q k⌉ computed exactly as the least j with q^j ≥ k.
    std::size_t lg = 0;
    for (detail::sat128 pw = 1; pw < k; pw = detail::sat_mul(pw, fp.q)) ++lg;
    fp.m = static_cast<unsigned>(std::max(k - 1 + lg, max_part));

    detail::sat128 base = 0;
    if (k >= 2) base = detail::sat_mul(detail::sat_mul(k - 1, fp.q - 1), detail::sat_pow(fp.q, k - 2));
    unsigned ms = static_cast<unsigned>(max_part);
    for (std::size_t p : parts.parts()) {
        const detail::sat128 bound = detail::sat_add(base, detail::sat_pow(fp.q, p - 1));
        unsigned mm = 0;
        while (detail::sat_pow(fp.q, mm) <= bound && detail::sat_pow(fp.q, mm) != detail::kSat) ++mm;
        ms = std::max(ms, mm);
    }
    fp.m_sharp = ms;
    return fp;
}

}  // namespace lrsnc

#endif  // LRSNC_CONSTRAINTS_HPP
