#ifndef LRSNC_NETSIM_HPP
#define LRSNC_NETSIM_HPP

// Distributed multi-source network coding over a (t, ρ)-adversarial linear
// network: length design, code assembly, lifting, channel sampling, audits.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrsnc/constraints.hpp"
#include "lrsnc/construct.hpp"
#include "lrsnc/errors.hpp"
#include "lrsnc/gf.hpp"
#include "lrsnc/lrs.hpp"
#include "lrsnc/matrix.hpp"
#include "lrsnc/sumrank.hpp"

namespace lrsnc {

/// Access sets hold 0-based message indices.
struct NetworkInstance {
    std::size_t h = 0;
    std::vector<std::size_t> r;
    std::vector<std::vector<std::size_t>> S;
    std::size_t t = 0;
    std::size_t rho = 0;
    std::size_t ell = 1;

    std::size_t k() const {
        std::size_t s = 0;
        for (auto x : r) s += x;
        return s;
    }

    /// Shape checks only; a message held by no source is reported by the designer.
    void validate() const {
        if (h == 0 || r.size() != h) throw std::invalid_argument("instance: r must list one length per message");
        for (auto x : r)
            if (x == 0) throw std::invalid_argument("instance: message lengths must be positive");
        if (S.empty()) throw std::invalid_argument("instance: at least one source required");
        if (ell == 0) throw std::invalid_argument("instance: ell must be positive");
        for (const auto& J : S)
            for (auto g : J)
                if (g >= h) throw std::invalid_argument("instance: access set refers to a missing message");
    }
};

inline constexpr std::size_t kMaxMessages = 10;
inline constexpr std::size_t kMaxSources = 10;

struct LengthDesign {
    std::vector<std::size_t> n_J;
    std::size_t n = 0;
};

namespace detail {

using Mask = std::uint32_t;

inline std::vector<Mask> source_masks(const NetworkInstance& inst) {
    std::vector<Mask> m;
    for (const auto& J : inst.S) {
        Mask x = 0;
        for (auto g : J) x |= Mask{1} << g;
        m.push_back(x);
    }
    return m;
}

inline std::size_t r_of(const NetworkInstance& inst, Mask omega) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < inst.h; ++i)
        if (omega >> i & 1) s += inst.r[i];
    return s;
}

/// Both constraint families read Σ_{J∩Ω≠∅} n_J ≥ r(Ω) + c with
/// c = 2t+ρ (capacity) and c = 2ℓt+ρ (decodability).
struct Row {
    Mask omega;
    Mask meets;  // sources intersecting Ω, as a bitmask over source indices
    std::size_t rhs;
    int family;
};

inline std::vector<Row> constraint_rows(const NetworkInstance& inst) {
    const auto sm = source_masks(inst);
    std::vector<Row> rows;
    for (Mask om = 1; om < (Mask{1} << inst.h); ++om) {
        Mask meets = 0;
        for (std::size_t s = 0; s < sm.size(); ++s)
            if (sm[s] & om) meets |= Mask{1} << s;
        const std::size_t r = r_of(inst, om);
        rows.push_back({om, meets, r + 2 * inst.t + inst.rho, 1});
        rows.push_back({om, meets, r + 2 * inst.ell * inst.t + inst.rho, 2});
    }
    return rows;
}

inline std::string mask_string(Mask m, std::size_t h) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < h; ++i)
        if (m >> i & 1) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

inline void guard_instance(const NetworkInstance& inst) {
    inst.validate();
    if (inst.h > kMaxMessages || inst.S.size() > kMaxSources)
        throw guard_exceeded("designer limited to h <= 10 messages and s <= 10 sources");
}

}  // namespace detail

/// First constraint the tuple breaks, as a readable certificate.
inline std::optional<std::string> violated_constraint(const NetworkInstance& inst, std::span<const std::size_t> n_J) {
    detail::guard_instance(inst);
    if (n_J.size() != inst.S.size()) throw std::invalid_argument("violated_constraint: one length per source");
    for (const auto& row : detail::constraint_rows(inst)) {
        std::size_t lhs = 0;
        for (std::size_t s = 0; s < n_J.size(); ++s)
            if (row.meets >> s & 1) lhs += n_J[s];
        if (lhs < row.rhs)
            return std::string(row.family == 1 ? "capacity" : "decodability") + " constraint for " +
                   detail::mask_string(row.omega, inst.h) + ": sources reaching it carry " + std::to_string(lhs) +
                   " < " + std::to_string(row.rhs);
    }
    return std::nullopt;
}

inline bool lengths_feasible(const NetworkInstance& inst, std::span<const std::size_t> n_J) {
    return !violated_constraint(inst, n_J).has_value();
}

/// w_{J'} = n - Σ_{J ∩ J' = ∅} n_J; J' given as 0-based message indices.
inline std::size_t mincut(const NetworkInstance& inst, std::span<const std::size_t> n_J,
                          std::span<const std::size_t> jprime) {
    if (n_J.size() != inst.S.size()) throw std::invalid_argument("mincut: one length per source");
    std::vector<bool> in(inst.h, false);
    for (auto g : jprime) in.at(g) = true;
    std::size_t n = 0, excluded = 0;
    for (std::size_t s = 0; s < n_J.size(); ++s) {
        n += n_J[s];
        bool meets = false;
        for (auto g : inst.S[s]) meets |= in[g];
        if (!meets) excluded += n_J[s];
    }
    return n - excluded;
}

/// Minimum total length, lexicographically smallest tuple among optima.
/// n is raised from the single-constraint lower bound; for each n a
/// depth-first search assigns sources in order with values ascending,
/// pruning any constraint the remaining budget can no longer meet.
inline LengthDesign design_lengths(const NetworkInstance& inst) {
    detail::guard_instance(inst);
    const auto rows = detail::constraint_rows(inst);
    const std::size_t s = inst.S.size();
    for (const auto& row : rows)
        if (row.meets == 0)
            throw infeasible("message set " + detail::mask_string(row.omega, inst.h) +
                             " is held by no source: constraint 0 >= " + std::to_string(row.rhs) + " cannot hold");

    const std::size_t cap = inst.k() + 2 * inst.ell * inst.t + inst.rho;
    std::size_t lb = 0;
    for (const auto& row : rows) lb = std::max(lb, row.rhs);

    std::vector<std::size_t> x(s, 0);
    auto feasible_prefix = [&](std::size_t assigned, std::size_t remaining) {
        for (const auto& row : rows) {
            std::size_t fixed = 0, open = 0;
            for (std::size_t j = 0; j < s; ++j) {
                if (!(row.meets >> j & 1)) continue;
                if (j < assigned) fixed += x[j];
                else open += cap;
            }
            if (fixed + std::min(open, remaining) < row.rhs) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, std::size_t j, std::size_t remaining) -> bool {
        if (j + 1 == s) {
            if (remaining > cap) return false;
            x[j] = remaining;
            return feasible_prefix(s, 0);
        }
        for (std::size_t v = 0; v <= std::min(cap, remaining); ++v) {
            x[j] = v;
            if (!feasible_prefix(j + 1, remaining - v)) continue;
            if (self(self, j + 1, remaining - v)) return true;
        }
        return false;
    };
    for (std::size_t n = lb; n <= cap * s; ++n)
        if (search(search, 0, n)) return {x, n};
    throw infeasible("no length assignment found up to n = " + std::to_string(cap * s));
}

/// max over message sets Ω of Σ_{J∩Ω=∅} n_J + r(Ω); equals the row-level k̃
/// of the derived zero pattern.
inline std::size_t message_level_k_tilde(const NetworkInstance& inst, std::span<const std::size_t> n_J) {
    const auto sm = detail::source_masks(inst);
    std::size_t best = 0;
    for (detail::Mask om = 1; om < (detail::Mask{1} << inst.h); ++om) {
        std::size_t v = detail::r_of(inst, om);
        for (std::size_t s = 0; s < sm.size(); ++s)
            if (!(sm[s] & om)) v += n_J[s];
        best = std::max(best, v);
    }
    return best;
}

/// ℓ near-equal blocks: block l ends at round(l·n/ℓ), halves rounded up.
inline OrderedPartition split_blocks(std::size_t n, std::size_t ell) {
    if (ell == 0 || ell > n) throw std::invalid_argument("split_blocks: need 1 <= ell <= n");
    std::vector<std::size_t> parts;
    std::size_t prev = 0;
    for (std::size_t l = 1; l <= ell; ++l) {
        const std::size_t b = (2 * l * n + ell) / (2 * ell);
        parts.push_back(b - prev);
        prev = b;
    }
    return OrderedPartition(std::move(parts));
}

struct DesignOptions {
    std::uint64_t seed = 0;
    bool synthesize = true;
    std::size_t budget = 64;
};

struct DesignResult {
    NetworkInstance inst;
    std::vector<std::size_t> n_J;
    std::size_t n = 0, k = 0, k_tilde = 0, d = 0;
    FieldParams field;
    OrderedPartition blocks;
    std::optional<ConstrainedCode> code;
    std::string note;
    std::uint64_t seed = 0;
};

/// True when the exhaustive stages (row subsets, field tables) fit their guards.
inline bool synthesis_in_reach(std::size_t k_tilde, const FieldParams& fp) {
    std::uint64_t size = 0;
    return k_tilde <= kSubsetGuard && fp.q <= detail::kBaseLimit &&
           detail::checked_pow(fp.q, fp.m, detail::kSizeLimit, size);
}

inline DesignResult build_distributed_code(const NetworkInstance& inst, const DesignOptions& opt = {}) {
    DesignResult res;
    res.inst = inst;
    res.seed = opt.seed;
    const LengthDesign ld = design_lengths(inst);
    res.n_J = ld.n_J;
    res.n = ld.n;
    res.k = inst.k();
    res.k_tilde = message_level_k_tilde(inst, res.n_J);
    res.d = 2 * inst.ell * inst.t + inst.rho + 1;
    res.blocks = split_blocks(res.n, inst.ell);
    res.field = suggest_field_params(res.k_tilde, inst.ell, res.blocks);
    if (!opt.synthesize) {
        res.note = "synthesis not requested";
        return res;
    }
    if (!synthesis_in_reach(res.k_tilde, res.field)) {
        res.note = "parameters only: k~ = " + std::to_string(res.k_tilde) + ", q^m = " + std::to_string(res.field.q) +
                   "^" + std::to_string(res.field.m) + " exceed the synthesis guards";
        return res;
    }
    const FieldTower F = FieldTower::make(res.field.p, res.field.e, res.field.m);
    const SupportConstraint sc = derive_zero_sets(inst.S, inst.r, res.n_J);
    res.code = subcode_generator(F, res.blocks, res.k, sc, {opt.seed, opt.budget});
    res.note = res.k_tilde == res.k ? "constrained LRS code" : "subcode of an [n, k~] constrained LRS code";
    return res;
}

/// Source s receives the F_q expansion (m × n_J) of its slice of the codeword.
inline std::vector<Matrix<Elem>> source_blocks(const FieldTower& F, std::span<const Elem> codeword,
                                               std::span<const std::size_t> n_J) {
    std::vector<Matrix<Elem>> out;
    std::size_t off = 0;
    for (std::size_t w : n_J) {
        if (off + w > codeword.size()) throw std::invalid_argument("source_blocks: lengths exceed codeword");
        out.push_back(expand(F, codeword.subspan(off, w)));
        off += w;
    }
    if (off != codeword.size()) throw std::invalid_argument("source_blocks: lengths do not cover codeword");
    return out;
}

/// X = n × (n+m): source blocks (0 … I_{n_J} … 0 | C_Jᵀ) stacked in order.
inline Matrix<Elem> lift(const FieldTower& F, std::span<const Matrix<Elem>> C) {
    std::size_t n = 0;
    for (const auto& c : C) {
        if (c.rows() != F.m()) throw std::invalid_argument("lift: every block needs m rows");
        n += c.cols();
    }
    const std::size_t m = F.m();
    Matrix<Elem> X(n, n + m, F.zero());
    std::size_t off = 0;
    for (const auto& c : C) {
        for (std::size_t t = 0; t < c.cols(); ++t) {
            X(off + t, off + t) = F.one();
            for (std::size_t i = 0; i < m; ++i) X(off + t, n + i) = c(i, t);
        }
        off += c.cols();
    }
    return X;
}

struct ChannelRealization {
    Matrix<Elem> A;  ///< N × n over F_q
    Matrix<Elem> E;  ///< N × M over F_q
    std::size_t frozen = 0;     ///< ρ' actually applied
    std::size_t malicious = 0;  ///< t' inner dimension of E = U·V
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <class URBG>
Matrix<Elem> random_base_matrix(const FieldTower& F, std::size_t r, std::size_t c, URBG& rng) {
    Matrix<Elem> M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = random_base_element(F, rng);
    return M;
}

template <class URBG>
Matrix<Elem> random_full_rank(const FieldTower& F, std::size_t r, std::size_t c, URBG& rng) {
    const std::size_t want = std::min(r, c);
    for (;;) {
        Matrix<Elem> M = random_base_matrix(F, r, c, rng);
        if (rank(base_ops(F), M) == want) return M;
    }
}

}  // namespace detail

/// Per-trial seed derived from a root seed.
inline std::uint64_t trial_seed(std::uint64_t root, std::uint64_t trial) {
    return detail::splitmix64(root ^ detail::splitmix64(trial));
}

/// A = P·D with D keeping n-ρ' coordinates (ρ' uniform in [max(0,n-N), ρ]) and
/// P of full column rank; E = U·V with inner dimension t' uniform in [0, t].
inline ChannelRealization sample_channel(const FieldTower& F, std::size_t n, std::size_t N, std::size_t M,
                                         std::size_t t, std::size_t rho, std::uint64_t seed) {
    if (N + rho < n) throw std::invalid_argument("sample_channel: need N >= n - rho");
    std::mt19937_64 rng(seed);
    ChannelRealization ch;
    ch.seed = seed;
    const std::size_t lo = n > N ? n - N : 0;
    ch.frozen = std::uniform_int_distribution<std::size_t>(lo, std::max(lo, std::min(rho, n)))(rng);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::size_t> kept(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n - ch.frozen));
    std::sort(kept.begin(), kept.end());
    const Matrix<Elem> P = detail::random_full_rank(F, N, kept.size(), rng);
    ch.A = Matrix<Elem>(N, n, F.zero());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t c = 0; c < kept.size(); ++c) ch.A(i, kept[c]) = P(i, c);
    ch.malicious = std::uniform_int_distribution<std::size_t>(0, t)(rng);
    if (ch.malicious == 0) {
        ch.E = Matrix<Elem>(N, M, F.zero());
    } else {
        const Matrix<Elem> U = detail::random_base_matrix(F, N, ch.malicious, rng);
        const Matrix<Elem> V = detail::random_base_matrix(F, ch.malicious, M, rng);
        ch.E = multiply(base_ops(F), U, V);
    }
    return ch;
}

/// Y = A·X + E over F_q.
inline Matrix<Elem> transmit(const FieldTower& F, const Matrix<Elem>& X, const ChannelRealization& ch) {
    if (ch.A.cols() != X.rows() || ch.E.rows() != ch.A.rows() || ch.E.cols() != X.cols())
        throw std::invalid_argument("transmit: shape mismatch");
    Matrix<Elem> Y = multiply(base_ops(F), ch.A, X);
    for (std::size_t i = 0; i < Y.rows(); ++i)
        for (std::size_t j = 0; j < Y.cols(); ++j) Y(i, j) = F.base_add(Y(i, j), ch.E(i, j));
    return Y;
}

/// Without errors or erasures RREF(Y) begins with (I_n | Cᵀ); returns the
/// codeword read from those rows, or nullopt if the identity part is missing.
inline std::optional<std::vector<Elem>> recover_codeword(const FieldTower& F, Matrix<Elem> Y, std::size_t n) {
    const std::size_t m = F.m();
    if (Y.cols() != n + m) throw std::invalid_argument("recover_codeword: width must be n + m");
    const auto piv = row_reduce(base_ops(F), Y);
    if (piv.size() < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (piv[i] != i) return std::nullopt;
    Matrix<Elem> Ct(m, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) Ct(i, j) = Y(j, n + i);
    return collapse(F, Ct);
}

struct AuditReport {
    std::size_t rank_A = 0, wt_A = 0;
    std::size_t rank_E = 0, wt_E = 0;
    bool erasure_ok = false;  ///< wt_SR(A) ≥ rank(A) ≥ n - ρ
    bool error_ok = false;    ///< wt_SR(E) ≤ ℓ·t
};

/// A is partitioned along its n columns, E along its N rows.
inline AuditReport audit_weights(const FieldTower& F, const ChannelRealization& ch, const OrderedPartition& rows_N,
                                 const OrderedPartition& cols_n, std::size_t t, std::size_t rho) {
    AuditReport a;
    const BaseOps ops = base_ops(F);
    const std::size_t n = ch.A.cols();
    a.rank_A = rank(ops, ch.A);
    a.wt_A = sum_rank_weight(F, ch.A, cols_n, Orientation::columns);
    a.rank_E = rank(ops, ch.E);
    a.wt_E = sum_rank_weight(F, ch.E, rows_N, Orientation::rows);
    a.erasure_ok = a.wt_A >= a.rank_A && a.rank_A + rho >= n;
    a.error_ok = a.wt_E <= rows_N.blocks() * t;
    return a;
}

struct MonteCarloReport {
    std::size_t trials = 0;
    std::size_t bounds_ok = 0;       ///< trials passing both audit bounds
    std::size_t rank_t = 0;          ///< trials with rank(E) = t
    std::size_t full_weight = 0;     ///< of those, trials with wt_SR(E) = ℓ·t
    double probability() const { return rank_t ? static_cast<double>(full_weight) / static_cast<double>(rank_t) : 0.0; }
};

/// Channel audit over seeded trials; ℓ is the number of row blocks of N.
inline MonteCarloReport monte_carlo_audit(const FieldTower& F, const OrderedPartition& rows_N,
                                          const OrderedPartition& cols_n, std::size_t M, std::size_t t,
                                          std::size_t rho, std::size_t trials, std::uint64_t seed) {
    MonteCarloReport rep;
    rep.trials = trials;
    const std::size_t ell = rows_N.blocks();
    for (std::size_t i = 0; i < trials; ++i) {
        const auto ch = sample_channel(F, cols_n.length(), rows_N.length(), M, t, rho, trial_seed(seed, i));
        const auto a = audit_weights(F, ch, rows_N, cols_n, t, rho);
        if (a.erasure_ok && a.error_ok) ++rep.bounds_ok;
        if (t > 0 && a.rank_E == t) {
            ++rep.rank_t;
            if (a.wt_E == ell * t) ++rep.full_weight;
        }
    }
    return rep;
}

/// Random vector of sum-rank weight exactly w (w ≤ Σ_l min(n_l, m)).
template <class URBG>
std::vector<Elem> random_sum_rank_error(const FieldTower& F, const OrderedPartition& part, std::size_t w, URBG& rng) {
    std::vector<std::size_t> cap(part.blocks());
    std::size_t total = 0;
    for (std::size_t l = 0; l < part.blocks(); ++l) total += cap[l] = std::min<std::size_t>(part[l], F.m());
    if (w > total) throw std::invalid_argument("random_sum_rank_error: weight exceeds the maximum");
    std::vector<std::size_t> rk(part.blocks(), 0);
    for (std::size_t placed = 0; placed < w;) {
        const std::size_t l = std::uniform_int_distribution<std::size_t>(0, part.blocks() - 1)(rng);
        if (rk[l] < cap[l]) {
            ++rk[l];
            ++placed;
        }
    }
    std::vector<Elem> e(part.length(), F.zero());
    for (std::size_t l = 0; l < part.blocks(); ++l) {
        if (rk[l] == 0) continue;
        const auto U = detail::random_full_rank(F, F.m(), rk[l], rng);
        const auto V = detail::random_full_rank(F, rk[l], part[l], rng);
        const auto blk = collapse(F, multiply(base_ops(F), U, V));
        std::copy(blk.begin(), blk.end(), e.begin() + static_cast<std::ptrdiff_t>(part.offset(l)));
    }
    return e;
}

}  // namespace lrsnc

#endif  // LRSNC_NETSIM_HPP
