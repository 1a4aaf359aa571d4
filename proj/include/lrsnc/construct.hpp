#ifndef LRSNC_CONSTRUCT_HPP
#define LRSNC_CONSTRUCT_HPP

// Support-constrained LRS generators G = T·G_LRS, where row i of T holds the
// coefficients of the monic minimal polynomial of the locators indexed by Z_i.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrsnc/constraints.hpp"
#include "lrsnc/errors.hpp"
#include "lrsnc/gf.hpp"
#include "lrsnc/lrs.hpp"
#include "lrsnc/matrix.hpp"
#include "lrsnc/skewpoly.hpp"

namespace lrsnc {

struct ConstrainedCode {
    LrsCode code;          ///< the underlying LRS code (dimension k̃ for a subcode)
    SupportConstraint sc;  ///< completed zero sets, one per row of T
    Matrix<Elem> T;        ///< code.k × code.k, invertible
    Matrix<Elem> G;        ///< first `rows` rows of T·G_LRS
    std::size_t attempts = 0;

    std::size_t rows() const { return G.rows(); }
    bool is_subcode() const { return G.rows() < code.k; }
};

struct SynthesisOptions {
    std::uint64_t seed = 0;
    std::size_t budget = 64;
};

/// Locators α_j, j ∈ Z.
inline EvaluationSet locator_subset(const std::vector<Elem>& alpha, std::span<const std::size_t> Z) {
    std::vector<Elem> pts;
    pts.reserve(Z.size());
    for (std::size_t j : Z) pts.push_back(alpha.at(j));
    return EvaluationSet(std::move(pts));
}

/// Row i = coefficients of f_{Z_i}, the monic minimal polynomial of
/// {α_j : j ∈ Z_i}; requires |Z_i| = k-1.
inline Matrix<Elem> build_T(const LrsCode& code, const SupportConstraint& sc) {
    const std::size_t k = code.k;
    if (sc.k() != k || sc.n != code.length()) throw std::invalid_argument("build_T: constraint shape differs from code");
    const FieldTower& F = code.field;
    const auto alpha = locators(code);
    Matrix<Elem> T(k, k, F.zero());
    for (std::size_t i = 0; i < k; ++i) {
        if (sc.zero_sets[i].size() != k - 1) throw std::invalid_argument("build_T: zero sets must have size k-1");
        const SkewPoly f = minimal_polynomial(F, locator_subset(alpha, sc.zero_sets[i]));
        if (f.degree() != static_cast<long>(k) - 1)
            throw invalid_code("locators indexed by Z_" + std::to_string(i + 1) + " are not P-independent");
        for (std::size_t c = 0; c < k; ++c) T(i, c) = f.coeff(c);
    }
    return T;
}

enum class MismatchKind { missing_zero, spurious_zero };

struct SupportMismatch {
    std::size_t row, col;
    MismatchKind kind;
};

/// G_{ij} = 0 exactly when j ∈ Z_i, for the rows of G (a prefix of sc's rows).
inline std::vector<SupportMismatch> verify_support(const Matrix<Elem>& G, const SupportConstraint& sc) {
    if (G.rows() > sc.k() || G.cols() != sc.n) throw std::invalid_argument("verify_support: shape mismatch");
    std::vector<SupportMismatch> out;
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) {
            const bool zero = G(i, j).value == 0;
            const bool want = sc.contains(i, j);
            if (want && !zero) out.push_back({i, j, MismatchKind::missing_zero});
            if (!want && zero) out.push_back({i, j, MismatchKind::spurious_zero});
        }
    return out;
}

namespace detail {

template <class URBG>
std::vector<std::vector<Elem>> random_multipliers(const FieldTower& F, const OrderedPartition& part, URBG& rng) {
    std::vector<std::vector<Elem>> b(part.blocks());
    for (std::size_t l = 0; l < part.blocks(); ++l) {
        do {
            b[l].clear();
            for (std::size_t t = 0; t < part[l]; ++t) b[l].push_back(random_nonzero(F, rng));
        } while (!linearly_independent_over_base(F, b[l]));
    }
    return b;
}

inline void require_field_fits(const FieldTower& F, const OrderedPartition& part) {
    if (part.blocks() > F.q() - 1)
        throw invalid_field("field too small: " + std::to_string(part.blocks()) + " blocks need q >= " +
                            std::to_string(part.blocks() + 1));
    for (std::size_t l = 0; l < part.blocks(); ++l)
        if (part[l] > F.m())
            throw invalid_field("field too small: block length " + std::to_string(part[l]) + " exceeds m = " +
                                std::to_string(F.m()));
}

}  // namespace detail

/// Completes the zero sets, then tries the structured multipliers followed by
/// uniformly random F_q-independent ones until T is invertible and G has
/// exactly the prescribed zeros.
inline ConstrainedCode synthesize(const FieldTower& F, const OrderedPartition& part, std::size_t k,
                                  const SupportConstraint& sc, const SynthesisOptions& opt = {}) {
    if (sc.k() != k || sc.n != part.length()) throw std::invalid_argument("synthesize: constraint shape mismatch");
    if (k > part.length()) throw infeasible("dimension exceeds code length");
    detail::require_field_fits(F, part);
    const auto rep = check_condition(sc);
    if (!rep.holds) throw condition_violated("zero pattern violates the support condition", rep.witness);
    const SupportConstraint full = complete_zero_sets(sc);

    std::mt19937_64 rng(opt.seed);
    const TopOps ops = top_ops(F);
    std::string last = "no attempt made";
    for (std::size_t attempt = 0; attempt < opt.budget; ++attempt) {
        LrsCode code{F, part, k, default_representatives(F, part.blocks()),
                     attempt == 0 ? default_multipliers(F, part) : detail::random_multipliers(F, part, rng)};
        const auto v = validate(code);
        if (!v.ok()) {
            last = v.to_string();
            continue;
        }
        Matrix<Elem> T = build_T(code, full);
        if (rank(ops, T) != k) {
            last = "T is singular";
            continue;
        }
        Matrix<Elem> G = multiply(ops, T, generator_matrix(code));
        const auto mism = verify_support(G, full);
        if (!mism.empty()) {
            last = std::to_string(mism.size()) + " support mismatches";
            continue;
        }
        return ConstrainedCode{std::move(code), full, std::move(T), std::move(G), attempt + 1};
    }
    throw synthesis_failed("no valid multipliers within " + std::to_string(opt.budget) + " attempts: " + last);
}

/// Rows of an [n, k̃] constrained LRS generator with Z_{k+1..k̃} = ∅; only
/// the first k rows are kept. Falls back to synthesize when k̃ = k.
inline ConstrainedCode subcode_generator(const FieldTower& F, const OrderedPartition& part, std::size_t k,
                                         const SupportConstraint& sc, const SynthesisOptions& opt = {}) {
    if (sc.k() != k || sc.n != part.length()) throw std::invalid_argument("subcode_generator: constraint shape mismatch");
    const std::size_t kt = k_tilde(sc);
    if (kt > part.length())
        throw infeasible("k~ = " + std::to_string(kt) + " exceeds n = " + std::to_string(part.length()));
    if (kt == k) return synthesize(F, part, k, sc, opt);
    SupportConstraint padded = sc;
    padded.zero_sets.resize(kt);
    ConstrainedCode cc = synthesize(F, part, kt, padded, opt);
    cc.G = cc.G.block(0, 0, k, cc.G.cols());
    return cc;
}

/// S_{a×b}(u): row r holds the coefficients of X^r·u, i.e. σ^r(u) shifted r places.
inline Matrix<Elem> skew_mult_matrix(const SkewPoly& u, std::size_t a, std::size_t b) {
    const FieldTower& F = u.field();
    if (!u.is_zero() && (b < a || static_cast<long>(b - a) < u.degree()))
        throw std::invalid_argument("skew_mult_matrix: need b - a >= deg u");
    Matrix<Elem> S(a, b, F.zero());
    for (std::size_t r = 0; r < a; ++r) {
        const SkewPoly row = u.shifted(r);
        for (std::size_t c = 0; c < row.coeffs().size(); ++c) S(r, c) = row.coeffs()[c];
    }
    return S;
}

/// X^τ · f_Z.
inline SkewPoly shifted_minimal_polynomial(const FieldTower& F, const EvaluationSet& Z, std::size_t tau) {
    return minimal_polynomial(F, Z).shifted(tau);
}

struct ConstraintRank {
    std::size_t rank = 0;
    std::size_t rows = 0;
    bool full_row_rank = false;
};

/// Rank of M = [S_{(k - deg f_i)×k}(f_i)]_i stacked vertically.
inline ConstraintRank constraint_matrix_rank(std::span<const SkewPoly> fs, std::size_t k) {
    if (fs.empty()) throw std::invalid_argument("constraint_matrix_rank: no polynomials");
    const FieldTower& F = fs[0].field();
    std::vector<Matrix<Elem>> blocks;
    std::size_t total = 0;
    for (const auto& f : fs) {
        if (f.is_zero() || f.degree() > static_cast<long>(k) - 1)
            throw std::invalid_argument("constraint_matrix_rank: need 0 <= deg f_i <= k-1");
        blocks.push_back(skew_mult_matrix(f, k - static_cast<std::size_t>(f.degree()), k));
        total += blocks.back().rows();
    }
    Matrix<Elem> M(total, k, F.zero());
    std::size_t r0 = 0;
    for (const auto& B : blocks) {
        for (std::size_t r = 0; r < B.rows(); ++r)
            for (std::size_t c = 0; c < k; ++c) M(r0 + r, c) = B(r, c);
        r0 += B.rows();
    }
    ConstraintRank cr;
    cr.rows = total;
    cr.rank = rank(top_ops(F), M);
    cr.full_row_rank = cr.rank == total;
    return cr;
}

}  // namespace lrsnc

#endif  // LRSNC_CONSTRUCT_HPP
