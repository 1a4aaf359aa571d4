#ifndef LRSNC_LRS_HPP
#define LRSNC_LRS_HPP

// Linearized Reed–Solomon codes: locators a_l·β^{q-1}, generator entries
// N_i(a_l)·β^{q^i}, and encoding by skew polynomial evaluation.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrsnc/errors.hpp"
#include "lrsnc/gf.hpp"
#include "lrsnc/matrix.hpp"
#include "lrsnc/skewpoly.hpp"
#include "lrsnc/sumrank.hpp"

namespace lrsnc {

/// φ(l, t) = t + Σ_{r<l} n_r, 0-based on both sides.
class BlockIndexMap {
  public:
    explicit BlockIndexMap(OrderedPartition part) : part_(std::move(part)) {
        block_of_.reserve(part_.length());
        for (std::size_t l = 0; l < part_.blocks(); ++l)
            for (std::size_t t = 0; t < part_[l]; ++t) block_of_.emplace_back(l, t);
    }
    std::size_t index(std::size_t l, std::size_t t) const {
        if (l >= part_.blocks() || t >= part_[l]) throw std::out_of_range("BlockIndexMap::index");
        return part_.offset(l) + t;
    }
    std::pair<std::size_t, std::size_t> position(std::size_t j) const { return block_of_.at(j); }
    std::size_t size() const { return block_of_.size(); }

  private:
    OrderedPartition part_;
    std::vector<std::pair<std::size_t, std::size_t>> block_of_;
};

struct LrsCode {
    FieldTower field;
    OrderedPartition partition;
    std::size_t k = 0;
    std::vector<Elem> reps;                     ///< a_1..a_ℓ
    std::vector<std::vector<Elem>> multipliers; ///< β_{l,1..n_l}

    std::size_t length() const { return partition.length(); }
    std::size_t blocks() const { return partition.blocks(); }
};

enum class ViolationKind {
    shape_mismatch,
    too_many_blocks,
    block_too_long,
    bad_dimension,
    zero_representative,
    conjugate_representatives,
    dependent_multipliers,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const {
        for (const auto& v : violations)
            if (v.kind == k) return true;
        return false;
    }
    std::string to_string() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations) s += (s.empty() ? "" : "; ") + v.message;
        return s;
    }
};

inline ValidationReport validate(const LrsCode& c) {
    ValidationReport rep;
    auto add = [&](ViolationKind k, std::string msg) { rep.violations.push_back({k, std::move(msg)}); };
    const FieldTower& F = c.field;
    const std::size_t ell = c.blocks();

    if (c.reps.size() != ell || c.multipliers.size() != ell) {
        add(ViolationKind::shape_mismatch, "need one representative and one multiplier list per block");
        return rep;
    }
    for (std::size_t l = 0; l < ell; ++l)
        if (c.multipliers[l].size() != c.partition[l])
            add(ViolationKind::shape_mismatch, "block " + std::to_string(l + 1) + " has " +
                                                   std::to_string(c.multipliers[l].size()) + " multipliers, expected " +
                                                   std::to_string(c.partition[l]));
    if (ell > F.q() - 1)
        add(ViolationKind::too_many_blocks,
            std::to_string(ell) + " blocks exceed q-1 = " + std::to_string(F.q() - 1));
    for (std::size_t l = 0; l < ell; ++l)
        if (c.partition[l] > F.m())
            add(ViolationKind::block_too_long, "block " + std::to_string(l + 1) + " has length " +
                                                   std::to_string(c.partition[l]) + " > m = " + std::to_string(F.m()));
    if (c.k < 1 || c.k > c.length())
        add(ViolationKind::bad_dimension, "dimension k = " + std::to_string(c.k) + " outside [1, n = " +
                                              std::to_string(c.length()) + "]");

    for (std::size_t l = 0; l < ell; ++l)
        if (c.reps[l] == F.zero()) add(ViolationKind::zero_representative, "representative " + std::to_string(l + 1) + " is zero");
    for (std::size_t a = 0; a < ell; ++a)
        for (std::size_t b = a + 1; b < ell; ++b)
            if (c.reps[a] != F.zero() && c.reps[b] != F.zero() && same_conjugacy_class(F, c.reps[a], c.reps[b]))
                add(ViolationKind::conjugate_representatives, "representatives " + std::to_string(a + 1) + " and " +
                                                                  std::to_string(b + 1) + " are conjugate");
    for (std::size_t l = 0; l < ell; ++l)
        if (c.multipliers[l].size() == c.partition[l] && !linearly_independent_over_base(F, c.multipliers[l]))
            add(ViolationKind::dependent_multipliers,
                "multipliers of block " + std::to_string(l + 1) + " are linearly dependent over F_q");
    return rep;
}

inline void require_valid(const LrsCode& c) {
    const auto rep = validate(c);
    if (!rep.ok()) throw invalid_code(rep.to_string());
}

/// a_l = γ^{l-1}: pairwise in distinct conjugacy classes for l ≤ q-1.
inline std::vector<Elem> default_representatives(const FieldTower& F, std::size_t ell) {
    std::vector<Elem> a(ell);
    for (std::size_t l = 0; l < ell; ++l) a[l] = F.gamma_pow(l);
    return a;
}

/// Block l gets (γ^{l-1}, γ^l, ..., γ^{l-1+n_l-1}).
inline std::vector<std::vector<Elem>> default_multipliers(const FieldTower& F, const OrderedPartition& part) {
    std::vector<std::vector<Elem>> b(part.blocks());
    for (std::size_t l = 0; l < part.blocks(); ++l)
        for (std::size_t t = 0; t < part[l]; ++t) b[l].push_back(F.gamma_pow(l + t));
    return b;
}

inline LrsCode default_code(const FieldTower& F, const OrderedPartition& part, std::size_t k) {
    LrsCode c{F, part, k, default_representatives(F, part.blocks()), default_multipliers(F, part)};
    require_valid(c);
    return c;
}

/// β in φ order.
inline std::vector<Elem> flat_multipliers(const LrsCode& c) {
    std::vector<Elem> b;
    b.reserve(c.length());
    for (const auto& blk : c.multipliers) b.insert(b.end(), blk.begin(), blk.end());
    return b;
}

/// α_{φ(l,t)} = a_l·β_{l,t}^{q-1}.
inline std::vector<Elem> locators(const LrsCode& c) {
    const FieldTower& F = c.field;
    std::vector<Elem> a;
    a.reserve(c.length());
    for (std::size_t l = 0; l < c.blocks(); ++l)
        for (Elem b : c.multipliers[l]) a.push_back(F.mul(c.reps[l], F.pow(b, F.q() - 1)));
    return a;
}

/// k×n matrix with block-l entry (i, t) = N_i(a_l)·β_{l,t}^{q^i}.
inline Matrix<Elem> generator_matrix(const LrsCode& c) {
    const FieldTower& F = c.field;
    Matrix<Elem> G(c.k, c.length());
    std::size_t j = 0;
    for (std::size_t l = 0; l < c.blocks(); ++l) {
        for (Elem b : c.multipliers[l]) {
            Elem frob = b;
            for (std::size_t i = 0; i < c.k; ++i) {
                G(i, j) = F.mul(F.truncated_norm(c.reps[l], i), frob);
                frob = F.frobenius(frob);
            }
            ++j;
        }
    }
    return G;
}

/// codeword_j = β_j·f(α_j) with f = Σ msg_i X^i.
inline std::vector<Elem> encode(const LrsCode& c, std::span<const Elem> msg) {
    if (msg.size() != c.k) throw std::invalid_argument("encode: message length differs from k");
    const FieldTower& F = c.field;
    const SkewPoly f(F, std::vector<Elem>(msg.begin(), msg.end()));
    const auto alpha = locators(c);
    const auto beta = flat_multipliers(c);
    std::vector<Elem> cw(c.length());
    for (std::size_t j = 0; j < cw.size(); ++j) cw[j] = F.mul(beta[j], evaluate(f, alpha[j]));
    return cw;
}

}  // namespace lrsnc

#endif  // LRSNC_LRS_HPP
