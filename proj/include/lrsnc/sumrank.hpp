#ifndef LRSNC_SUMRANK_HPP
#define LRSNC_SUMRANK_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrsnc/gf.hpp"
#include "lrsnc/matrix.hpp"

namespace lrsnc {

/// (n_1, ..., n_ℓ) with every part positive.
class OrderedPartition {
  public:
    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
        for (std::size_t p : parts_)
            if (p == 0) throw std::invalid_argument("OrderedPartition: parts must be positive");
        offsets_.resize(parts_.size() + 1, 0);
        for (std::size_t l = 0; l < parts_.size(); ++l) offsets_[l + 1] = offsets_[l] + parts_[l];
    }

    /// ℓ = n blocks of size one.
    static OrderedPartition singletons(std::size_t n) { return OrderedPartition(std::vector<std::size_t>(n, 1)); }
    /// A single block of size n.
    static OrderedPartition whole(std::size_t n) { return OrderedPartition(std::vector<std::size_t>{n}); }

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t blocks() const { return parts_.size(); }
    std::size_t length() const { return offsets_.empty() ? 0 : offsets_.back(); }
    std::size_t operator[](std::size_t l) const { return parts_[l]; }
    /// First global index of block l.
    std::size_t offset(std::size_t l) const { return offsets_[l]; }

    friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) { return a.parts_ == b.parts_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t l = 0; l < parts_.size(); ++l) s += (l ? " " : "") + std::to_string(parts_[l]);
        return s;
    }

  private:
    std::vector<std::size_t> parts_;
    std::vector<std::size_t> offsets_;
};

enum class Orientation { columns, rows };

/// Σ_l rank_q of the l-th block of x.
inline std::size_t sum_rank_weight(const FieldTower& F, std::span<const Elem> x, const OrderedPartition& part) {
    if (x.size() != part.length()) throw std::invalid_argument("sum_rank_weight: length does not match partition");
    std::size_t w = 0;
    for (std::size_t l = 0; l < part.blocks(); ++l) {
        const auto blk = x.subspan(part.offset(l), part[l]);
        bool nonzero = false;
        for (Elem a : blk) nonzero |= (a.value != 0);
        if (nonzero) w += part[l] == 1 ? 1 : rank_q(F, blk);
    }
    return w;
}

inline std::size_t sum_rank_distance(const FieldTower& F, std::span<const Elem> x, std::span<const Elem> y,
                                     const OrderedPartition& part) {
    if (x.size() != y.size()) throw std::invalid_argument("sum_rank_distance: length mismatch");
    std::vector<Elem> d(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) d[j] = F.sub(x[j], y[j]);
    return sum_rank_weight(F, d, part);
}

inline std::size_t hamming_weight(std::span<const Elem> x) {
    std::size_t w = 0;
    for (Elem a : x) w += a.value != 0;
    return w;
}

/// Sum of block ranks of an F_q matrix, blocks taken along columns or rows.
inline std::size_t sum_rank_weight(const FieldTower& F, const Matrix<Elem>& M, const OrderedPartition& part,
                                   Orientation orient) {
    const BaseOps ops = base_ops(F);
    const std::size_t dim = orient == Orientation::columns ? M.cols() : M.rows();
    if (dim != part.length()) throw std::invalid_argument("sum_rank_weight: partition does not match matrix");
    std::size_t w = 0;
    for (std::size_t l = 0; l < part.blocks(); ++l) {
        const Matrix<Elem> B = orient == Orientation::columns ? M.block(0, part.offset(l), M.rows(), part[l])
                                                              : M.block(part.offset(l), 0, part[l], M.cols());
        w += rank(ops, B);
    }
    return w;
}

inline constexpr std::uint64_t kCodewordGuard = std::uint64_t{1} << 22;

namespace detail {

/// Q^k when it fits under the brute-force guard.
inline std::uint64_t codebook_size(const FieldTower& F, std::size_t k) {
    std::uint64_t total = 0;
    if (k == 0) throw std::invalid_argument("brute force: zero-dimensional code");
    if (k > 64 || !checked_pow(F.size(), static_cast<unsigned>(k), kCodewordGuard, total))
        throw guard_exceeded("brute-force enumeration limited to (q^m)^k <= 2^22 codewords");
    return total;
}

/// Precomputed c·G_i for all c, so codewords are sums of table rows.
class RowTables {
  public:
    RowTables(const FieldTower& F, const Matrix<Elem>& G) : F_(F), n_(G.cols()), k_(G.rows()) {
        const std::uint64_t Q = F.size();
        tab_.resize(k_ * Q * n_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::uint64_t c = 0; c < Q; ++c)
                for (std::size_t j = 0; j < n_; ++j) tab_[(i * Q + c) * n_ + j] = F.mul(Elem{c}, G(i, j));
    }
    const Elem* row(std::size_t i, std::uint64_t c) const { return &tab_[(i * F_.size() + c) * n_]; }

    void codeword(std::span<const std::uint64_t> msg, std::vector<Elem>& out) const {
        out.assign(n_, F_.zero());
        for (std::size_t i = 0; i < k_; ++i) {
            if (msg[i] == 0) continue;
            const Elem* r = row(i, msg[i]);
            for (std::size_t j = 0; j < n_; ++j) out[j] = F_.add(out[j], r[j]);
        }
    }

  private:
    FieldTower F_;
    std::size_t n_, k_;
    std::vector<Elem> tab_;
};

/// Advance a mixed-radix counter over positions [from, k); false on wrap.
inline bool next_message(std::vector<std::uint64_t>& msg, std::size_t from, std::uint64_t Q) {
    for (std::size_t i = msg.size(); i-- > from;) {
        if (++msg[i] < Q) return true;
        msg[i] = 0;
    }
    return false;
}

}  // namespace detail

/// Minimum sum-rank weight over nonzero codewords of the row space of G.
/// Only messages whose first nonzero entry is 1 are visited (weights are
/// invariant under F_{q^m}-scaling); stops early at weight 1.
inline std::size_t min_distance_bruteforce(const FieldTower& F, const Matrix<Elem>& G, const OrderedPartition& part) {
    if (G.cols() != part.length()) throw std::invalid_argument("min_distance_bruteforce: partition does not match G");
    const std::size_t k = G.rows();
    detail::codebook_size(F, k);
    const detail::RowTables tabs(F, G);
    std::size_t best = G.cols() + 1;
    std::vector<std::uint64_t> msg(k);
    std::vector<Elem> cw;
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(msg.begin(), msg.end(), 0);
        msg[lead] = 1;
        do {
            tabs.codeword(msg, cw);
            const std::size_t w = sum_rank_weight(F, cw, part);
            if (w < best) best = w;
            if (best <= 1) return best;
        } while (detail::next_message(msg, lead + 1, F.size()));
    }
    return best;
}

enum class DecodeStatus {
    decoded,                ///< exactly one codeword within the radius
    no_codeword_in_radius,  ///< none within the radius; the nearest one is unique
    ambiguous,              ///< several codewords tie (inside the radius, or as nearest outside it)
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::no_codeword_in_radius;
    std::vector<Elem> message;    ///< set when decoded
    std::size_t distance = 0;     ///< distance to the nearest codeword
    std::size_t radius = 0;
};

inline std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::decoded: return "decoded";
        case DecodeStatus::no_codeword_in_radius: return "no_codeword_in_radius";
        case DecodeStatus::ambiguous: return "ambiguous";
    }
    return "unknown";
}

/// Nearest-codeword decoding by exhaustive search. Coordinates listed in
/// `erasures` are ignored (the code is punctured there). The radius defaults
/// to ⌊(d - 1 - #erasures) / 2⌋ with d the brute-force minimum distance.
inline DecodeResult bruteforce_decode(const FieldTower& F, const Matrix<Elem>& G, const OrderedPartition& part,
                                      std::span<const Elem> y, std::span<const std::size_t> erasures = {},
                                      std::optional<std::size_t> radius = std::nullopt) {
    const std::size_t n = G.cols();
    if (y.size() != n || part.length() != n) throw std::invalid_argument("bruteforce_decode: length mismatch");
    std::vector<bool> erased(n, false);
    for (std::size_t j : erasures) erased.at(j) = true;

    // Punctured partition and coordinate list.
    std::vector<std::size_t> keep;
    std::vector<std::size_t> pparts;
    for (std::size_t l = 0; l < part.blocks(); ++l) {
        std::size_t cnt = 0;
        for (std::size_t t = 0; t < part[l]; ++t) {
            const std::size_t j = part.offset(l) + t;
            if (!erased[j]) {
                keep.push_back(j);
                ++cnt;
            }
        }
        if (cnt) pparts.push_back(cnt);
    }
    const std::size_t n_erased = n - keep.size();
    DecodeResult res;
    if (radius) {
        res.radius = *radius;
    } else {
        const std::size_t d = min_distance_bruteforce(F, G, part);
        res.radius = d > 1 + n_erased ? (d - 1 - n_erased) / 2 : 0;
    }
    if (keep.empty()) {
        res.status = DecodeStatus::ambiguous;
        return res;
    }
    const OrderedPartition ppart(pparts);

    const std::size_t k = G.rows();
    detail::codebook_size(F, k);
    const detail::RowTables tabs(F, G);
    std::vector<std::uint64_t> msg(k, 0), best_msg;
    std::vector<Elem> cw, diff(keep.size());
    std::size_t best = n + 1, best_count = 0, in_radius = 0;
    do {
        tabs.codeword(msg, cw);
        for (std::size_t j = 0; j < keep.size(); ++j) diff[j] = F.sub(cw[keep[j]], y[keep[j]]);
        const std::size_t dist = sum_rank_weight(F, diff, ppart);
        if (dist <= res.radius) ++in_radius;
        if (dist < best) {
            best = dist;
            best_count = 1;
            best_msg = msg;
        } else if (dist == best) {
            ++best_count;
        }
    } while (detail::next_message(msg, 0, F.size()));

    res.distance = best;
    if (in_radius == 1) {
        res.status = DecodeStatus::decoded;
        for (auto v : best_msg) res.message.push_back(Elem{v});
    } else if (in_radius > 1 || best_count > 1) {
        res.status = DecodeStatus::ambiguous;
    } else {
        res.status = DecodeStatus::no_codeword_in_radius;
    }
    return res;
}

}  // namespace lrsnc

#endif  // LRSNC_SUMRANK_HPP
