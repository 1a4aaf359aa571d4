#ifndef LRSNC_SKEWPOLY_HPP
#define LRSNC_SKEWPOLY_HPP

// The skew polynomial ring F_{q^m}[X; σ] with X·a = σ(a)·X.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrsnc/gf.hpp"
#include "lrsnc/matrix.hpp"

namespace lrsnc {

/// Degree of the zero polynomial.
inline constexpr long kNegInfinity = std::numeric_limits<long>::min();

inline long add_degrees(long a, long b) { return (a == kNegInfinity || b == kNegInfinity) ? kNegInfinity : a + b; }

class SkewPoly {
  public:
    SkewPoly() = default;
    explicit SkewPoly(FieldTower F) : F_(std::move(F)) {}
    SkewPoly(FieldTower F, std::vector<Elem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
        for (Elem a : c_)
            if (!F_.contains(a)) throw std::invalid_argument("SkewPoly: coefficient outside the field");
        trim();
    }

    static SkewPoly constant(const FieldTower& F, Elem c) { return SkewPoly(F, {c}); }
    static SkewPoly one(const FieldTower& F) { return constant(F, F.one()); }
    /// c·X^d.
    static SkewPoly monomial(const FieldTower& F, Elem c, std::size_t d) {
        std::vector<Elem> v(d + 1, F.zero());
        v[d] = c;
        return SkewPoly(F, std::move(v));
    }
    /// X - a.
    static SkewPoly x_minus(const FieldTower& F, Elem a) { return SkewPoly(F, {F.neg(a), F.one()}); }

    const FieldTower& field() const { return F_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? kNegInfinity : static_cast<long>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem leading() const { return c_.empty() ? Elem{0} : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F_.one(); }

    /// c·f (left scalar multiplication acts coefficientwise).
    SkewPoly scaled_left(Elem c) const {
        std::vector<Elem> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F_.mul(c, c_[i]);
        return SkewPoly(F_, std::move(v));
    }

    /// The monic left associate lc(f)^{-1}·f.
    SkewPoly monic() const {
        if (is_zero()) throw std::domain_error("monic: zero polynomial");
        return scaled_left(F_.inv(leading()));
    }

    /// X^s · f.
    SkewPoly shifted(std::size_t s) const {
        if (is_zero()) return *this;
        std::vector<Elem> v(s, F_.zero());
        for (Elem a : c_) v.push_back(F_.frobenius(a, static_cast<long long>(s)));
        return SkewPoly(F_, std::move(v));
    }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        const FieldTower& F = a.F_;
        std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), F.zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
        return SkewPoly(F, std::move(v));
    }

    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
        const FieldTower& F = a.F_;
        std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), F.zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
        return SkewPoly(F, std::move(v));
    }

    /// Σ_i Σ_j f_i σ^i(g_j) X^{i+j}.
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
        const FieldTower& F = f.F_;
        if (f.is_zero() || g.is_zero()) return SkewPoly(F);
        std::vector<Elem> v(f.c_.size() + g.c_.size() - 1, F.zero());
        std::vector<Elem> tw(g.c_);
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (i > 0)
                for (auto& t : tw) t = F.frobenius(t);
            if (f.c_[i] == F.zero()) continue;
            for (std::size_t j = 0; j < tw.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(f.c_[i], tw[j]));
        }
        return SkewPoly(F, std::move(v));
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }

    /// "c0 + c1*X + c2*X^2 + ..." with canonical encodings; "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += " + ";
            s += std::to_string(c_[i].value);
            if (i == 1) s += "*X";
            if (i > 1) s += "*X^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().value == 0) c_.pop_back();
    }

    FieldTower F_;
    std::vector<Elem> c_;
};

struct DivResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// f = Q·g + R with deg R < deg g.
inline DivResult right_div(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("right_div: division by the zero polynomial");
    const FieldTower& F = f.field();
    const long dg = g.degree();
    std::vector<Elem> r = f.coeffs();
    std::vector<Elem> quot(r.size() > static_cast<std::size_t>(dg) ? r.size() - dg : 0, F.zero());
    const auto& gc = g.coeffs();
    for (long d = static_cast<long>(r.size()) - 1; d >= dg; --d) {
        if (r[d] == F.zero()) continue;
        const long s = d - dg;
        const Elem c = F.div(r[d], F.frobenius(g.leading(), s));
        quot[s] = c;
        for (long j = 0; j <= dg; ++j) r[s + j] = F.sub(r[s + j], F.mul(c, F.frobenius(gc[j], s)));
    }
    return {SkewPoly(F, std::move(quot)), SkewPoly(F, std::move(r))};
}

/// f = g·Q + R with deg R < deg g.
inline DivResult left_div(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("left_div: division by the zero polynomial");
    const FieldTower& F = f.field();
    const long dg = g.degree();
    SkewPoly rem = f;
    SkewPoly quot(F);
    while (!rem.is_zero() && rem.degree() >= dg) {
        const long s = rem.degree() - dg;
        const Elem c = F.frobenius(F.div(rem.leading(), g.leading()), -dg);
        const SkewPoly term = SkewPoly::monomial(F, c, static_cast<std::size_t>(s));
        quot = quot + term;
        rem = rem - g * term;
    }
    return {quot, rem};
}

/// g right-divides f.
inline bool right_divides(const SkewPoly& g, const SkewPoly& f) { return right_div(f, g).remainder.is_zero(); }
/// g left-divides f.
inline bool left_divides(const SkewPoly& g, const SkewPoly& f) { return left_div(f, g).remainder.is_zero(); }

/// f(a) = Σ_i f_i N_i(a).
inline Elem evaluate(const SkewPoly& f, Elem a) {
    const FieldTower& F = f.field();
    Elem acc = F.zero();
    Elem norm = F.one();  // N_i(a)
    Elem conj = a;        // σ^i(a)
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != F.zero()) acc = F.add(acc, F.mul(c[i], norm));
        if (i + 1 < c.size()) {
            norm = F.mul(norm, conj);
            conj = F.frobenius(conj);
        }
    }
    return acc;
}

/// f(a) as the remainder of right division by X - a.
inline Elem evaluate_by_division(const SkewPoly& f, Elem a) {
    return right_div(f, SkewPoly::x_minus(f.field(), a)).remainder.coeff(0);
}

inline SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcrd: both arguments are zero");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = right_div(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Least common left multiple via the extended right-Euclidean scheme.
inline SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lclm: zero argument");
    const FieldTower& F = f.field();
    SkewPoly r0 = f, r1 = g;
    SkewPoly s0 = SkewPoly::one(F), s1(F);
    while (!r1.is_zero()) {
        DivResult qr = right_div(r0, r1);
        SkewPoly s2 = s0 - qr.quotient * s1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // s1·f + t1·g = 0 is the common left multiple of least degree.
    return (s1 * f).monic();
}

/// Left fold of pairwise lclm in input order.
inline SkewPoly lclm(std::span<const SkewPoly> fs) {
    if (fs.empty()) throw std::invalid_argument("lclm: empty list");
    SkewPoly h = fs[0].monic();
    for (std::size_t i = 1; i < fs.size(); ++i) h = lclm(h, fs[i]);
    return h;
}

/// Pairwise distinct points of F_{q^m}.
class EvaluationSet {
  public:
    EvaluationSet() = default;
    explicit EvaluationSet(std::vector<Elem> points) : pts_(std::move(points)) {
        std::vector<Elem> s = pts_;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("EvaluationSet: points must be pairwise distinct");
    }
    const std::vector<Elem>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }

  private:
    std::vector<Elem> pts_;
};

/// Monic f_Ω by Newton interpolation: for each a with v = g(a) ≠ 0,
/// g ← (X - σ(v)·a·v^{-1})·g. Points already annihilated are skipped.
inline SkewPoly minimal_polynomial(const FieldTower& F, const EvaluationSet& omega) {
    SkewPoly g = SkewPoly::one(F);
    for (Elem a : omega.points()) {
        const Elem v = evaluate(g, a);
        if (v == F.zero()) continue;
        const Elem conj = F.mul(F.mul(F.frobenius(v), a), F.inv(v));
        g = SkewPoly::x_minus(F, conj) * g;
    }
    return g;
}

/// f_Ω as the lclm of the linear factors X - a; independent of the Newton route.
inline SkewPoly minimal_polynomial_by_lclm(const FieldTower& F, const EvaluationSet& omega) {
    if (omega.empty()) return SkewPoly::one(F);
    std::vector<SkewPoly> lin;
    lin.reserve(omega.size());
    for (Elem a : omega.points()) lin.push_back(SkewPoly::x_minus(F, a));
    return lclm(std::span<const SkewPoly>(lin));
}

/// Rows x |Ω| matrix with entry (i, j) = N_i(a_j).
inline Matrix<Elem> theta_vandermonde(const FieldTower& F, const EvaluationSet& omega, std::size_t rows) {
    if (rows == 0) throw std::invalid_argument("theta_vandermonde: rows must be positive");
    Matrix<Elem> V(rows, omega.size());
    for (std::size_t j = 0; j < omega.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) V(i, j) = F.truncated_norm(omega.points()[j], i);
    return V;
}

inline bool is_p_independent(const FieldTower& F, const EvaluationSet& omega) {
    if (omega.empty()) return true;
    return minimal_polynomial(F, omega).degree() == static_cast<long>(omega.size());
}

/// Same predicate through the rank of the square θ-Vandermonde matrix.
inline bool is_p_independent_by_rank(const FieldTower& F, const EvaluationSet& omega) {
    if (omega.empty()) return true;
    return rank(top_ops(F), theta_vandermonde(F, omega, omega.size())) == omega.size();
}

inline constexpr std::uint64_t kRootGuard = std::uint64_t{1} << 16;

/// Every a ∈ F_{q^m} with f(a) = 0, ascending, by exhaustive evaluation.
inline std::vector<Elem> roots_in_field(const SkewPoly& f) {
    const FieldTower& F = f.field();
    if (F.size() > kRootGuard) throw guard_exceeded("root enumeration limited to q^m <= 2^16");
    std::vector<Elem> roots;
    for (std::uint64_t v = 0; v < F.size(); ++v)
        if (evaluate(f, Elem{v}) == F.zero()) roots.push_back(Elem{v});
    return roots;
}

}  // namespace lrsnc

#endif  // LRSNC_SKEWPOLY_HPP
