#ifndef LRSNC_GF_HPP
#define LRSNC_GF_HPP

// Exact arithmetic in a two-step tower F_p ⊂ F_q ⊂ F_{q^m}, q = p^e.
//
// Elements of F_{q^m} are carried as their canonical integer encoding:
//   Σ_i enc(c_i) q^i   for  Σ_i c_i y^i,  c_i ∈ F_q,
// where enc on F_q = F_p[x]/(g) is Σ_j d_j p^j. F_q therefore embeds as the
// encodings [0, q), and y (the root of the top modulus) is the primitive
// element γ.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrsnc/errors.hpp"
#include "lrsnc/matrix.hpp"

namespace lrsnc {

/// Canonical encoding of an element of F_{q^m}.
struct Elem {
    std::uint64_t value = 0;

    constexpr auto operator<=>(const Elem&) const = default;
};

struct ElemHash {
    std::size_t operator()(Elem a) const noexcept { return std::hash<std::uint64_t>{}(a.value); }
};

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 p = 2; p < 1000; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
            factor_into(n, out);
            return;
        }
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Distinct prime divisors, ascending.
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    factor_into(n, f);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

/// base^exp if it stays ≤ limit.
inline bool checked_pow(u64 base, unsigned exp, u64 limit, u64& out) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > limit / base) return false;
        r *= base;
    }
    out = r;
    return true;
}

/// Table-driven small field (F_p or F_q), elements 0..size-1.
struct SmallField {
    unsigned size = 0;
    std::vector<std::uint16_t> add_t, mul_t, neg_t, inv_t;

    unsigned add(unsigned a, unsigned b) const { return add_t[a * size + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_t[a * size + b]; }
    unsigned neg(unsigned a) const { return neg_t[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add_t[a * size + neg_t[b]]; }
    unsigned inv(unsigned a) const { return inv_t[a]; }
};

inline SmallField prime_field(unsigned p) {
    SmallField F;
    F.size = p;
    F.add_t.resize(p * p);
    F.mul_t.resize(p * p);
    F.neg_t.resize(p);
    F.inv_t.assign(p, 0);
    for (unsigned a = 0; a < p; ++a) {
        F.neg_t[a] = static_cast<std::uint16_t>((p - a) % p);
        for (unsigned b = 0; b < p; ++b) {
            F.add_t[a * p + b] = static_cast<std::uint16_t>((a + b) % p);
            F.mul_t[a * p + b] = static_cast<std::uint16_t>((a * b) % p);
            if (a * b % p == 1) F.inv_t[a] = static_cast<std::uint16_t>(b);
        }
    }
    return F;
}

// Dense polynomials over a SmallField, coefficients low -> high.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, const SmallField& K) {
    trim(a);
    const std::size_t d = f.size() - 1;
    const unsigned lead_inv = K.inv(f.back());
    while (a.size() > d) {
        const unsigned c = K.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t j = 0; j <= d; ++j) a[shift + j] = K.sub(a[shift + j], K.mul(c, f[j]));
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const SmallField& K) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& f, const SmallField& K) {
    Poly r{1};
    r = poly_mod(r, f, K);
    base = poly_mod(base, f, K);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, K), f, K);
        e >>= 1;
        if (e) base = poly_mod(poly_mul(base, base, K), f, K);
    }
    return r;
}

inline Poly poly_sub(Poly a, const Poly& b, const SmallField& K) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
    trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, const SmallField& K) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, K);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const unsigned li = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, li);
    }
    return a;
}

/// Rabin's test: f monic of degree d irreducible over K.
inline bool is_irreducible(const Poly& f, const SmallField& K) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    if (d == 0) return false;
    if (d == 1) return true;
    // y^{|K|^i} mod f for i = 0..d
    std::vector<Poly> frob(d + 1);
    frob[0] = poly_mod(Poly{0, 1}, f, K);
    for (unsigned i = 1; i <= d; ++i) frob[i] = poly_powmod(frob[i - 1], K.size, f, K);
    if (frob[d] != frob[0]) return false;
    for (u64 r : prime_factors(d)) {
        const Poly h = poly_sub(frob[d / r], frob[0], K);
        if (poly_gcd(h, f, K) != Poly{1}) return false;
    }
    return true;
}

/// True iff the class of y in K[y]/(f) has multiplicative order exactly `order`.
inline bool root_has_order(const Poly& f, const SmallField& K, u64 order, const std::vector<u64>& factors) {
    const Poly one = poly_mod(Poly{1}, f, K);
    const Poly y{0, 1};
    if (poly_powmod(y, order, f, K) != one) return false;
    for (u64 r : factors)
        if (poly_powmod(y, order / r, f, K) == one) return false;
    return true;
}

/// Smallest monic primitive polynomial of degree d over K in base-|K| integer order.
inline Poly first_primitive(const SmallField& K, unsigned d) {
    u64 count = 0, order = 0;
    checked_pow(K.size, d, ~0ULL, count);
    order = count - 1;
    const auto factors = prime_factors(order);
    for (u64 v = 0; v < count; ++v) {
        Poly f(d + 1, 0);
        u64 x = v;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = static_cast<unsigned>(x % K.size);
            x /= K.size;
        }
        f[d] = 1;
        if (f[0] == 0) continue;
        if (root_has_order(f, K, order, factors)) return f;
    }
    throw invalid_field("no primitive polynomial found");
}

struct TowerData {
    unsigned p = 0, e = 0, m = 0;
    u64 q = 0, size = 0;
    std::vector<unsigned> base_modulus, top_modulus;
    SmallField prime, base;
    bool binary = false;  // q = 2^bits: digits are bit fields and addition is XOR
    unsigned bits = 0;
    std::vector<u64> q_pow;
    u64 gamma = 0;
    std::vector<std::uint32_t> exp_t, log_t;  // filled when size <= kTableLimit
};

inline constexpr u64 kTableLimit = u64{1} << 21;
inline constexpr u64 kSizeLimit = u64{1} << 62;
inline constexpr unsigned kBaseLimit = 256;

}  // namespace detail

/// The tower F_p ⊂ F_q ⊂ F_{q^m} with Frobenius σ(a) = a^q and primitive γ.
/// Immutable; copies share the arithmetic tables.
class FieldTower {
  public:
    FieldTower() = default;

    /// Default moduli: lexicographically smallest monic primitive polynomials.
    static FieldTower make(unsigned p, unsigned e, unsigned m) { return make(p, e, m, {}, {}); }

    /// Explicit moduli (coefficients low -> high, including the leading 1);
    /// an empty vector selects the default for that level.
    static FieldTower make(unsigned p, unsigned e, unsigned m, std::vector<unsigned> base_modulus,
                           std::vector<unsigned> top_modulus);

    unsigned p() const { return d_->p; }
    unsigned e() const { return d_->e; }
    unsigned m() const { return d_->m; }
    std::uint64_t q() const { return d_->q; }
    /// q^m.
    std::uint64_t size() const { return d_->size; }
    const std::vector<unsigned>& base_modulus() const { return d_->base_modulus; }
    const std::vector<unsigned>& top_modulus() const { return d_->top_modulus; }
    bool has_tables() const { return !d_->exp_t.empty(); }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem gamma() const { return {d_->gamma}; }
    bool contains(Elem a) const { return a.value < d_->size; }
    bool in_base(Elem a) const { return a.value < d_->q; }

    // F_{q^m}
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t exp) const;
    /// γ^i.
    Elem gamma_pow(std::uint64_t i) const { return pow(gamma(), i); }
    /// σ^i(a) = a^{q^{i mod m}}; negative i allowed.
    Elem frobenius(Elem a, long long i = 1) const;
    /// N_i(a) = a^{(q^i-1)/(q-1)}.
    Elem truncated_norm(Elem a, std::size_t i) const;
    /// Discrete log base γ of a nonzero element.
    std::uint64_t log(Elem a) const;

    // F_q, as encodings in [0, q)
    Elem base_add(Elem a, Elem b) const { return {d_->base.add(unsigned(a.value), unsigned(b.value))}; }
    Elem base_sub(Elem a, Elem b) const { return {d_->base.sub(unsigned(a.value), unsigned(b.value))}; }
    Elem base_mul(Elem a, Elem b) const { return {d_->base.mul(unsigned(a.value), unsigned(b.value))}; }
    Elem base_inv(Elem a) const {
        if (a.value == 0) throw std::domain_error("inverse of zero");
        return {d_->base.inv(unsigned(a.value))};
    }

    /// Coordinates of a in the power basis (1, y, ..., y^{m-1}), each an F_q encoding.
    std::vector<Elem> coordinates(Elem a) const;
    Elem from_coordinates(std::span<const Elem> c) const;

    friend bool operator==(const FieldTower& a, const FieldTower& b) {
        return a.d_ == b.d_ || (a.d_ && b.d_ && a.p() == b.p() && a.e() == b.e() && a.m() == b.m() &&
                                a.base_modulus() == b.base_modulus() && a.top_modulus() == b.top_modulus());
    }

  private:
    explicit FieldTower(std::shared_ptr<const detail::TowerData> d) : d_(std::move(d)) {}

    using Digits = std::array<unsigned, 64>;
    void decode(std::uint64_t v, Digits& out) const;
    std::uint64_t encode(const Digits& in) const;
    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_by_root(std::uint64_t a) const;
    std::uint64_t pow_generic(std::uint64_t a, std::uint64_t e) const;

    std::shared_ptr<const detail::TowerData> d_;
};

inline void FieldTower::decode(std::uint64_t v, Digits& out) const {
    const auto& d = *d_;
    if (d.binary) {
        const std::uint64_t mask = d.q - 1;
        for (unsigned i = 0; i < d.m; ++i) out[i] = static_cast<unsigned>((v >> (i * d.bits)) & mask);
    } else {
        for (unsigned i = 0; i < d.m; ++i) {
            out[i] = static_cast<unsigned>(v % d.q);
            v /= d.q;
        }
    }
}

inline std::uint64_t FieldTower::encode(const Digits& in) const {
    const auto& d = *d_;
    std::uint64_t v = 0;
    for (unsigned i = d.m; i-- > 0;) v = v * d.q + in[i];
    return v;
}

inline Elem FieldTower::add(Elem a, Elem b) const {
    if (d_->binary) return {a.value ^ b.value};
    Digits x, y;
    decode(a.value, x);
    decode(b.value, y);
    for (unsigned i = 0; i < d_->m; ++i) x[i] = d_->base.add(x[i], y[i]);
    return {encode(x)};
}

inline Elem FieldTower::neg(Elem a) const {
    if (d_->binary) return a;
    Digits x;
    decode(a.value, x);
    for (unsigned i = 0; i < d_->m; ++i) x[i] = d_->base.neg(x[i]);
    return {encode(x)};
}

inline std::uint64_t FieldTower::mul_generic(std::uint64_t a, std::uint64_t b) const {
    const auto& d = *d_;
    const unsigned m = d.m;
    Digits x, y;
    decode(a, x);
    decode(b, y);
    std::array<unsigned, 128> prod{};
    for (unsigned i = 0; i < m; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < m; ++j)
            if (y[j]) prod[i + j] = d.base.add(prod[i + j], d.base.mul(x[i], y[j]));
    }
    for (unsigned i = 2 * m - 1; i-- > m;) {
        const unsigned c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < m; ++j) prod[i - m + j] = d.base.sub(prod[i - m + j], d.base.mul(c, d.top_modulus[j]));
    }
    Digits r;
    for (unsigned i = 0; i < m; ++i) r[i] = prod[i];
    return encode(r);
}

inline std::uint64_t FieldTower::mul_by_root(std::uint64_t a) const {
    const auto& d = *d_;
    Digits x;
    decode(a, x);
    const unsigned top = x[d.m - 1];
    for (unsigned i = d.m - 1; i > 0; --i) x[i] = x[i - 1];
    x[0] = 0;
    if (top)
        for (unsigned j = 0; j < d.m; ++j) x[j] = d.base.sub(x[j], d.base.mul(top, d.top_modulus[j]));
    return encode(x);
}

inline std::uint64_t FieldTower::pow_generic(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        e >>= 1;
        if (e) a = mul_generic(a, a);
    }
    return r;
}

inline Elem FieldTower::mul(Elem a, Elem b) const {
    if (a.value == 0 || b.value == 0) return {0};
    const auto& d = *d_;
    if (!d.exp_t.empty()) {
        std::uint64_t s = std::uint64_t{d.log_t[a.value]} + d.log_t[b.value];
        if (s >= d.size - 1) s -= d.size - 1;
        return {d.exp_t[s]};
    }
    return {mul_generic(a.value, b.value)};
}

inline std::uint64_t FieldTower::log(Elem a) const {
    if (a.value == 0) throw std::domain_error("log of zero");
    const auto& d = *d_;
    if (!d.exp_t.empty()) return d.log_t[a.value];
    throw std::logic_error("discrete log requires table-backed field");
}

inline Elem FieldTower::pow(Elem a, std::uint64_t e) const {
    const auto& d = *d_;
    if (e == 0) return {1};
    if (a.value == 0) return {0};
    const std::uint64_t ord = d.size - 1;
    if (!d.exp_t.empty()) {
        const std::uint64_t x = detail::mulmod(d.log_t[a.value], e % ord, ord);
        return {d.exp_t[x]};
    }
    // a^(Q-1) = 1, so reduce the exponent but keep it positive.
    std::uint64_t r = e % ord;
    if (r == 0) return {1};
    return {pow_generic(a.value, r)};
}

inline Elem FieldTower::inv(Elem a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero");
    const auto& d = *d_;
    if (!d.exp_t.empty()) {
        const std::uint64_t l = d.log_t[a.value];
        return {d.exp_t[l == 0 ? 0 : d.size - 1 - l]};
    }
    return {pow_generic(a.value, d.size - 2)};
}

inline Elem FieldTower::frobenius(Elem a, long long i) const {
    const long long m = d_->m;
    const long long r = ((i % m) + m) % m;
    return pow(a, d_->q_pow[static_cast<std::size_t>(r)]);
}

inline Elem FieldTower::truncated_norm(Elem a, std::size_t i) const {
    if (i == 0) return {1};
    if (a.value == 0) return {0};
    const std::uint64_t ord = d_->size - 1;
    if (ord == 1) return {1};
    // (q^i - 1)/(q - 1) = 1 + q + ... + q^{i-1}, reduced mod the group order.
    std::uint64_t ex = 0;
    for (std::size_t j = 0; j < i; ++j) ex = (detail::mulmod(ex, d_->q % ord, ord) + 1) % ord;
    if (ex == 0) return {1};
    return pow(a, ex);
}

inline std::vector<Elem> FieldTower::coordinates(Elem a) const {
    Digits x;
    decode(a.value, x);
    std::vector<Elem> c(d_->m);
    for (unsigned i = 0; i < d_->m; ++i) c[i] = {x[i]};
    return c;
}

inline Elem FieldTower::from_coordinates(std::span<const Elem> c) const {
    if (c.size() != d_->m) throw std::invalid_argument("from_coordinates: expected m coordinates");
    Digits x;
    for (unsigned i = 0; i < d_->m; ++i) {
        if (c[i].value >= d_->q) throw std::invalid_argument("from_coordinates: coordinate outside F_q");
        x[i] = static_cast<unsigned>(c[i].value);
    }
    return {encode(x)};
}

inline FieldTower FieldTower::make(unsigned p, unsigned e, unsigned m, std::vector<unsigned> base_modulus,
                                   std::vector<unsigned> top_modulus) {
    using namespace detail;
    if (p < 2 || !is_prime(p)) throw invalid_field("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1 || m < 1) throw invalid_field("extension degrees must be at least 1");
    auto d = std::make_shared<TowerData>();
    d->p = p;
    d->e = e;
    d->m = m;
    if (!checked_pow(p, e, kBaseLimit, d->q))
        throw invalid_field("base field larger than " + std::to_string(kBaseLimit) + " is not supported");
    if (!checked_pow(d->q, m, kSizeLimit, d->size) || m > 63)
        throw invalid_field("field size q^m exceeds 2^62");

    d->prime = prime_field(p);

    // Base field F_q = F_p[x]/(g).
    if (base_modulus.empty()) {
        base_modulus = first_primitive(d->prime, e);
    } else {
        if (base_modulus.size() != e + 1 || base_modulus.back() != 1)
            throw invalid_field("base modulus must be monic of degree e");
        for (unsigned c : base_modulus)
            if (c >= p) throw invalid_field("base modulus coefficient outside F_p");
        if (!is_irreducible(base_modulus, d->prime)) throw invalid_field("base modulus is reducible");
    }
    d->base_modulus = base_modulus;
    {
        const unsigned q = static_cast<unsigned>(d->q);
        SmallField& B = d->base;
        B.size = q;
        B.add_t.resize(std::size_t{q} * q);
        B.mul_t.resize(std::size_t{q} * q);
        B.neg_t.resize(q);
        B.inv_t.assign(q, 0);
        auto to_poly = [&](unsigned v) {
            Poly a(e, 0);
            for (unsigned i = 0; i < e; ++i) {
                a[i] = v % p;
                v /= p;
            }
            trim(a);
            return a;
        };
        auto from_poly = [&](const Poly& a) {
            unsigned v = 0;
            for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
            return v;
        };
        for (unsigned a = 0; a < q; ++a) {
            const Poly pa = to_poly(a);
            Poly na = pa;
            for (auto& c : na) c = d->prime.neg(c);
            B.neg_t[a] = static_cast<std::uint16_t>(from_poly(na));
            for (unsigned b = 0; b < q; ++b) {
                const Poly pb = to_poly(b);
                Poly s(std::max(pa.size(), pb.size()), 0);
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] = d->prime.add(i < pa.size() ? pa[i] : 0, i < pb.size() ? pb[i] : 0);
                trim(s);
                B.add_t[a * q + b] = static_cast<std::uint16_t>(from_poly(s));
                const unsigned prod = from_poly(poly_mod(poly_mul(pa, pb, d->prime), base_modulus, d->prime));
                B.mul_t[a * q + b] = static_cast<std::uint16_t>(prod);
                if (prod == 1) B.inv_t[a] = static_cast<std::uint16_t>(b);
            }
        }
    }

    // Top field F_{q^m} = F_q[y]/(f) with y primitive.
    const std::uint64_t order = d->size - 1;
    if (top_modulus.empty()) {
        top_modulus = first_primitive(d->base, m);
    } else {
        if (top_modulus.size() != m + 1 || top_modulus.back() != 1)
            throw invalid_field("top modulus must be monic of degree m");
        for (unsigned c : top_modulus)
            if (c >= d->q) throw invalid_field("top modulus coefficient outside F_q");
        if (!is_irreducible(top_modulus, d->base)) throw invalid_field("top modulus is reducible");
        if (!root_has_order(top_modulus, d->base, order, prime_factors(order)))
            throw invalid_field("top modulus is not primitive: its root does not generate the multiplicative group");
    }
    d->top_modulus = top_modulus;

    d->binary = (p == 2);
    d->bits = d->binary ? e : 0;
    d->q_pow.resize(m + 1);
    d->q_pow[0] = 1;
    for (unsigned i = 1; i <= m; ++i) d->q_pow[i] = d->q_pow[i - 1] * d->q;

    FieldTower F(d);
    // γ = y mod f; for m = 1 that is the constant root -f_0.
    d->gamma = (m == 1) ? d->base.neg(top_modulus[0]) : d->q;
    if (d->size <= kTableLimit) {
        d->exp_t.resize(order);
        d->log_t.assign(d->size, 0);
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            d->exp_t[i] = static_cast<std::uint32_t>(x);
            d->log_t[x] = static_cast<std::uint32_t>(i);
            x = (m == 1) ? d->base.mul(static_cast<unsigned>(x), static_cast<unsigned>(d->gamma)) : F.mul_by_root(x);
        }
    }
    return F;
}

/// Arithmetic of F_{q^m} for the generic matrix routines.
struct TopOps {
    using value_type = Elem;
    FieldTower F;
    Elem zero() const { return F.zero(); }
    Elem one() const { return F.one(); }
    Elem add(Elem a, Elem b) const { return F.add(a, b); }
    Elem sub(Elem a, Elem b) const { return F.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return F.mul(a, b); }
    Elem inv(Elem a) const { return F.inv(a); }
};

/// Arithmetic of the base field F_q (encodings below q).
struct BaseOps {
    using value_type = Elem;
    FieldTower F;
    Elem zero() const { return F.zero(); }
    Elem one() const { return F.one(); }
    Elem add(Elem a, Elem b) const { return F.base_add(a, b); }
    Elem sub(Elem a, Elem b) const { return F.base_sub(a, b); }
    Elem mul(Elem a, Elem b) const { return F.base_mul(a, b); }
    Elem inv(Elem a) const { return F.base_inv(a); }
};

inline TopOps top_ops(const FieldTower& F) { return TopOps{F}; }
inline BaseOps base_ops(const FieldTower& F) { return BaseOps{F}; }

/// m×n matrix over F_q whose column j holds the coordinates of v_j.
inline Matrix<Elem> expand(const FieldTower& F, std::span<const Elem> v) {
    Matrix<Elem> C(F.m(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto c = F.coordinates(v[j]);
        for (unsigned i = 0; i < F.m(); ++i) C(i, j) = c[i];
    }
    return C;
}

/// Inverse of expand: one element per column.
inline std::vector<Elem> collapse(const FieldTower& F, const Matrix<Elem>& C) {
    if (C.rows() != F.m()) throw std::invalid_argument("collapse: expected m rows");
    std::vector<Elem> v(C.cols());
    std::vector<Elem> col(F.m());
    for (std::size_t j = 0; j < C.cols(); ++j) {
        for (unsigned i = 0; i < F.m(); ++i) col[i] = C(i, j);
        v[j] = F.from_coordinates(col);
    }
    return v;
}

/// rank over F_q of expand(v).
inline std::size_t rank_q(const FieldTower& F, std::span<const Elem> v) { return rank(base_ops(F), expand(F, v)); }

inline bool linearly_independent_over_base(const FieldTower& F, std::span<const Elem> elems) {
    if (elems.size() > F.m()) return false;
    return rank_q(F, elems) == elems.size();
}

/// b and a lie in the same σ-conjugacy class: both zero, or b/a is a
/// (q-1)-th power, i.e. has norm one.
inline bool same_conjugacy_class(const FieldTower& F, Elem a, Elem b) {
    if (a.value == 0 || b.value == 0) return a == b;
    const std::uint64_t norm_exp = (F.size() - 1) / (F.q() - 1);
    return F.pow(F.div(b, a), norm_exp) == F.one();
}

inline constexpr std::uint64_t kConjugacyGuard = std::uint64_t{1} << 20;

/// {0} followed by C_σ(γ^0), ..., C_σ(γ^{q-2}); each class sorted ascending.
inline std::vector<std::vector<Elem>> conjugacy_classes(const FieldTower& F) {
    if (F.size() > kConjugacyGuard) throw guard_exceeded("conjugacy class enumeration limited to q^m <= 2^20");
    std::vector<std::vector<Elem>> classes;
    classes.push_back({F.zero()});
    for (std::uint64_t i = 0; i + 1 < F.q(); ++i) {
        const Elem a = F.gamma_pow(i);
        std::vector<Elem> cls;
        cls.reserve(static_cast<std::size_t>((F.size() - 1) / (F.q() - 1)));
        for (std::uint64_t c = 1; c < F.size(); ++c) {
            const Elem ce{c};
            cls.push_back(F.mul(F.mul(F.frobenius(ce), a), F.inv(ce)));
        }
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

template <class URBG>
Elem random_element(const FieldTower& F, URBG& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
    return {dist(rng)};
}

template <class URBG>
Elem random_nonzero(const FieldTower& F, URBG& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, F.size() - 1);
    return {dist(rng)};
}

template <class URBG>
Elem random_base_element(const FieldTower& F, URBG& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    return {dist(rng)};
}

}  // namespace lrsnc

#endif  // LRSNC_GF_HPP
