#ifndef LRSNC_MATRIX_HPP
#define LRSNC_MATRIX_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lrsnc {

/// Dense row-major matrix. Arithmetic lives in the field-ops object passed to
/// the free functions below, so the same container serves F_q and F_{q^m}.
template <class T>
class Matrix {
  public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block out of range");
        Matrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Field arithmetic provider consumed by the elimination routines.
template <class Ops>
concept FieldOps = requires(const Ops& o, typename Ops::value_type a, typename Ops::value_type b) {
    { o.zero() } -> std::same_as<typename Ops::value_type>;
    { o.one() } -> std::same_as<typename Ops::value_type>;
    { o.add(a, b) } -> std::same_as<typename Ops::value_type>;
    { o.sub(a, b) } -> std::same_as<typename Ops::value_type>;
    { o.mul(a, b) } -> std::same_as<typename Ops::value_type>;
    { o.inv(a) } -> std::same_as<typename Ops::value_type>;
};

template <FieldOps Ops>
Matrix<typename Ops::value_type> identity(const Ops& ops, std::size_t n) {
    Matrix<typename Ops::value_type> I(n, n, ops.zero());
    for (std::size_t i = 0; i < n; ++i) I(i, i) = ops.one();
    return I;
}

template <FieldOps Ops>
Matrix<typename Ops::value_type> multiply(const Ops& ops, const Matrix<typename Ops::value_type>& A,
                                          const Matrix<typename Ops::value_type>& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    const auto zero = ops.zero();
    Matrix<typename Ops::value_type> C(A.rows(), B.cols(), zero);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            const auto a = A(i, l);
            if (a == zero) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = ops.add(C(i, j), ops.mul(a, B(l, j)));
        }
    return C;
}

template <FieldOps Ops>
std::vector<typename Ops::value_type> multiply(const Ops& ops, std::span<const typename Ops::value_type> x,
                                               const Matrix<typename Ops::value_type>& A) {
    if (x.size() != A.rows()) throw std::invalid_argument("vector-matrix product: length mismatch");
    const auto zero = ops.zero();
    std::vector<typename Ops::value_type> y(A.cols(), zero);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (x[i] == zero) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) y[j] = ops.add(y[j], ops.mul(x[i], A(i, j)));
    }
    return y;
}

/// In-place reduced row echelon form. Returns the pivot columns.
template <FieldOps Ops>
std::vector<std::size_t> row_reduce(const Ops& ops, Matrix<typename Ops::value_type>& M) {
    const auto zero = ops.zero();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c) == zero) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        const auto inv = ops.inv(M(r, c));
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = ops.mul(M(r, j), inv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == zero) continue;
            const auto f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = ops.sub(M(i, j), ops.mul(f, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <FieldOps Ops>
std::size_t rank(const Ops& ops, Matrix<typename Ops::value_type> M) {
    // Forward elimination only; the pivot count is all we need.
    const auto zero = ops.zero();
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c) == zero) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        const auto inv = ops.inv(M(r, c));
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            if (M(i, c) == zero) continue;
            const auto f = ops.mul(M(i, c), inv);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = ops.sub(M(i, j), ops.mul(f, M(r, j)));
        }
        ++r;
    }
    return r;
}

/// Solves x * G = c for x. Returns nullopt when c is outside the row space;
/// when G has dependent rows the free coordinates are set to zero.
template <FieldOps Ops>
std::optional<std::vector<typename Ops::value_type>> solve_left(const Ops& ops,
                                                                const Matrix<typename Ops::value_type>& G,
                                                                std::span<const typename Ops::value_type> c) {
    if (c.size() != G.cols()) throw std::invalid_argument("solve_left: length mismatch");
    const std::size_t k = G.rows();
    Matrix<typename Ops::value_type> aug(G.cols(), k + 1, ops.zero());
    for (std::size_t j = 0; j < G.cols(); ++j) {
        for (std::size_t i = 0; i < k; ++i) aug(j, i) = G(i, j);
        aug(j, k) = c[j];
    }
    const auto pivots = row_reduce(ops, aug);
    std::vector<typename Ops::value_type> x(k, ops.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k) return std::nullopt;
        x[pivots[r]] = aug(r, k);
    }
    return x;
}

}  // namespace lrsnc

#endif  // LRSNC_MATRIX_HPP
