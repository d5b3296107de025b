#ifndef FORESTKIT_MATRIX_HPP
#define FORESTKIT_MATRIX_HPP

#include "forestkit/error.hpp"
#include "forestkit/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forestkit {

/// Square row-major matrix over Rational or double.
template <class T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order, T(0)) {}

    static DenseMatrix identity(std::size_t order) {
        DenseMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t order() const noexcept { return order_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < order_ && j < order_);
        return data_[i * order_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < order_ && j < order_);
        return data_[i * order_ + j];
    }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * order_, order_}; }

    DenseMatrix& operator+=(const DenseMatrix& other) {
        assert(order_ == other.order_);
        for (std::size_t e = 0; e < data_.size(); ++e)
            data_[e] += other.data_[e];
        return *this;
    }
    DenseMatrix& operator-=(const DenseMatrix& other) {
        assert(order_ == other.order_);
        for (std::size_t e = 0; e < data_.size(); ++e)
            data_[e] -= other.data_[e];
        return *this;
    }
    DenseMatrix& operator*=(const T& scalar) {
        for (auto& x : data_)
            x *= scalar;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, const T& s) { return a *= s; }
    friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        assert(a.order_ == b.order_);
        const std::size_t n = a.order_;
        DenseMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.order_ == b.order_ && a.data_ == b.data_;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Principal submatrix with row and column `skip` removed.
    DenseMatrix without(std::size_t skip) const {
        assert(skip < order_);
        DenseMatrix s(order_ - 1);
        for (std::size_t i = 0, si = 0; i < order_; ++i) {
            if (i == skip)
                continue;
            for (std::size_t j = 0, sj = 0; j < order_; ++j) {
                if (j == skip)
                    continue;
                s(si, sj++) = (*this)(i, j);
            }
            ++si;
        }
        return s;
    }

    std::vector<T> row_sums() const {
        std::vector<T> sums(order_, T(0));
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                sums[i] += (*this)(i, j);
        return sums;
    }

    T max_abs() const {
        T best(0);
        for (const auto& x : data_) {
            T a = ScalarTraits<T>::abs(x);
            if (a > best)
                best = a;
        }
        return best;
    }

    /// Maximum absolute row sum.
    T inf_norm() const {
        T best(0);
        for (std::size_t i = 0; i < order_; ++i) {
            T s(0);
            for (std::size_t j = 0; j < order_; ++j)
                s += ScalarTraits<T>::abs((*this)(i, j));
            if (s > best)
                best = s;
        }
        return best;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

private:
    std::size_t order_ = 0;
    std::vector<T> data_;
};

/// Entrywise conversion of an exact matrix into the requested scalar mode.
template <class T>
DenseMatrix<T> matrix_cast(const DenseMatrix<Rational>& m) {
    DenseMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            out(i, j) = scalar_from<T>(m(i, j));
    return out;
}

/// Exact image of a double matrix (every finite double is a dyadic rational).
inline DenseMatrix<Rational> to_exact(const DenseMatrix<double>& m) {
    DenseMatrix<Rational> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

inline constexpr double kFloatPivotThreshold = 1e-12;

namespace detail {

template <class T>
bool pivot_is_zero(const T& pivot, const T& scale) {
    if constexpr (ScalarTraits<T>::exact)
        return pivot == 0;
    else
        return ScalarTraits<T>::abs(pivot) < kFloatPivotThreshold * std::max(scale, T(1e-300));
}

} // namespace detail

/// Bareiss fraction-free elimination for exact scalars, partial-pivot
/// Gaussian elimination for doubles. Singular input yields 0.
template <class T>
T determinant(DenseMatrix<T> a) {
    const std::size_t n = a.order();
    if (n == 0)
        return T(1);

    if constexpr (ScalarTraits<T>::exact) {
        T sign(1);
        T prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0)
                    ++p;
                if (p == n)
                    return T(0);
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(a(k, j), a(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    T next = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
                    a(i, j) = std::move(next);
                }
                a(i, k) = 0;
            }
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    } else {
        T det(1);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > std::abs(a(p, k)))
                    p = i;
            if (a(p, k) == 0)
                return T(0);
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(a(k, j), a(p, j));
                det = -det;
            }
            det *= a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                T factor = a(i, k) / a(k, k);
                for (std::size_t j = k; j < n; ++j)
                    a(i, j) -= factor * a(k, j);
            }
        }
        return det;
    }
}

/// Gauss-Jordan inversion. Exact mode accepts any nonzero pivot; float mode
/// uses partial pivoting and rejects pivots below 1e-12 of the row scale.
template <class T>
DenseMatrix<T> invert(DenseMatrix<T> a) {
    const std::size_t n = a.order();
    auto inv = DenseMatrix<T>::identity(n);

    std::vector<T> scale(n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale[i] = std::max(scale[i], ScalarTraits<T>::abs(a(i, j)));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        if constexpr (ScalarTraits<T>::exact) {
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                throw Error(ErrorCode::SingularMatrix, "matrix is singular");
        } else {
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(a(i, k)) > std::abs(a(p, k)))
                    p = i;
            if (detail::pivot_is_zero(a(p, k), scale[p]))
                throw Error(ErrorCode::SingularMatrix, "matrix is numerically singular");
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
            std::swap(scale[k], scale[p]);
        }

        const T pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            const T factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

template <class T>
DenseMatrix<T> power(const DenseMatrix<T>& m, unsigned exponent) {
    auto result = DenseMatrix<T>::identity(m.order());
    for (unsigned e = 0; e < exponent; ++e)
        result = result * m;
    return result;
}

template <class T>
struct SeriesResult {
    DenseMatrix<T> sum;
    /// Number of terms accumulated into `sum` (M^0 .. M^(terms_used-1)).
    std::size_t terms_used = 0;
    /// M^terms_used: the first term that fell below tolerance, not included.
    DenseMatrix<T> first_omitted;
};

/// Accumulates sum_{k<K} M^k term by term, where K is the first index with
/// max|M^K| < tolerance. Throws NotConverged when K would exceed max_terms.
template <class T>
SeriesResult<T> geometric_series(const DenseMatrix<T>& m, double tolerance, std::size_t max_terms) {
    if (!(tolerance > 0.0))
        throw Error(ErrorCode::BadParameters, "series tolerance must be positive");

    const T tol = scalar_from<T>(Rational(tolerance));
    SeriesResult<T> out{DenseMatrix<T>(m.order()), 0, DenseMatrix<T>::identity(m.order())};
    while (!(out.first_omitted.max_abs() < tol)) {
        if (out.terms_used == max_terms)
            throw Error(ErrorCode::NotConverged,
                        "geometric series did not reach tolerance within " + std::to_string(max_terms) + " terms");
        out.sum += out.first_omitted;
        out.first_omitted = out.first_omitted * m;
        ++out.terms_used;
    }
    return out;
}

} // namespace forestkit

#endif
