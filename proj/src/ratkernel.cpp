#include "syzlab/ratkernel.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace syz {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
{
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_)
            throw DimensionError("ragged initializer for matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const
{
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t c) const
{
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

template <typename T>
Matrix<T> Matrix<T>::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const T& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix sum dimension mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += rhs.data_[i];
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::operator-(const Matrix& rhs) const
{
    return *this + (-rhs);
}

template <typename T>
Matrix<T> Matrix<T>::operator-() const
{
    Matrix out(*this);
    for (auto& x : out.data_)
        x = -x;
    return out;
}

template <typename T>
bool Matrix<T>::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

template <typename T>
bool Matrix<T>::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
}

template class Matrix<Integer>;
template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Rational(m(r, c));
    return out;
}

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (denominator(m(r, c)) != 1)
                throw std::domain_error("matrix entry " + to_string(m(r, c)) + " is not an integer");
            out(r, c) = numerator(m(r, c));
        }
    return out;
}

IntVector to_integer(const RatVector& v)
{
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1)
            throw std::domain_error("vector entry " + to_string(v[i]) + " is not an integer");
        out[i] = numerator(v[i]);
    }
    return out;
}

std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = prow; r < rows; ++r)
            if (m(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel == rows)
            continue;
        if (sel != prow)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(sel, k), m(prow, k));
        const Rational inv = 1 / m(prow, c);
        for (std::size_t k = c; k < cols; ++k)
            if (m(prow, k) != 0)
                m(prow, k) *= inv;
        std::vector<std::size_t> support;
        for (std::size_t k = c + 1; k < cols; ++k)
            if (m(prow, k) != 0)
                support.push_back(k);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || m(r, c) == 0)
                continue;
            const Rational f = m(r, c);
            m(r, c) = 0;
            for (std::size_t k : support)
                m(r, k) -= f * m(prow, k);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix w = m;
    return rref(w).size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    RatMatrix w = m;
    const auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -w(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b)
{
    if (b.size() != a.rows())
        throw DimensionError("right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    RatVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

Rational determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("determinant of non-square matrix");
    RatMatrix w = m;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t r = c; r < n; ++r)
            if (w(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel == n)
            return 0;
        if (sel != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(w(sel, k), w(c, k));
            det = -det;
        }
        det *= w(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (w(r, c) == 0)
                continue;
            const Rational f = w(r, c) / w(c, c);
            for (std::size_t k = c; k < n; ++k)
                w(r, k) -= f * w(c, k);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("determinant of non-square matrix");
    // Bareiss fraction-free elimination.
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t sel = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (w(r, k) != 0) {
                    sel = r;
                    break;
                }
            if (sel == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(w(sel, c), w(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m)
{
    const Integer d = determinant(m);
    if (d != 1 && d != -1)
        throw std::domain_error("matrix is not unimodular (det = " + d.str() + ")");
    return to_integer(*inverse(to_rational(m)));
}

IntMatrix power(const IntMatrix& m, int exponent)
{
    IntMatrix base = exponent < 0 ? inverse_unimodular(m) : m;
    IntMatrix out = IntMatrix::identity(m.rows());
    for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e)
        out = out * base;
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, a), m(r, b));
}

// row_dst += f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(src, c) != 0)
            m(dst, c) += f * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, src) != 0)
            m(r, dst) += f * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            Integer best = 0;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a(r, c) != 0 && (best == 0 || abs(a(r, c)) < best)) {
                        best = abs(a(r, c));
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                goto finished;
            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0)
                    continue;
                const Integer q = a(r, t) / a(t, t);
                add_row(a, r, t, -q);
                add_row(u, r, t, -q);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0)
                    continue;
                const Integer q = a(t, c) / a(t, t);
                add_col(a, c, t, -q);
                add_col(v, c, t, -q);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        add_row(a, t, r, 1);
                        add_row(u, t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c)
                a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c)
                u(t, c) = -u(t, c);
        }
    }
finished:
    return SmithForm{std::move(u), std::move(a), std::move(v), t};
}

IntMatrix hermite_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        for (;;) {
            std::size_t sel = rows;
            for (std::size_t r = prow; r < rows; ++r)
                if (a(r, c) != 0 && (sel == rows || abs(a(r, c)) < abs(a(sel, c))))
                    sel = r;
            if (sel == rows)
                break;
            swap_rows(a, prow, sel);
            bool done = true;
            for (std::size_t r = prow + 1; r < rows; ++r) {
                if (a(r, c) == 0)
                    continue;
                add_row(a, r, prow, -(a(r, c) / a(prow, c)));
                if (a(r, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (prow >= rows || a(prow, c) == 0)
            continue;
        if (a(prow, c) < 0)
            for (std::size_t k = 0; k < cols; ++k)
                a(prow, k) = -a(prow, k);
        for (std::size_t r = 0; r < prow; ++r) {
            Integer q = a(r, c) / a(prow, c);
            if (a(r, c) - q * a(prow, c) < 0)
                q -= 1;
            if (q != 0)
                add_row(a, r, prow, -q);
        }
        ++prow;
    }
    IntMatrix out(prow, cols);
    for (std::size_t r = 0; r < prow; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out(r, c) = a(r, c);
    return out;
}

std::vector<IntVector> saturate(const std::vector<IntVector>& sublattice)
{
    if (sublattice.empty())
        return {};
    const std::size_t n = sublattice.front().size();
    for (const auto& v : sublattice)
        if (v.size() != n)
            throw DimensionError("saturate: vectors of unequal length");
    const IntMatrix a = IntMatrix::from_columns(sublattice, n);
    const SmithForm snf = smith_normal_form(a);
    if (snf.rank == 0)
        return {};
    const IntMatrix uinv = inverse_unimodular(snf.u);
    IntMatrix span(snf.rank, n);
    for (std::size_t k = 0; k < snf.rank; ++k)
        for (std::size_t r = 0; r < n; ++r)
            span(k, r) = uinv(r, k);
    const IntMatrix h = hermite_normal_form(span);
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < h.rows(); ++r)
        out.push_back(h.row(r));
    return out;
}

Integer lattice_index(const std::vector<IntVector>& generators, std::size_t ambient)
{
    if (generators.empty())
        return ambient == 0 ? 1 : 0;
    const SmithForm snf = smith_normal_form(IntMatrix::from_columns(generators, ambient));
    if (snf.rank < ambient)
        return 0;
    Integer idx = 1;
    for (std::size_t i = 0; i < ambient; ++i)
        idx *= snf.d(i, i);
    return idx;
}

Integer content(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, abs(x));
    return g;
}

bool is_primitive(const IntVector& v)
{
    return content(v) == 1;
}

std::string to_string(const Rational& q)
{
    return q.str();
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::optional<IntMatrix> find_unimodular_intertwiner(
    const std::vector<std::pair<IntMatrix, IntMatrix>>& pairs, int coefficient_bound)
{
    if (pairs.empty())
        return std::nullopt;
    const std::size_t n = pairs.front().first.rows();
    // Unknown X(i,l) lives at index i*n + l.
    RatMatrix eq(pairs.size() * n * n, n * n);
    std::size_t row = 0;
    for (const auto& [a, b] : pairs) {
        if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
            throw DimensionError("intertwiner: matrices must share a square size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t l = 0; l < n; ++l) {
                    eq(row, i * n + l) += Rational(a(l, j));
                    eq(row, l * n + j) -= Rational(b(i, l));
                }
            }
    }
    std::vector<IntVector> integral;
    for (const auto& v : kernel_basis(eq)) {
        Integer den = 1;
        for (const auto& x : v)
            den = lcm(den, denominator(x));
        IntVector w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            w[k] = numerator(Rational(v[k] * den));
        integral.push_back(std::move(w));
    }
    const auto basis = saturate(integral);
    const std::size_t d = basis.size();
    if (d == 0)
        return std::nullopt;

    std::vector<std::vector<int>> candidates;
    std::vector<int> coef(d, -coefficient_bound);
    for (;;) {
        candidates.push_back(coef);
        std::size_t k = 0;
        while (k < d && coef[k] == coefficient_bound)
            coef[k++] = -coefficient_bound;
        if (k == d)
            break;
        ++coef[k];
    }
    auto l1 = [](const std::vector<int>& c) {
        int s = 0;
        for (int x : c)
            s += x < 0 ? -x : x;
        return s;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const auto& a, const auto& b) { return l1(a) < l1(b); });
    for (const auto& c : candidates) {
        IntMatrix x(n, n);
        for (std::size_t k = 0; k < d; ++k)
            if (c[k] != 0)
                for (std::size_t e = 0; e < n * n; ++e)
                    x(e / n, e % n) += c[k] * basis[k][e];
        const Integer det = determinant(x);
        if (det == 1 || det == -1)
            return x;
    }
    return std::nullopt;
}

}  // namespace syz
