#include "weylwit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylwit {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows_)
            throw std::invalid_argument("ragged columns");
        for (int i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vec& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussRational& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    Matrix m(*this);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& v : m.e_) v = -v;
    return m;
}

Matrix Matrix::scaled(const GaussRational& s) const {
    Matrix m(*this);
    for (auto& v : m.e_) v *= s;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
    Vec out(rows_, GaussRational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::pow(long e) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    Matrix base = e >= 0 ? *this : inverse(*this);
    long n = e >= 0 ? e : -e;
    Matrix acc = identity(rows_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const GaussRational& v) { return v.is_zero(); });
}

namespace {

/* Multiply each row by the lcm of its entry denominators so that every
 * entry becomes a Gaussian integer; returns the row scale factors. */
std::vector<Rational> clear_denominators(Matrix& m) {
    std::vector<Rational> scales;
    scales.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const GaussRational& v = m.at(i, j);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re.get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im.get_den().get_mpz_t());
        }
        Rational s(l);
        for (int j = 0; j < m.cols(); ++j) {
            m.at(i, j).re *= s;
            m.at(i, j).im *= s;
        }
        scales.push_back(s);
    }
    return scales;
}

struct BareissResult {
    int rank = 0;
    GaussRational det_cleared; /* determinant of the cleared matrix (square case) */
    int sign = 1;
};

BareissResult bareiss(Matrix m) {
    clear_denominators(m); /* scales only matter for det; handled by caller */
    BareissResult res;
    GaussRational prev(1);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
            res.sign = -res.sign;
        }
        for (int i = r + 1; i < m.rows(); ++i) {
            for (int j = c + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = GaussRational(0);
        }
        prev = m.at(r, c);
        ++r;
    }
    res.rank = r;
    res.det_cleared = (r == m.rows() && m.rows() == m.cols())
                          ? prev
                          : GaussRational(0);
    return res;
}

}  // namespace

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m).rank;
}

GaussRational det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return GaussRational(1);
    Matrix cleared(m);
    auto scales = clear_denominators(cleared);
    auto res = bareiss(cleared);
    if (res.rank < m.rows()) return GaussRational(0);
    GaussRational d = res.det_cleared;
    if (res.sign < 0) d = -d;
    for (const auto& s : scales) d /= GaussRational(s);
    return d;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve dimension mismatch");
    int n = a.rows();
    Matrix m(a), rhs(b);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix in solve");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(piv, j), rhs.at(c, j));
        }
        GaussRational inv = m.at(c, c).inv();
        for (int j = 0; j < n; ++j) m.at(c, j) *= inv;
        for (int j = 0; j < rhs.cols(); ++j) rhs.at(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            GaussRational f = m.at(i, c);
            for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
            for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) -= f * rhs.at(c, j);
        }
    }
    return rhs;
}

Matrix inverse(const Matrix& m) { return solve(m, Matrix::identity(m.rows())); }

Matrix kernel_basis(const Matrix& m) {
    Matrix r(m);
    int n = m.cols();
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < n && row < r.rows(); ++c) {
        int piv = -1;
        for (int i = row; i < r.rows(); ++i)
            if (!r.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(row, j));
        GaussRational inv = r.at(row, c).inv();
        for (int j = 0; j < n; ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, c).is_zero()) continue;
            GaussRational f = r.at(i, c);
            for (int j = 0; j < n; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<Vec> cols;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, GaussRational(0));
        v[c] = GaussRational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(static_cast<int>(i), c);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return Matrix(n, 0);
    return Matrix::from_columns(cols);
}

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    int n = m.rows();
    std::vector<GaussRational> c(n + 1, GaussRational(0));
    c[n] = GaussRational(1);
    Matrix mk = m;
    for (int k = 1; k <= n; ++k) {
        GaussRational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        GaussRational ck = -(tr / GaussRational(k));
        c[n - k] = ck;
        if (k < n) {
            Matrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            mk = m * shifted;
        }
    }
    return Poly(std::move(c));
}

std::vector<int> jordan_partition(const Matrix& m, const GaussRational& eigenvalue) {
    if (!m.is_square()) throw std::invalid_argument("jordan_partition of non-square matrix");
    int n = m.rows();
    Matrix nilp = m;
    for (int i = 0; i < n; ++i) nilp.at(i, i) -= eigenvalue;
    std::vector<int> ranks{n};
    Matrix p = Matrix::identity(n);
    for (int j = 1; j <= n; ++j) {
        p = p * nilp;
        int r = rank(p);
        ranks.push_back(r);
        if (r == ranks[j - 1]) break;
    }
    /* blocks of size >= j on the generalized eigenspace: rank(N^{j-1}) - rank(N^j) */
    std::vector<int> at_least;
    for (size_t j = 1; j < ranks.size(); ++j) at_least.push_back(ranks[j - 1] - ranks[j]);
    std::vector<int> part;
    for (size_t j = 0; j < at_least.size(); ++j) {
        int exact = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
        for (int t = 0; t < exact; ++t) part.push_back(static_cast<int>(j) + 1);
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

GaussRational form_value(const Matrix& gram, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != gram.rows() || static_cast<int>(y.size()) != gram.cols())
        throw std::invalid_argument("form dimension mismatch");
    GaussRational acc(0);
    for (int i = 0; i < gram.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < gram.cols(); ++j)
            if (!gram.at(i, j).is_zero()) acc += x[i] * gram.at(i, j) * y[j];
    }
    return acc;
}

Vec scaled(const Vec& v, const GaussRational& s) {
    Vec out(v);
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace weylwit
