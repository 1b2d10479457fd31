#include "weylwit/iso_models.hpp"

#include <stdexcept>

namespace weylwit {

std::vector<BigInt> n_coeffs(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigInt> c{1};
    auto mul = [&c](const BigInt& root_coef) {
        /* multiply by (1 + root_coef*T) */
        std::vector<BigInt> out(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            out[i] += c[i];
            out[i + 1] += root_coef * c[i];
        }
        c = std::move(out);
    };
    for (int i = 0; i < a; ++i) mul(-1);
    for (int i = 0; i < b; ++i) mul(1);
    return c;
}

std::vector<BigInt> x_coeffs(const std::vector<BigInt>& n, const BigInt& x0, int len) {
    if (n.empty() || (n[0] != 1 && n[0] != -1))
        throw std::invalid_argument("leading n-coefficient must be a unit");
    std::vector<BigInt> x;
    x.reserve(len);
    if (len > 0) x.push_back(x0);
    for (int e = 1; e < len; ++e) {
        BigInt s = 0;
        for (int j = 1; j <= e && j < static_cast<int>(n.size()); ++j) s += n[j] * x[e - j];
        x.push_back(n[0] == 1 ? -s : s);
    }
    return x;
}

std::vector<BigInt> odd_x_coeffs(int p, int len) {
    /* series of (1+T)(1-T)^(-2p-1) */
    std::vector<BigInt> inv = x_coeffs(n_coeffs(2 * p + 1, 0), 1, len);
    std::vector<BigInt> x(len, 0);
    for (int e = 0; e < len; ++e) {
        x[e] = inv[e];
        if (e >= 1) x[e] += inv[e - 1];
    }
    if (p == 0 && len > 0) x[0] = 2;
    return x;
}

BigInt f_value(int p, long u) {
    if (p < 0) throw std::invalid_argument("negative p");
    if (p == 0) return 2;
    Rational v(2);
    for (int k = 0; k < p; ++k) v *= Rational(u * u - static_cast<long>(k) * k);
    v /= Rational(factorial(2 * p));
    if (!is_integer(v)) throw std::logic_error("f-value not integral");
    return v.get_num();
}

namespace {

Vec unit_vector(int dim, int i) {
    Vec v(dim, GaussRational(0));
    v[i] = GaussRational(1);
    return v;
}

/* Cyclic isometry on a size-m unipotent block: shift the basis, with the
 * last image expanded via the coefficients of (1-T)^m. */
Matrix unipotent_shift(int m) {
    Matrix g(m, m);
    for (int i = 0; i + 1 < m; ++i) g.at(i + 1, i) = GaussRational(1);
    for (int j = 0; j < m; ++j) {
        BigInt c = binomial(m, j);
        if (j % 2 == 1) c = -c;
        g.at(j, m - 1) = GaussRational(Rational(c));
    }
    return g;
}

/* Gram of an odd block of size 2q+1 with sign (-1)^q. */
Matrix odd_gram(int q) {
    int m = 2 * q + 1;
    Matrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rational v(f_value(q, i - j));
            if (q % 2 == 1) v = -v;
            gram.at(i, j) = GaussRational(v);
        }
    return gram;
}

/* Falling factorial h (h-1) ... (h-(terms-1)). */
Rational falling(long h, int terms) {
    Rational v(1);
    for (int r = 0; r < terms; ++r) v *= Rational(h - r);
    return v;
}

/* Solve for the vector d with (w_h, d) = rhs(h) over the basis range. */
Vec solve_against_rows(const Matrix& gram, const std::vector<GaussRational>& rhs) {
    Matrix b(gram.rows(), 1);
    for (int i = 0; i < gram.rows(); ++i) b.at(i, 0) = rhs[i];
    Matrix sol = solve(gram, b);
    return sol.col(0);
}

}  // namespace

IsoModel model_mixed_block(int a, int b) {
    if (a < 0 || b < 0 || a + b == 0 || (a + b) % 2 != 0 || a % 2 != b % 2)
        throw std::invalid_argument("block sizes must be positive-sum, same parity, even total");
    int p = (a + b) / 2;
    int epsilon = (a % 2 == 1) ? 1 : -1;

    IsoModel m;
    m.dim = 2 * p;
    m.epsilon = epsilon;

    auto n = n_coeffs(a, b);
    auto x = x_coeffs(n, 1, p);
    m.gram = Matrix(2 * p, 2 * p);
    for (int i = 0; i < 2 * p; ++i)
        for (int j = 0; j < 2 * p; ++j) {
            int d = j - i;
            if (d >= p) {
                m.gram.at(i, j) = GaussRational(Rational(x[d - p]));
            } else if (d <= -p) {
                Rational v(x[-d - p]);
                if (epsilon == -1) v = -v;
                m.gram.at(i, j) = GaussRational(v);
            }
        }

    m.g = Matrix(2 * p, 2 * p);
    for (int i = 0; i + 1 < 2 * p; ++i) m.g.at(i + 1, i) = GaussRational(1);
    for (int i = 0; i < 2 * p; ++i) {
        Rational v(n[i]);
        if (epsilon == -1) v = -v;
        m.g.at(i, 2 * p - 1) = GaussRational(v);
    }

    m.lines.push_back(unit_vector(2 * p, 0));
    return m;
}

IsoModel model_odd_block(int p) {
    if (p < 0) throw std::invalid_argument("negative p");
    int dim = 2 * p + 1;
    IsoModel m;
    m.dim = dim;
    m.epsilon = 1;
    m.gram = odd_gram(p);
    m.g = unipotent_shift(dim);

    /* Distinguished vector: partial sums of binomial(2p+1, .) with
     * alternating signs, scaled by 2^(-p). */
    Vec wt(dim);
    std::vector<BigInt> l(dim + 1);
    for (int j = 0; j <= dim; ++j) l[j] = binomial(dim, j);
    Rational scale = pow2(-p);
    for (int i = 0; i < dim; ++i) {
        BigInt s = 0;
        if (i < p) {
            for (int j = 0; j <= i; ++j) s += l[j];
            if (i % 2 == 0) s = -s; /* sign (-1)^(i-1) */
        } else {
            for (int j = 0; j <= 2 * p - i; ++j) s += l[j];
            if (i % 2 == 1) s = -s; /* sign (-1)^i */
        }
        wt[i] = GaussRational(Rational(s) * scale);
    }
    m.tilde.push_back(wt);
    if (p >= 1) m.lines.push_back(unit_vector(dim, 0));
    m.lines.push_back(wt);
    return m;
}

IsoModel model_paired_odd_blocks(int p1, int p2) {
    if (p2 < 1 || p1 < p2) throw std::invalid_argument("need p1 >= p2 >= 1");
    int d1 = 2 * p1 + 1, d2 = 2 * p2 - 1;
    IsoModel m;
    m.dim = d1 + d2;
    m.epsilon = 1;
    m.gram = Matrix::block_diag(odd_gram(p1), odd_gram(p2 - 1));
    m.g = Matrix::block_diag(unipotent_shift(d1), unipotent_shift(d2));

    /* Distinguished vector of the big block: orthogonal to z_0..z_{2p1-1},
     * pairing 2^(p1+1) against z_{2p1}. */
    std::vector<GaussRational> rhs1(d1);
    for (int h = 0; h < d1; ++h)
        rhs1[h] = GaussRational(pow2(p1 + 1) * falling(h, 2 * p1) / Rational(factorial(2 * p1)));
    Vec zt_small = solve_against_rows(odd_gram(p1), rhs1);
    Vec zt(m.dim, GaussRational(0));
    for (int i = 0; i < d1; ++i) zt[i] = zt_small[i];

    std::vector<GaussRational> rhs2(d2);
    for (int h = 0; h < d2; ++h)
        rhs2[h] =
            GaussRational(pow2(p2) * falling(h, 2 * p2 - 2) / Rational(factorial(2 * p2 - 2)));
    Vec vt_small = solve_against_rows(odd_gram(p2 - 1), rhs2);
    Vec vt(m.dim, GaussRational(0));
    for (int i = 0; i < d2; ++i) vt[d1 + i] = vt_small[i];

    Vec xi = m.g.pow(-p2).apply(zt);
    for (int i = 0; i < m.dim; ++i)
        xi[i] = GaussRational(pow2(-p2)) * (xi[i] + GaussRational::i() * vt[i]);

    m.tilde = {zt, vt, xi};
    m.lines = {unit_vector(m.dim, 0), xi};
    return m;
}

std::vector<GaussRational> pairing_profile(const IsoModel& m, int t, int tp, int lo, int hi) {
    if (t < 1 || tp < 1 || t > static_cast<int>(m.lines.size()) ||
        tp > static_cast<int>(m.lines.size()))
        throw std::invalid_argument("line index out of range");
    if (lo > hi) throw std::invalid_argument("empty range");
    const Vec& z = m.lines[t - 1];
    const Vec& zp = m.lines[tp - 1];
    std::vector<GaussRational> out;
    out.reserve(hi - lo + 1);
    Matrix shifted = m.g.pow(lo);
    Vec cur = shifted.apply(z);
    for (int u = lo;; ++u) {
        out.push_back(form_value(m.gram, cur, zp));
        if (u == hi) break;
        cur = m.g.apply(cur);
    }
    return out;
}

}  // namespace weylwit
