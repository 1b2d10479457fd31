#include "weylwit/twisted_models.hpp"

#include <cstdlib>
#include <stdexcept>

namespace weylwit {

std::vector<BigInt> even_dual_x(int p, int len) {
    if (p < 1) throw std::invalid_argument("need p >= 1");
    /* series of (1+S)^(-2p), then multiply by (1-S) */
    std::vector<BigInt> inv = x_coeffs(n_coeffs(0, 2 * p), 1, len);
    std::vector<BigInt> x(len, 0);
    for (int k = 0; k < len; ++k) {
        x[k] = inv[k];
        if (k >= 1) x[k] -= inv[k - 1];
    }
    return x;
}

BigInt phi_value(int p, long h) {
    if (h % 2 == 0) throw std::invalid_argument("profile needs an odd offset");
    long ah = std::labs(h);
    if (ah <= 2 * p - 3) return 0;
    int u = static_cast<int>((ah - 2 * p + 1) / 2);
    return even_dual_x(p, u + 1)[u];
}

BigInt dual_x_value(int a, int b, long h) {
    if (h % 2 == 0) throw std::invalid_argument("profile needs an odd offset");
    int p = (a + b + 1) / 2;
    long ah = std::labs(h);
    if (ah < 2 * p - 1) return 0;
    int idx = static_cast<int>((ah - 2 * p + 1) / 2);
    return x_coeffs(n_coeffs(a, b), 1, idx + 1)[idx];
}

Matrix star_square(const Matrix& form) {
    return inverse(form.transpose()) * form;
}

GaussRational twisted_pair(const Matrix& form, const Vec& z, const Vec& zp, long d) {
    if (d % 2 == 0) throw std::invalid_argument("pairing needs an odd offset");
    Vec x = star_square(form).pow((d + 1) / 2).apply(z);
    Vec phi = form.apply(zp);
    GaussRational v(0);
    for (size_t i = 0; i < x.size(); ++i) v += phi[i] * x[i];
    return v;
}

namespace {

Vec unit_vector(int dim, int i) {
    Vec v(dim, GaussRational(0));
    v[i] = GaussRational(1);
    return v;
}

/* (h-1)(h-3)...  with `count` factors. */
Rational odd_falling(long h, int count) {
    Rational v(1);
    for (int r = 0; r < count; ++r) v *= Rational(h - 1 - 2 * r);
    return v;
}

int half_sign(long h) { return ((h + 1) / 2) % 2 == 0 ? 1 : -1; }

/* Solve (d, row_h) = rhs[h-index] where row_h are the dual coordinates of the
 * odd-labelled vectors of the block generated by e_0. */
Vec solve_dual_rows(const Matrix& form, const std::vector<GaussRational>& rhs) {
    int m = form.rows();
    Matrix msq = star_square(form);
    Matrix a(m, m);
    Vec cur = unit_vector(m, 0);
    for (int r = 0; r < m; ++r) {
        Vec phi = form.apply(cur); /* dual coords of label 2r+1 */
        for (int j = 0; j < m; ++j) a.at(r, j) = phi[j];
        cur = msq.apply(cur);
    }
    Matrix b(m, 1);
    for (int r = 0; r < m; ++r) b.at(r, 0) = rhs[r];
    return solve(a, b).col(0);
}

Matrix phi_form(int p) {
    int m = 2 * p;
    Matrix f(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            f.at(i, j) = GaussRational(Rational(phi_value(p, 2L * i - 2 * j - 1)));
    return f;
}

}  // namespace

TwistedModel model_single_twisted(int a, int b) {
    if (a < 1 || a % 2 == 0 || b < 0 || b % 2 == 1)
        throw std::invalid_argument("need odd a >= 1 and even b >= 0");
    int m = a + b;
    TwistedModel t;
    t.dim = m;
    t.form = Matrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t.form.at(i, j) = GaussRational(Rational(dual_x_value(a, b, 2L * i - 2 * j - 1)));
    t.lines.push_back(unit_vector(m, 0));
    return t;
}

TwistedModel model_even_twisted(int p) {
    if (p < 1) throw std::invalid_argument("need p >= 1");
    int m = 2 * p;
    TwistedModel t;
    t.dim = m;
    t.form = phi_form(p);

    /* distinguished vector orthogonal to the odd labels 1..4p-3, normalized
     * by partial sums of binomial(2p, .) scaled by 2^(-p) */
    Vec wt(m);
    Rational scale = pow2(-p);
    for (int i = 0; i < m; ++i) {
        BigInt s = 0;
        int lim = (2 * i <= 2 * p - 2) ? i : 2 * p - 1 - i;
        for (int j = 0; j <= lim; ++j) s += binomial(2 * p, j);
        if (2 * i <= 2 * p - 2) s = -s;
        wt[i] = GaussRational(Rational(s) * scale);
    }
    t.tilde.push_back(wt);
    return t;
}

TwistedModel model_paired_even(int p1, int p2) {
    if (p2 < 1 || p1 < p2) throw std::invalid_argument("need p1 >= p2 >= 1");
    int d1 = 2 * p1, d2 = 2 * p2 - 2;
    TwistedModel t;
    t.dim = d1 + d2;
    Matrix f1 = phi_form(p1);
    Matrix f2 = p2 >= 2 ? phi_form(p2 - 1) : Matrix(0, 0);
    t.form = Matrix::block_diag(f1, f2);

    std::vector<GaussRational> rhs1(d1);
    Rational den1 = pow2(2 * p1 - 1) * Rational(factorial(2 * p1 - 1));
    for (int r = 0; r < d1; ++r) {
        long h = 2L * r + 1;
        rhs1[r] = GaussRational(Rational(half_sign(h)) * pow2(p1) * odd_falling(h, 2 * p1 - 1) /
                                den1);
    }
    Vec zt_small = solve_dual_rows(f1, rhs1);
    Vec zt(t.dim, GaussRational(0));
    for (int i = 0; i < d1; ++i) zt[i] = zt_small[i];

    Vec vt(t.dim, GaussRational(0));
    if (p2 >= 2) {
        std::vector<GaussRational> rhs2(d2);
        Rational den2 = pow2(2 * p2 - 3) * Rational(factorial(2 * p2 - 3));
        for (int r = 0; r < d2; ++r) {
            long h = 2L * r + 1;
            rhs2[r] = GaussRational(Rational(half_sign(h)) * pow2(p2 - 1) *
                                    odd_falling(h, 2 * p2 - 3) / den2);
        }
        Vec vt_small = solve_dual_rows(f2, rhs2);
        for (int i = 0; i < d2; ++i) vt[d1 + i] = vt_small[i];
    }

    Vec xi = star_square(t.form).pow(-p2).apply(zt);
    for (int i = 0; i < t.dim; ++i)
        xi[i] = GaussRational(pow2(-p2 + 1)) * (xi[i] + GaussRational::i() * vt[i]);

    t.tilde = {zt, vt, xi};
    t.lines = {unit_vector(t.dim, 0), xi};
    return t;
}

}  // namespace weylwit
