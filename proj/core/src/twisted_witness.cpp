#include "weylwit/twisted_witness.hpp"

#include <sstream>
#include <stdexcept>

namespace weylwit {

namespace {

enum class TwistedRole { single_line, pair_first, pair_second };

TwistedRole role_of(const TwistedBlockSeq& s, int t) {
    if (s.a_at(t) > 0) return TwistedRole::single_line;
    int idx = t - s.k - 1; /* position within the trailing paired region */
    return idx % 2 == 0 ? TwistedRole::pair_first : TwistedRole::pair_second;
}

Rational parity_sign(long k) { return k % 2 != 0 ? Rational(-1) : Rational(1); }

/* (h)(h-2)(h-4)... with `count` factors. */
Rational desc_product(long h, int count) {
    Rational v(1);
    for (int r = 0; r < count; ++r) v *= Rational(h - 2 * r);
    return v;
}

Rational double_factorial(int m) {
    Rational v(1);
    for (int j = m; j >= 2; j -= 2) v *= Rational(j);
    return v;
}

/* Cross value (z^t_i, z^{t+1}_j) at offset d = i - j for a linked pair with
 * half-sizes P = p_t, q = p_{t+1}. */
GaussRational pair_cross_value(int big_p, int small_p, long d) {
    Rational v = pow2(big_p - small_p + 1) *
                 desc_product(d + 2 * small_p - 1, 2 * big_p - 1) /
                 double_factorial(4 * big_p - 2);
    v *= parity_sign((d + 2 * small_p + 1) / 2);
    return GaussRational(v);
}

/* Precomputed pairing values (L^t_i, L^r_j) at offsets d = i - j with
 * |d| <= 2*radius + 1. */
class TwistedTable {
  public:
    TwistedTable(const Matrix& form, const std::vector<Vec>& lines, int radius)
        : radius_(radius) {
        Matrix m = star_square(form);
        Matrix minv = inverse(m);
        shifts_.resize(lines.size());
        duals_.reserve(lines.size());
        for (size_t t = 0; t < lines.size(); ++t) {
            duals_.push_back(form.apply(lines[t]));
            auto& sh = shifts_[t];
            sh.assign(2 * radius + 1, Vec());
            sh[radius] = lines[t];
            for (int s = 1; s <= radius; ++s) {
                sh[radius + s] = m.apply(sh[radius + s - 1]);
                sh[radius - s] = minv.apply(sh[radius - s + 1]);
            }
        }
    }

    GaussRational val(int t, int r, long d) const {
        long s = (d + 1) / 2;
        if (s < -radius_ || s > radius_) throw std::logic_error("offset beyond table radius");
        const Vec& x = shifts_[t - 1][radius_ + s];
        const Vec& phi = duals_[r - 1];
        GaussRational v(0);
        for (size_t i = 0; i < x.size(); ++i) v += phi[i] * x[i];
        return v;
    }

  private:
    int radius_;
    std::vector<std::vector<Vec>> shifts_;
    std::vector<Vec> duals_;
};

void embed(Vec& target, const Vec& src, int offset) {
    for (size_t i = 0; i < src.size(); ++i) target[offset + i] = src[i];
}

struct Fragment {
    Matrix form{0, 0};
    std::vector<Vec> lines;
};

Fragment combine(const Fragment& head, const Fragment& tail) {
    Fragment out;
    out.form = Matrix::block_diag(head.form, tail.form);
    int n = out.form.rows();
    int hn = head.form.rows();
    for (const Vec& z : head.lines) {
        Vec v(n, GaussRational(0));
        embed(v, z, 0);
        out.lines.push_back(v);
    }
    for (const Vec& z : tail.lines) {
        Vec v(n, GaussRational(0));
        embed(v, z, hn);
        out.lines.push_back(v);
    }
    return out;
}

Fragment build_fragment(std::vector<int> a, std::vector<int> b) {
    auto head_a = [](std::vector<int>& v) {
        int h = v.empty() ? 0 : v.front();
        if (!v.empty()) v.erase(v.begin());
        return h;
    };
    int a1 = a.empty() ? 0 : a.front();
    int b1 = b.empty() ? 0 : b.front();
    if (a1 == 0 && b1 == 0) return Fragment{};
    if (a1 >= 1) {
        head_a(a);
        head_a(b);
        TwistedModel m = model_single_twisted(a1, b1);
        Fragment head{m.form, m.lines};
        return combine(head, build_fragment(std::move(a), std::move(b)));
    }
    int b2 = b.size() >= 2 ? b[1] : 0;
    head_a(b);
    head_a(b);
    TwistedModel m = model_paired_even(b1 / 2, (b2 + 2) / 2);
    Fragment head{m.form, m.lines};
    return combine(head, build_fragment(std::move(a), std::move(b)));
}

std::vector<int> positives(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v)
        if (x > 0) out.push_back(x);
    return out;
}

}  // namespace

Matrix star_power(const Matrix& form, int i) {
    if (i % 2 == 0) return star_square(form).pow(i / 2);
    return form * star_square(form).pow((i - 1) / 2);
}

TwistedWitness build_twisted(const TwistedBlockSeq& seq) {
    TwistedWitness w;
    w.seq = seq;
    Fragment f = build_fragment(seq.a, seq.b);
    w.form = f.form;
    w.lines = f.lines;
    return w;
}

GaussRational expected_twisted_pairing(const TwistedBlockSeq& seq, int t, int r, long d) {
    if (d % 2 == 0) throw std::invalid_argument("pairing needs an odd offset");
    if (t < 1 || t > seq.sigma || r < 1 || r > seq.sigma)
        throw std::invalid_argument("line index out of range");
    if (t > r) return expected_twisted_pairing(seq, r, t, -d);
    if (t == r) {
        switch (role_of(seq, t)) {
            case TwistedRole::single_line:
                return GaussRational(Rational(dual_x_value(seq.a_at(t), seq.b_at(t), d)));
            case TwistedRole::pair_first:
                return GaussRational(Rational(phi_value(seq.p_at(t), d)));
            case TwistedRole::pair_second: {
                Rational v(0);
                for (int m = seq.p_at(t); m <= seq.p_at(t - 1); ++m)
                    v += pow2(2 * m - 2 * seq.p_at(t)) * Rational(phi_value(m, d));
                return GaussRational(v);
            }
        }
    }
    if (r == t + 1 && role_of(seq, t) == TwistedRole::pair_first)
        return pair_cross_value(seq.p_at(t), seq.p_at(t + 1), d);
    return GaussRational(0);
}

ValidationReport validate_twisted(const TwistedWitness& w) {
    ValidationReport rep;
    const TwistedBlockSeq& s = w.seq;
    int n = s.n;
    auto fail = [&rep](const std::string& cond, int t = 0, int r = 0, int u = 0) {
        rep.issues.push_back(ValidationIssue{cond, t, r, u});
    };
    if (w.form.rows() != n || w.form.cols() != n) {
        fail("form has wrong shape");
        return rep;
    }
    if (static_cast<int>(w.lines.size()) != s.sigma) {
        fail("wrong number of lines");
        return rep;
    }
    if (n == 0) return rep;
    if (det(w.form).is_zero()) {
        fail("form is singular");
        return rep;
    }
    for (int t = 1; t <= s.sigma; ++t) {
        if (static_cast<int>(w.lines[t - 1].size()) != n) {
            fail("line has wrong dimension", t);
            return rep;
        }
        bool zero = true;
        for (const auto& c : w.lines[t - 1]) zero = zero && c.is_zero();
        if (zero) {
            fail("line generator is zero", t);
            return rep;
        }
    }

    Matrix m = star_square(w.form);
    std::vector<int> ja = jordan_partition(m, GaussRational(1));
    std::vector<int> jb = jordan_partition(m, GaussRational(Rational(-1)));
    if (ja != positives(s.a)) fail("wrong block structure at the fixed eigenvalue");
    if (jb != positives(s.b)) fail("wrong block structure at the flipped eigenvalue");
    {
        int total = 0;
        for (int x : ja) total += x;
        for (int x : jb) total += x;
        if (total != n) fail("squared power has extra eigenvalues");
    }
    if (!rep.ok()) return rep;

    int p1 = s.p_at(1);
    TwistedTable tab(w.form, w.lines, 2 * p1 + 1);
    for (int t = 1; t <= s.sigma; ++t) {
        int pt = s.p_at(t);
        for (long d = -2 * pt + 3; d <= 2 * pt - 3; d += 2)
            if (!tab.val(t, t, d).is_zero()) fail("nonzero pairing inside the gap window", t, t, d);
        if (tab.val(t, t, 2 * pt - 1).is_zero())
            fail("vanishing pairing at the anchor offset", t, t, 2 * pt - 1);
        if (tab.val(t, t, -(2 * pt - 1)).is_zero())
            fail("vanishing pairing at the anchor offset", t, t, -(2 * pt - 1));
    }
    for (int t = 1; t <= s.sigma; ++t)
        for (int r = t + 1; r <= s.sigma; ++r) {
            int pt = s.p_at(t), pr = s.p_at(r);
            for (long d = -(4 * pt - 2 * pr - 3); d <= 2 * pr - 1; d += 2)
                if (!tab.val(r, t, d).is_zero())
                    fail("nonzero pairing inside the cross window", r, t, d);
        }

    {
        Matrix b(n, n);
        int c = 0;
        for (int t = 1; t <= s.sigma; ++t) {
            Vec v = w.lines[t - 1];
            for (int i = 0; i < 2 * s.p_at(t) - 1; ++i) {
                b.set_col(c++, v);
                if (i + 1 < 2 * s.p_at(t) - 1) v = m.apply(v);
            }
        }
        if (rank(b) != n) fail("shifted line vectors do not span the space");
    }
    return rep;
}

TwistedWitness normalize_twisted(const TwistedWitness& w) {
    ValidationReport rep = validate_twisted(w);
    if (!rep.ok()) throw std::invalid_argument("cannot normalize an invalid witness: " + rep.summary());
    const TwistedBlockSeq& s = w.seq;
    TwistedWitness out = w;
    out.normalized = w.lines;
    if (s.n == 0) return out;

    int p1 = s.p_at(1);
    {
        TwistedTable tab(w.form, out.normalized, 2 * p1 + 1);
        for (int t = 1; t <= s.sigma; ++t) {
            GaussRational cur = tab.val(t, t, 2 * s.p_at(t) - 1);
            auto lam = gauss_sqrt(cur.inv());
            if (!lam) throw std::logic_error("pairing table not reachable by rescaling");
            out.normalized[t - 1] = scaled(out.normalized[t - 1], *lam);
        }
    }
    {
        TwistedTable tab(w.form, out.normalized, 2 * p1 + 1);
        for (int t = 1; t <= s.sigma; ++t) {
            if (role_of(s, t) != TwistedRole::pair_first) continue;
            int bp = s.p_at(t), sp = s.p_at(t + 1);
            long anchor = 4 * bp - 2 * sp - 1;
            GaussRational cur = tab.val(t, t + 1, anchor);
            GaussRational target = pair_cross_value(bp, sp, anchor);
            if (cur == -target)
                out.normalized[t] = scaled(out.normalized[t], GaussRational(Rational(-1)));
            else if (cur != target)
                throw std::logic_error("pairing table not reachable by rescaling");
        }
    }
    {
        int radius = s.n + 2;
        TwistedTable tab(w.form, out.normalized, radius);
        for (int t = 1; t <= s.sigma; ++t)
            for (int r = 1; r <= s.sigma; ++r)
                for (long d = -(2 * radius - 1); d <= 2 * radius - 1; d += 2)
                    if (tab.val(t, r, d) != expected_twisted_pairing(s, t, r, d))
                        throw std::logic_error("pairing table not reachable by rescaling");
    }
    return out;
}

Matrix twisted_chain_basis(const TwistedWitness& w) {
    const TwistedBlockSeq& s = w.seq;
    const std::vector<Vec>& z = w.is_normalized() ? w.normalized : w.lines;
    Matrix m = star_square(w.form);
    Matrix b(s.n, s.n);
    int c = 0;
    for (int t = 1; t <= s.sigma; ++t) {
        Vec v = z[t - 1];
        for (int i = 0; i < 2 * s.p_at(t) - 1; ++i) {
            b.set_col(c++, v);
            if (i + 1 < 2 * s.p_at(t) - 1) v = m.apply(v);
        }
    }
    return b;
}

Matrix transport_twisted(const TwistedWitness& w1, const TwistedWitness& w2) {
    if (w1.seq.a != w2.seq.a || w1.seq.b != w2.seq.b)
        throw std::invalid_argument("transport needs matching sequences");
    if (!w1.is_normalized() || !w2.is_normalized())
        throw std::invalid_argument("transport needs normalized witnesses");
    if (w1.seq.n == 0) return Matrix(0, 0);
    return twisted_chain_basis(w2) * inverse(twisted_chain_basis(w1));
}

Matrix twisted_sign_element_matrix(const TwistedWitness& w, const std::vector<int>& omegas) {
    const TwistedBlockSeq& s = w.seq;
    if (static_cast<int>(omegas.size()) != s.sigma)
        throw std::invalid_argument("sign vector length mismatch");
    for (int v : omegas)
        if (v != 1 && v != -1) throw std::invalid_argument("sign entries must be +-1");
    if (s.n == 0) return Matrix(0, 0);
    Matrix b = twisted_chain_basis(w);
    Matrix scaled_b = b;
    int c = 0;
    for (int t = 1; t <= s.sigma; ++t)
        for (int i = 0; i < 2 * s.p_at(t) - 1; ++i, ++c)
            if (omegas[t - 1] == -1) scaled_b.set_col(c, scaled(b.col(c), GaussRational(Rational(-1))));
    return scaled_b * inverse(b);
}

IsotropyGroup isotropy_twisted(const TwistedWitness& w) {
    IsotropyGroup gr;
    gr.shape = sign_group(w.seq);
    int nl = gr.shape.size;
    std::vector<int> comp(nl);
    for (int i = 0; i < nl; ++i) comp[i] = i;
    for (auto [s, t] : gr.shape.linked_pairs) comp[t - 1] = comp[s - 1];
    std::vector<int> reps;
    std::vector<int> rep_pos(nl, -1);
    for (int i = 0; i < nl; ++i)
        if (comp[i] == i) {
            rep_pos[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    int fr = static_cast<int>(reps.size());
    for (long mask = 0; mask < (1L << fr); ++mask) {
        std::vector<int> om(nl, 1);
        for (int i = 0; i < nl; ++i)
            if ((mask >> rep_pos[comp[i]]) & 1) om[i] = -1;
        gr.elements.push_back(om);
        gr.matrices.push_back(twisted_sign_element_matrix(w, om));
    }
    return gr;
}

SlRefinement sl_refinement(const TwistedWitness& w) {
    SlRefinement out;
    const TwistedBlockSeq& s = w.seq;
    if (s.n == 0) {
        out.det_ok = true;
        return out;
    }
    out.det_ok = det(star_square(w.form)) == GaussRational(1);
    if (s.a_at(1) > 0) {
        out.class_count = 1;
        std::vector<int> om(s.sigma, 1);
        om[0] = -1;
        out.flip = twisted_sign_element_matrix(w, om);
        out.has_flip = true;
    } else {
        out.class_count = 2;
    }
    return out;
}

TwistedWitness special_rescale(const TwistedWitness& w) {
    int n = w.seq.n;
    if (n == 0) return w;
    GaussRational d = det(w.form);
    if (d.im != 0) throw std::domain_error("non-real form determinant");
    Rational target = Rational(1) / d.re;
    const GaussRational units[] = {GaussRational(1), GaussRational::i(),
                                   GaussRational(1) + GaussRational::i()};
    for (const GaussRational& u : units) {
        GaussRational un = u.pow(n);
        if (un.im != 0) continue;
        auto r = rational_nth_root(target / un.re, n);
        if (!r) continue;
        GaussRational c = GaussRational(*r) * u;
        TwistedWitness out = w;
        out.form = w.form.scaled(c);
        out.normalized.clear();
        return out;
    }
    throw std::domain_error("no scalar rescale reaches the special form");
}

int sl_class_label(const TwistedWitness& w) {
    if (w.seq.a_at(1) > 0) return 0;
    if (w.seq.n == 0) return 0;
    TwistedWitness ref = normalize_twisted(build_twisted(w.seq));
    if (det(w.form) != det(ref.form))
        throw std::invalid_argument("class label needs a form with the canonical determinant");
    TwistedWitness wn = w.is_normalized() ? w : normalize_twisted(w);
    GaussRational dg = det(transport_twisted(ref, wn));
    if (dg == GaussRational(1)) return 0;
    if (dg == GaussRational(Rational(-1))) return 1;
    throw std::logic_error("transport determinant is not a sign");
}

}  // namespace weylwit
