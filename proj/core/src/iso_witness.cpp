#include "weylwit/iso_witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylwit {

namespace {

int line_count(const IsoBlockSeq& seq) { return seq.sigma + seq.kappa; }

/* p_t with the convention p_t = 0 for the half-line. */
int line_p(const IsoBlockSeq& seq, int t) { return t <= seq.sigma ? seq.p_at(t) : 0; }

enum class LineRole { mixed, pair_first, pair_second, single };

LineRole role_of(const IsoBlockSeq& seq, int t) {
    if (seq.epsilon == -1 || t <= seq.k) return LineRole::mixed;
    int tail = line_count(seq) - seq.k;
    int idx = t - seq.k - 1; /* 0-based within the tail */
    if (idx == tail - 1 && tail % 2 == 1) return LineRole::single;
    return idx % 2 == 0 ? LineRole::pair_first : LineRole::pair_second;
}

Vec embed(const Vec& v, int offset, int dim) {
    Vec out(dim, GaussRational(0));
    for (size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

std::vector<int> drop_front(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) <= n) return {};
    return std::vector<int>(v.begin() + n, v.end());
}

/* All pairings (g^u z^t, z^r) for |u| <= radius, precomputed by repeated
 * application of g and g^-1. */
class ShiftTable {
  public:
    ShiftTable(const Matrix& g, const Matrix& gram, const std::vector<Vec>& z, int radius)
        : gram_(gram), z_(z), radius_(radius) {
        Matrix g_inv = inverse(g);
        shifted_.resize(z.size());
        for (size_t t = 0; t < z.size(); ++t) {
            auto& row = shifted_[t];
            row.assign(2 * radius + 1, Vec{});
            row[radius] = z[t];
            for (int u = 1; u <= radius; ++u) {
                row[radius + u] = g.apply(row[radius + u - 1]);
                row[radius - u] = g_inv.apply(row[radius - u + 1]);
            }
        }
    }

    /* (z^t_i, z^r_j) at offset u = i - j; 1-based line indices. */
    GaussRational val(int t, int r, int u) const {
        return form_value(gram_, shifted_[t - 1][radius_ + u], z_[r - 1]);
    }

    int radius() const { return radius_; }

  private:
    const Matrix& gram_;
    const std::vector<Vec>& z_;
    int radius_;
    std::vector<std::vector<Vec>> shifted_;
};

Matrix chain_from(const IsoBlockSeq& seq, const Matrix& g, const std::vector<Vec>& z) {
    Matrix b(seq.dim, seq.dim);
    int c = 0;
    for (int t = 1; t <= line_count(seq); ++t) {
        int cnt = seq.two_p_prime[t - 1] == 1 ? 1 : seq.two_p_prime[t - 1];
        Vec v = z[t - 1];
        for (int i = 0; i < cnt; ++i) {
            b.set_col(c++, v);
            if (i + 1 < cnt) v = g.apply(v);
        }
    }
    if (c != seq.dim) throw std::logic_error("chain column count mismatch");
    return b;
}

int sign_pow(int s, int u) { return u % 2 == 0 ? 1 : s; }

}  // namespace

std::string ValidationReport::summary() const {
    if (issues.empty()) return "ok";
    std::string s;
    for (const auto& i : issues) {
        if (!s.empty()) s += "; ";
        s += i.condition;
        if (i.t != 0 || i.r != 0 || i.u != 0)
            s += " (t=" + std::to_string(i.t) + ", r=" + std::to_string(i.r) +
                 ", u=" + std::to_string(i.u) + ")";
    }
    return s;
}

int line_delta(const IsoBlockSeq& seq, int t) {
    if (t < 1 || t > line_count(seq)) throw std::invalid_argument("line index out of range");
    return seq.a_at(t) > 0 ? 1 : -1;
}

IsoWitness build_iso(const IsoBlockSeq& seq) {
    IsoWitness w;
    w.seq = seq;
    if (seq.dim == 0) {
        w.gram = Matrix(0, 0);
        w.g = Matrix(0, 0);
        return w;
    }
    int a1 = seq.a_at(1), b1 = seq.b_at(1);
    if (seq.epsilon == 1 && a1 == 0) {
        /* All blocks on the -1 side: build the mirrored datum and negate g. */
        IsoWitness f = build_iso(derive_iso(seq.b, seq.a));
        w.gram = f.gram;
        w.g = -f.g;
        w.lines = f.lines;
        return w;
    }
    IsoModel head;
    IsoBlockSeq rest;
    if (seq.epsilon == -1 || b1 > 0) {
        head = model_mixed_block(a1, b1);
        rest = derive_iso(drop_front(seq.a, 1), drop_front(seq.b, 1));
    } else if (seq.a_at(2) > 0) {
        head = model_paired_odd_blocks((a1 - 1) / 2, (seq.a_at(2) + 1) / 2);
        rest = derive_iso(drop_front(seq.a, 2), {});
    } else {
        head = model_odd_block((a1 - 1) / 2);
        rest = derive_iso({}, {});
    }
    IsoWitness tail = build_iso(rest);
    w.gram = Matrix::block_diag(head.gram, tail.gram);
    w.g = Matrix::block_diag(head.g, tail.g);
    for (const Vec& v : head.lines) w.lines.push_back(embed(v, 0, seq.dim));
    for (const Vec& v : tail.lines) w.lines.push_back(embed(v, head.dim, seq.dim));
    return w;
}

ValidationReport validate(const IsoWitness& w) {
    ValidationReport rep;
    const IsoBlockSeq& s = w.seq;
    int nl = line_count(s);
    auto issue = [&rep](const std::string& c, int t = 0, int r = 0, int u = 0) {
        rep.issues.push_back({c, t, r, u});
    };

    if (w.gram.rows() != s.dim || w.gram.cols() != s.dim) {
        issue("form shape");
        return rep;
    }
    if (w.g.rows() != s.dim || w.g.cols() != s.dim) {
        issue("isometry shape");
        return rep;
    }
    if (static_cast<int>(w.lines.size()) != nl) {
        issue("line count");
        return rep;
    }
    if (s.dim == 0) return rep;

    if (w.gram.transpose() != w.gram.scaled(GaussRational(s.epsilon))) issue("form symmetry");
    bool nondeg = rank(w.gram) == s.dim;
    if (!nondeg) issue("nondegenerate form");
    bool isom = (w.g.transpose() * w.gram * w.g) == w.gram;
    if (!isom) issue("isometry");

    std::vector<int> pos_a, pos_b;
    for (int v : s.a)
        if (v > 0) pos_a.push_back(v);
    for (int v : s.b)
        if (v > 0) pos_b.push_back(v);
    if (jordan_partition(w.g, GaussRational(1)) != pos_a) issue("unipotent part at +1");
    if (jordan_partition(w.g, GaussRational(-1)) != pos_b) issue("unipotent part at -1");

    for (int t = 1; t <= nl; ++t) {
        bool zero = true;
        for (const auto& e : w.lines[t - 1])
            if (!e.is_zero()) zero = false;
        if (zero || static_cast<int>(w.lines[t - 1].size()) != s.dim) {
            issue("degenerate line", t);
            return rep;
        }
    }
    if (!nondeg || !isom) return rep;

    int radius = 2 * s.p_at(1) + 1;
    ShiftTable tab(w.g, w.gram, w.lines, radius);
    for (int t = 1; t <= nl; ++t) {
        int pt = line_p(s, t);
        for (int u = -(pt - 1); u <= pt - 1; ++u)
            if (!tab.val(t, t, u).is_zero()) issue("line self-pairing window", t, t, u);
        if (tab.val(t, t, -pt).is_zero()) issue("line self-pairing anchor", t, t, -pt);
        for (int r = t + 1; r <= nl; ++r) {
            int pr = line_p(s, r);
            for (int u = -pr; u <= 2 * pt - pr - 1; ++u)
                if (!tab.val(t, r, u).is_zero()) issue("cross-pairing window", t, r, u);
        }
    }

    if (rank(chain_from(s, w.g, w.lines)) != s.dim) issue("direct sum");
    return rep;
}

GaussRational expected_pairing(const IsoBlockSeq& seq, int t, int r, int u) {
    int nl = line_count(seq);
    if (t < 1 || r < 1 || t > nl || r > nl) throw std::invalid_argument("line index out of range");
    if (t > r)
        return GaussRational(seq.epsilon) * expected_pairing(seq, r, t, -u);
    if (t == r) {
        LineRole role = role_of(seq, t);
        if (role == LineRole::mixed) {
            int a = seq.a_at(t), b = seq.b_at(t), p = (a + b) / 2;
            if (u > -p && u < p) return GaussRational(0);
            auto n = n_coeffs(a, b);
            int idx = (u <= -p ? -u : u) - p;
            auto x = x_coeffs(n, 1, idx + 1);
            Rational v(x[idx]);
            if (u >= p && seq.epsilon == -1) v = -v;
            return GaussRational(v);
        }
        if (role == LineRole::single) {
            int d = line_delta(seq, t);
            return GaussRational(Rational(2 * sign_pow(d, u)));
        }
        if (role == LineRole::pair_first) {
            int p = line_p(seq, t), d = line_delta(seq, t);
            Rational v(f_value(p, u));
            if (p % 2 == 1) v = -v;
            return GaussRational(v * sign_pow(d, u));
        }
        /* second member of a pair */
        int big = line_p(seq, t - 1), q = line_p(seq, t), d = line_delta(seq, t - 1);
        Rational v(0);
        for (int m = q; m <= big; ++m) {
            Rational term = pow2(2 * m - 2 * q) * Rational(f_value(m, u));
            v += (m % 2 == 0) ? term : -term;
        }
        return GaussRational(v * sign_pow(d, u));
    }
    /* t < r: only the designated pair has a nonzero cross table */
    if (r == t + 1 && role_of(seq, t) == LineRole::pair_first) {
        int big = line_p(seq, t), q = line_p(seq, r), d = line_delta(seq, t);
        Rational v = pow2(big - q + 1) * falling_factorial(u + q, 2 * big) /
                     Rational(factorial(2 * big));
        return GaussRational(v * sign_pow(d, u));
    }
    return GaussRational(0);
}

Matrix chain_basis(const IsoWitness& w) {
    return chain_from(w.seq, w.g, w.is_normalized() ? w.normalized : w.lines);
}

IsoWitness normalize(const IsoWitness& w) {
    ValidationReport rep = validate(w);
    if (!rep.ok()) throw std::invalid_argument("witness invalid: " + rep.summary());
    IsoWitness out = w;
    out.normalized = w.lines;
    const IsoBlockSeq& s = w.seq;
    int nl = line_count(s);
    if (s.dim == 0) return out;

    auto raw_val = [&](int t, int r, int u) {
        return form_value(w.gram, w.g.pow(u).apply(out.normalized[t - 1]),
                          out.normalized[r - 1]);
    };
    auto rescale = [&](int t, int u, const GaussRational& target) {
        GaussRational cur = raw_val(t, t, u);
        auto lambda = gauss_sqrt(target / cur);
        if (!lambda) throw std::domain_error("line scale has no Gaussian-rational square root");
        out.normalized[t - 1] = scaled(out.normalized[t - 1], *lambda);
    };

    for (int t = 1; t <= nl; ++t) {
        switch (role_of(s, t)) {
            case LineRole::mixed:
                rescale(t, -line_p(s, t), GaussRational(1));
                break;
            case LineRole::single:
            case LineRole::pair_first:
            case LineRole::pair_second: {
                int anchor = line_p(s, t);
                rescale(t, anchor, expected_pairing(s, t, t, anchor));
                break;
            }
        }
        if (role_of(s, t) == LineRole::pair_second) {
            /* relative sign against the partner line */
            int big = line_p(s, t - 1), q = line_p(s, t);
            int u = 2 * big - q;
            GaussRational want = expected_pairing(s, t - 1, t, u);
            GaussRational got = raw_val(t - 1, t, u);
            if (got == -want)
                out.normalized[t - 1] = scaled(out.normalized[t - 1], GaussRational(-1));
        }
    }

    int radius = 2 * s.dim + 2;
    ShiftTable tab(w.g, w.gram, out.normalized, radius);
    for (int t = 1; t <= nl; ++t)
        for (int r = t; r <= nl; ++r)
            for (int u = -radius; u <= radius; ++u)
                if (tab.val(t, r, u) != expected_pairing(s, t, r, u))
                    throw std::logic_error("pairing table not reachable by rescaling");
    return out;
}

Matrix transport(const IsoWitness& w1, const IsoWitness& w2) {
    if (w1.seq.a != w2.seq.a || w1.seq.b != w2.seq.b)
        throw std::invalid_argument("transport requires identical sequences");
    if (!w1.is_normalized() || !w2.is_normalized())
        throw std::invalid_argument("transport requires normalized witnesses");
    if (w1.seq.dim == 0) return Matrix(0, 0);
    return chain_basis(w2) * inverse(chain_basis(w1));
}

Matrix sign_element_matrix(const IsoWitness& w, const std::vector<int>& omegas) {
    const IsoBlockSeq& s = w.seq;
    int nl = line_count(s);
    if (static_cast<int>(omegas.size()) != nl)
        throw std::invalid_argument("sign vector length mismatch");
    for (int v : omegas)
        if (v != 1 && v != -1) throw std::invalid_argument("sign entries must be +-1");
    if (s.dim == 0) return Matrix(0, 0);
    Matrix b = chain_basis(w);
    Matrix scaled_b = b;
    int c = 0;
    for (int t = 1; t <= nl; ++t) {
        int cnt = s.two_p_prime[t - 1] == 1 ? 1 : s.two_p_prime[t - 1];
        for (int i = 0; i < cnt; ++i, ++c)
            if (omegas[t - 1] == -1)
                scaled_b.set_col(c, scaled(b.col(c), GaussRational(-1)));
    }
    return scaled_b * inverse(b);
}

IsotropyGroup isotropy(const IsoWitness& w) {
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
        gr.matrices.push_back(sign_element_matrix(w, om));
    }
    return gr;
}

Matrix isotropic_subspace(const IsoWitness& w) {
    const IsoBlockSeq& s = w.seq;
    if (s.epsilon != 1 || s.kappa != 0)
        throw std::invalid_argument("isotropic subspace needs a symmetric form in even dimension");
    Matrix u(s.dim, s.dim / 2);
    int c = 0;
    for (int t = 1; t <= s.sigma; ++t) {
        int pt = s.p_at(t);
        Vec v = w.g.pow(pt).apply(w.lines[t - 1]);
        for (int i = 0; i < pt; ++i) {
            u.set_col(c++, v);
            if (i + 1 < pt) v = w.g.apply(v);
        }
    }
    return u;
}

bool same_isotropic_component(const IsoWitness& w1, const IsoWitness& w2) {
    if (w1.gram != w2.gram) throw std::invalid_argument("witnesses live on different forms");
    int n = w1.seq.dim;
    Matrix u1 = isotropic_subspace(w1);
    Matrix u2 = isotropic_subspace(w2);
    Matrix joint(n, u1.cols() + u2.cols());
    for (int j = 0; j < u1.cols(); ++j) joint.set_col(j, u1.col(j));
    for (int j = 0; j < u2.cols(); ++j) joint.set_col(u1.cols() + j, u2.col(j));
    int inter = n - rank(joint);
    return (n / 2 - inter) % 2 == 0;
}

int isotropic_component(const IsoWitness& w) {
    IsoWitness ref = build_iso(w.seq);
    if (w.gram != ref.gram)
        throw std::invalid_argument("component label needs the canonical form");
    return same_isotropic_component(ref, w) ? 0 : 1;
}

Matrix negative_det_element(const IsoWitness& w) {
    if (w.seq.k < 1)
        throw std::invalid_argument("needs a line with blocks on both eigenvalues");
    std::vector<int> om(line_count(w.seq), 1);
    om[0] = -1;
    return sign_element_matrix(w, om);
}

GaussRational restricted_det(const Matrix& g, const Matrix& gamma, const GaussRational& eigenvalue,
                             int multiplicity) {
    int n = g.rows();
    if (multiplicity == 0) return GaussRational(1);
    Matrix m = g;
    for (int i = 0; i < n; ++i) m.at(i, i) -= eigenvalue;
    Matrix e = kernel_basis(m.pow(n));
    if (e.cols() != multiplicity)
        throw std::invalid_argument("generalized eigenspace has unexpected dimension");
    Matrix ge = gamma * e;
    /* pick an invertible row subset of the eigenbasis */
    std::vector<int> rows;
    Matrix sub(0, 0);
    for (int i = 0; i < n && static_cast<int>(rows.size()) < multiplicity; ++i) {
        Matrix trial(static_cast<int>(rows.size()) + 1, multiplicity);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < multiplicity; ++j) trial.at(static_cast<int>(r), j) = e.at(rows[r], j);
        for (int j = 0; j < multiplicity; ++j)
            trial.at(static_cast<int>(rows.size()), j) = e.at(i, j);
        if (rank(trial) == trial.rows()) rows.push_back(i);
    }
    Matrix ea(multiplicity, multiplicity), ga(multiplicity, multiplicity);
    for (int r = 0; r < multiplicity; ++r)
        for (int j = 0; j < multiplicity; ++j) {
            ea.at(r, j) = e.at(rows[r], j);
            ga.at(r, j) = ge.at(rows[r], j);
        }
    Matrix rmat = solve(ea, ga);
    if (e * rmat != ge)
        throw std::invalid_argument("map does not preserve the generalized eigenspace");
    return det(rmat);
}

std::vector<std::vector<int>> special_isotropy(const IsoWitness& w) {
    if (w.seq.kappa != 1) throw std::invalid_argument("needs odd total dimension");
    IsotropyGroup gr = isotropy(w);
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < gr.elements.size(); ++i)
        if (det(gr.matrices[i]) == GaussRational(1)) out.push_back(gr.elements[i]);
    return out;
}

}  // namespace weylwit
