#include "weylwit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace weylwit {

namespace {

using Root = std::array<int8_t, 8>;

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

unsigned long long order_formula(char family, int rank) {
    switch (family) {
        case 'A':
            return static_cast<unsigned long long>(factorial(rank + 1));
        case 'B':
        case 'C':
            return static_cast<unsigned long long>(factorial(rank)) << rank;
        case 'D':
            return static_cast<unsigned long long>(factorial(rank)) << (rank - 1);
        case 'E':
            if (rank == 6) return 51840ULL;
            if (rank == 7) return 2903040ULL;
            return 696729600ULL;
        case 'F':
            return 1152ULL;
        default: /* G */
            return 12ULL;
    }
}

std::size_t expected_root_count(char family, int rank) {
    switch (family) {
        case 'A':
            return static_cast<std::size_t>(rank) * (rank + 1);
        case 'B':
        case 'C':
            return static_cast<std::size_t>(2 * rank) * rank;
        case 'D':
            return static_cast<std::size_t>(2 * rank) * (rank - 1);
        case 'E':
            if (rank == 6) return 72;
            if (rank == 7) return 126;
            return 240;
        case 'F':
            return 48;
        default:
            return 12;
    }
}

/* cartan[i][j] = <a_i, a_j^v>; the off-diagonal entries per bond. */
void fill_cartan(RootSystem& rs) {
    const int n = rs.rank;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.cartan[i][j] = (i == j) ? 2 : 0;
    auto bond = [&](int i, int j, int cij, int cji) {
        rs.cartan[i][j] = cij;
        rs.cartan[j][i] = cji;
    };
    switch (rs.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
            break;
        case 'B': /* last simple root short */
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
            if (n >= 2) bond(n - 2, n - 1, -2, -1);
            break;
        case 'C': /* last simple root long */
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
            if (n >= 2) bond(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
            bond(n - 3, n - 1, -1, -1);
            break;
        case 'E': {
            /* chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4 */
            bond(0, 2, -1, -1);
            bond(2, 3, -1, -1);
            bond(1, 3, -1, -1);
            for (int i = 3; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
            break;
        }
        case 'F':
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1); /* root 2 long, root 3 short */
            bond(2, 3, -1, -1);
            break;
        default: /* G */
            bond(0, 1, -1, -3);
            break;
    }
}

void fill_reflections(RootSystem& rs) {
    const int n = rs.rank;
    rs.simple_refl.assign(n, WeylMat{});
    for (int j = 0; j < n; ++j) {
        WeylMat& m = rs.simple_refl[j];
        for (int i = 0; i < n; ++i) m.m[static_cast<std::size_t>(i) * n + i] = 1;
        /* s_j(a_i) = a_i - <a_i, a_j^v> a_j: row j holds the corrections */
        for (int i = 0; i < n; ++i)
            m.m[static_cast<std::size_t>(j) * n + i] =
                static_cast<int8_t>((i == j ? 1 : 0) - rs.cartan[i][j]);
    }
}

Root apply_root(const RootSystem& rs, const WeylMat& x, const Root& r) {
    Root out{};
    const int n = rs.rank;
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc += x.m[static_cast<std::size_t>(i) * n + j] * r[j];
        out[i] = static_cast<int8_t>(acc);
    }
    return out;
}

/* Root coordinates all share a sign; negative iff some entry is < 0. */
bool is_negative_root(const RootSystem& rs, const Root& r) {
    for (int i = 0; i < rs.rank; ++i)
        if (r[i] < 0) return true;
    return false;
}

void fill_roots(RootSystem& rs) {
    const int n = rs.rank;
    std::unordered_set<std::uint64_t> seen;
    auto key_of = [&](const Root& r) {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i) k = (k << 8) | static_cast<std::uint8_t>(r[i]);
        return k;
    };
    std::vector<Root> all;
    for (int i = 0; i < n; ++i) {
        Root r{};
        r[i] = 1;
        all.push_back(r);
        seen.insert(key_of(r));
    }
    for (std::size_t head = 0; head < all.size(); ++head) {
        const Root r = all[head];
        for (int j = 0; j < n; ++j) {
            Root img = apply_root(rs, rs.simple_refl[j], r);
            if (seen.insert(key_of(img)).second) all.push_back(img);
        }
    }
    if (all.size() != expected_root_count(rs.family, n))
        throw std::logic_error("root closure produced an unexpected count");
    rs.positive_roots.clear();
    for (const Root& r : all)
        if (!is_negative_root(rs, r)) rs.positive_roots.push_back(r);
    if (rs.positive_roots.size() * 2 != all.size())
        throw std::logic_error("positive roots are not half of all roots");
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
}

std::vector<long long> to_int_coeffs(const Poly& p) {
    std::vector<long long> out;
    out.reserve(p.coeffs().size());
    for (const GaussRational& c : p.coeffs()) {
        if (c.im != Rational(0)) throw std::logic_error("non-real coefficient");
        const Rational& re = c.re;
        if (re.get_den() != 1) throw std::logic_error("non-integer coefficient");
        out.push_back(static_cast<long long>(re.get_num().get_si()));
    }
    return out;
}

Poly to_poly(const std::vector<long long>& coeffs) {
    std::vector<GaussRational> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(Rational(static_cast<long>(v)));
    return Poly(std::move(c));
}

struct MinimizeState {
    std::deque<WeylMat> frontier;
    std::unordered_set<WeylKey, WeylKeyHash> visited;
};

}  // namespace

std::size_t WeylKeyHash::operator()(const WeylKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : k) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h);
}

RootSystem build_weyl(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("type must be a letter plus a rank");
    char family = type[0];
    int rank = std::atoi(type.c_str() + 1);
    if (family < 'A' || family > 'G' || rank < 1 || rank > 8)
        throw std::invalid_argument("unsupported type: " + type);
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok) throw std::invalid_argument("unsupported type: " + type);
    RootSystem rs;
    rs.type = type;
    rs.family = family;
    rs.rank = rank;
    rs.group_order = order_formula(family, rank);
    fill_cartan(rs);
    fill_reflections(rs);
    fill_roots(rs);
    return rs;
}

WeylMat weyl_identity(const RootSystem& rs) {
    WeylMat m{};
    for (int i = 0; i < rs.rank; ++i) m.m[static_cast<std::size_t>(i) * rs.rank + i] = 1;
    return m;
}

WeylMat weyl_mul(const RootSystem& rs, const WeylMat& x, const WeylMat& y) {
    const int n = rs.rank;
    WeylMat out{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k)
                acc += x.m[static_cast<std::size_t>(i) * n + k] *
                       y.m[static_cast<std::size_t>(k) * n + j];
            out.m[static_cast<std::size_t>(i) * n + j] = static_cast<int8_t>(acc);
        }
    return out;
}

WeylMat weyl_inverse(const RootSystem& rs, const WeylMat& x) {
    /* every element has finite order; invert via the reduced word */
    std::vector<int> word = reduced_word(rs, x);
    std::reverse(word.begin(), word.end());
    return word_to_element(rs, word);
}

WeylKey weyl_key(const RootSystem& rs, const WeylMat& x) {
    WeylKey k{};
    const int total = rs.rank * rs.rank;
    for (int e = 0; e < total; ++e) {
        const std::uint64_t nib = static_cast<std::uint64_t>(x.m[e] + 8) & 0xF;
        k[e >> 4] |= nib << ((e & 15) * 4);
    }
    return k;
}

WeylMat word_to_element(const RootSystem& rs, const std::vector<int>& word) {
    WeylMat m = weyl_identity(rs);
    for (int s : word) {
        if (s < 0 || s >= rs.rank) throw std::invalid_argument("word letter out of range");
        m = weyl_mul(rs, m, rs.simple_refl[s]);
    }
    return m;
}

int weyl_length(const RootSystem& rs, const WeylMat& x) {
    int count = 0;
    for (const Root& r : rs.positive_roots)
        if (is_negative_root(rs, apply_root(rs, x, r))) ++count;
    return count;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylMat& x) {
    std::vector<int> rev;
    WeylMat cur = x;
    const WeylMat id = weyl_identity(rs);
    while (!(cur == id)) {
        /* ell(cur * s) < ell(cur) iff cur sends a_s to a negative root */
        int chosen = -1;
        for (int s = 0; s < rs.rank; ++s) {
            bool negative = false;
            for (int i = 0; i < rs.rank; ++i)
                if (cur.m[static_cast<std::size_t>(i) * rs.rank + s] < 0) negative = true;
            if (negative) {
                chosen = s;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("descent step not found");
        cur = weyl_mul(rs, cur, rs.simple_refl[chosen]);
        rev.push_back(chosen);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<long long> weyl_char_poly(const RootSystem& rs, const WeylMat& x) {
    /* Faddeev-LeVerrier over 64-bit integers: entries of group-element
     * matrices are small, so all intermediates fit comfortably. */
    const int n = rs.rank;
    std::vector<long long> a(static_cast<std::size_t>(n) * n), m(a.size()), next(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = x.m[static_cast<std::size_t>(i) * n + j];
    std::vector<long long> coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs[n] = 1;
    m = a;
    for (int k = 1; k <= n; ++k) {
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += m[static_cast<std::size_t>(i) * n + i];
        if (tr % k != 0) throw std::logic_error("trace division not exact");
        const long long ck = -tr / k;
        coeffs[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long acc = (i == j) ? ck : 0;
                acc += m[static_cast<std::size_t>(i) * n + j];
                next[static_cast<std::size_t>(i) * n + j] = acc;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += a[static_cast<std::size_t>(i) * n + l] *
                           next[static_cast<std::size_t>(l) * n + j];
                m[static_cast<std::size_t>(i) * n + j] = acc;
            }
    }
    return coeffs;
}

bool weyl_is_elliptic(const RootSystem& rs, const WeylMat& x) {
    const std::vector<long long> c = weyl_char_poly(rs, x);
    long long at_one = 0;
    for (long long v : c) at_one += v;
    return at_one != 0;
}

std::map<int, int> weyl_cyclotomic_factors(const RootSystem& rs, const WeylMat& x) {
    CyclotomicFactorization f = cyclotomic_factorization(to_poly(weyl_char_poly(rs, x)), 30);
    if (!f.complete)
        throw std::logic_error("characteristic polynomial is not a cyclotomic product");
    return f.factors;
}

std::vector<long long> cyclotomic_product(const std::map<int, int>& factors) {
    Poly p = Poly::constant(GaussRational(1));
    for (const auto& [d, mult] : factors)
        for (int i = 0; i < mult; ++i) p = p * cyclotomic(d);
    return to_int_coeffs(p);
}

MinimizeResult cyclic_shift_minimize(const RootSystem& rs, const WeylMat& w,
                                     unsigned long long seed, std::size_t plateau_bound) {
    std::vector<int> order(static_cast<std::size_t>(rs.rank));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    MinimizeResult res;
    res.element = w;
    res.length = weyl_length(rs, w);
    res.plateau_exhausted = true;

    MinimizeState st;
    st.frontier.push_back(w);
    st.visited.insert(weyl_key(rs, w));
    while (!st.frontier.empty()) {
        const WeylMat x = st.frontier.front();
        st.frontier.pop_front();
        const int lx = weyl_length(rs, x);
        bool descended = false;
        for (int idx = 0; idx < rs.rank && !descended; ++idx) {
            const int s = order[idx];
            const WeylMat y =
                weyl_mul(rs, rs.simple_refl[s], weyl_mul(rs, x, rs.simple_refl[s]));
            const int ly = weyl_length(rs, y);
            if (ly < lx) {
                res.element = y;
                res.length = ly;
                st.frontier.clear();
                st.visited.clear();
                st.frontier.push_back(y);
                st.visited.insert(weyl_key(rs, y));
                descended = true;
            } else if (ly == lx) {
                if (st.visited.size() >= plateau_bound) {
                    res.plateau_exhausted = false;
                    continue;
                }
                if (st.visited.insert(weyl_key(rs, y)).second) st.frontier.push_back(y);
            }
        }
    }
    return res;
}

std::vector<WeylClassInfo> enumerate_classes(const RootSystem& rs) {
    if (rs.group_order > 3100000ULL)
        throw std::invalid_argument("group too large for complete enumeration");
    const int n = rs.rank;
    std::unordered_set<WeylKey, WeylKeyHash> classified;
    classified.reserve(static_cast<std::size_t>(rs.group_order) * 2);
    std::vector<WeylClassInfo> classes;
    unsigned long long total = 0;

    std::vector<WeylMat> level{weyl_identity(rs)};
    int len = 0;
    while (!level.empty()) {
        std::sort(level.begin(), level.end(), [&](const WeylMat& a, const WeylMat& b) {
            return weyl_key(rs, a) < weyl_key(rs, b);
        });
        for (const WeylMat& x : level) {
            if (classified.count(weyl_key(rs, x))) continue;
            /* new class seeded at its exact minimal length (shorter elements
             * are all classified already) */
            WeylClassInfo info;
            info.min_length = len;
            info.representative = x;
            info.char_poly = weyl_char_poly(rs, x);
            info.factors = weyl_cyclotomic_factors(rs, x);
            long long at_one = 0;
            for (long long v : info.char_poly) at_one += v;
            info.elliptic = at_one != 0;
            WeylMat pw = weyl_identity(rs);
            for (int k = 1; k <= n; ++k) {
                pw = weyl_mul(rs, pw, x);
                long long tr = 0;
                for (int i = 0; i < n; ++i) tr += pw.m[static_cast<std::size_t>(i) * n + i];
                info.power_traces.push_back(tr);
            }
            std::deque<WeylMat> queue{x};
            classified.insert(weyl_key(rs, x));
            info.size = 1;
            while (!queue.empty()) {
                const WeylMat y = queue.front();
                queue.pop_front();
                for (int s = 0; s < n; ++s) {
                    const WeylMat z =
                        weyl_mul(rs, rs.simple_refl[s], weyl_mul(rs, y, rs.simple_refl[s]));
                    if (classified.insert(weyl_key(rs, z)).second) {
                        queue.push_back(z);
                        ++info.size;
                    }
                }
            }
            total += info.size;
            classes.push_back(std::move(info));
        }
        /* elements of length len+1 are exactly the products x*s that gain
         * length, i.e. x maps a_s to a positive root */
        std::unordered_set<WeylKey, WeylKeyHash> next_seen;
        std::vector<WeylMat> next;
        for (const WeylMat& x : level) {
            for (int s = 0; s < n; ++s) {
                bool negative = false;
                for (int i = 0; i < n; ++i)
                    if (x.m[static_cast<std::size_t>(i) * n + s] < 0) negative = true;
                if (negative) continue;
                const WeylMat y = weyl_mul(rs, x, rs.simple_refl[s]);
                if (next_seen.insert(weyl_key(rs, y)).second) next.push_back(y);
            }
        }
        level = std::move(next);
        ++len;
    }
    if (total != rs.group_order)
        throw std::logic_error("class sizes do not add up to the group order");
    std::sort(classes.begin(), classes.end(), [](const WeylClassInfo& a, const WeylClassInfo& b) {
        if (a.min_length != b.min_length) return a.min_length < b.min_length;
        if (a.size != b.size) return a.size < b.size;
        return a.char_poly < b.char_poly;
    });
    return classes;
}

SearchResult find_elliptic_rep(const RootSystem& rs, const std::map<int, int>& target,
                               unsigned long long budget, unsigned long long seed,
                               int expected_length) {
    SearchResult res;
    const std::vector<long long> target_cp = cyclotomic_product(target);
    if (static_cast<int>(target_cp.size()) != rs.rank + 1)
        throw std::invalid_argument("target degree must equal the rank");
    std::mt19937_64 rng(seed);
    WeylMat x = weyl_identity(rs);
    int cooldown = 0;
    while (res.steps < budget) {
        x = weyl_mul(rs, x, rs.simple_refl[rng() % rs.rank]);
        ++res.steps;
        if (cooldown > 0) {
            --cooldown;
            continue;
        }
        if (weyl_char_poly(rs, x) != target_cp) continue;
        const MinimizeResult m = cyclic_shift_minimize(rs, x, seed);
        if (expected_length < 0 || m.length == expected_length) {
            res.found = true;
            res.element = m.element;
            res.min_length = m.length;
            return res;
        }
        cooldown = 64; /* walk away before sampling again */
    }
    return res;
}

std::vector<EllipticRow> builtin_table(const std::string& type) {
    auto row = [&](int len, std::map<int, int> f, std::vector<std::string> labels) {
        EllipticRow r;
        r.type = type;
        r.min_length = len;
        r.factors = std::move(f);
        r.labels = std::move(labels);
        return r;
    };
    if (type == "G2")
        return {
            row(2, {{6, 1}}, {"(G_2)_{G_2}", "(J_3)_{A_2}", "(J_2J_2)_{A_1A_1}"}),
            row(4, {{3, 1}}, {"(G_2(a_1))_{G_2}"}),
        };
    if (type == "F4")
        return {
            row(4, {{12, 1}},
                {"(F_4)_{F_4}", "(J_6J_2)_{C_3A_1}", "(J_3J_3)_{A_2A_2}", "(J_4J_2)_{A_3A_1}",
                 "(J_9)_{B_4}"}),
            row(6, {{8, 1}}, {"(F_4(a_1))_{F_4}", "(J_4J_2J_2)_{C_3A_1}"}),
            row(8, {{6, 2}}, {"(F_4(a_2))_{F_4}", "(J_5J_3J_1)_{B_4}"}),
            row(12, {{4, 2}}, {"(F_4(a_3))_{F_4}"}),
        };
    if (type == "E6")
        return {
            row(6, {{3, 1}, {12, 1}},
                {"(E_6)_{E_6}", "(J_6J_2)_{A_5A_1}", "(J_3J_3J_3)_{A_2A_2A_2}"}),
            row(8, {{9, 1}}, {"(E_6(a_1))_{E_6}"}),
            row(12, {{3, 1}, {6, 2}}, {"(A_5A_1)_{E_6}"}),
        };
    if (type == "E7")
        return {
            row(7, {{2, 1}, {18, 1}},
                {"(E_7)_{E_7}", "(J_{11}J_1J_2)_{D_6A_1}", "(J_6J_3)_{A_5A_2}",
                 "(J_4J_4J_2)_{A_3A_3A_1}", "(J_8)_{A_7}"}),
            row(9, {{2, 1}, {14, 1}}, {"(E_7(a_1))_{E_7}", "((J_9J_3)A_1)_{D_6A_1}"}),
            row(11, {{2, 1}, {6, 1}, {12, 1}}, {"(E_7(a_2))_{E_7}", "(J_7J_5J_2)_{D_6A_1}"}),
            row(13, {{2, 1}, {6, 1}, {10, 1}}, {"(D_6A_1)_{E_7}"}),
            row(17, {{2, 1}, {4, 1}, {8, 1}}, {"(D_6(a_1)A_1)_{E_7}"}),
            row(21, {{2, 1}, {6, 3}}, {"(D_6(a_2)A_1)_{E_7}"}),
        };
    if (type == "E8")
        return {
            row(8, {{30, 1}},
                {"(E_8)_{E_8}", "(E_7J_2)_{E_7A_1}", "(E_6J_3)_{E_6A_2}", "(J_9J_1J_4)_{D_5A_3}",
                 "(J_5J_5)_{A_4A_4}", "(J_6J_3J_2)_{A_5A_2A_1}", "(J_9)_{A_8}",
                 "(J_8J_2)_{A_7A_1}", "(J_{15}J_1)_{D_8}"}),
            row(10, {{24, 1}},
                {"(E_8(a_1))_{E_8}", "(E_7(a_1)J_2)_{E_7A_1}", "(E_6(a_1)J_3)_{E_6A_2}",
                 "(J_7J_3J_4)_{D_5A_3}", "(J_{13}J_3)_{D_8}"}),
            row(12, {{20, 1}},
                {"(E_8(a_2))_{E_8}", "(E_7(a_2)J_2)_{E_7A_1}", "(J_{11}J_5)_{D_8}"}),
            row(14, {{6, 1}, {18, 1}},
                {"(E_7A_1)_{E_8}", "(E_7(a_3)J_2)_{E_7A_1}", "(J_9J_7)_{D_8}"}),
            row(16, {{15, 1}}, {"(D_8)_{E_8}", "(E_7(a_4)J_2)_{E_7A_1}"}),
            row(18, {{2, 2}, {14, 1}}, {"(E_7(a_1)A_1)_{E_8}"}),
            row(20, {{12, 2}}, {"(D_8(a_1))_{E_8}", "(J_7J_5J_3J_1)_{D_8}"}),
            row(22, {{6, 2}, {12, 1}}, {"(E_7(a_2)A_1)_{E_8}", "(E_7(a_5)J_2)_{E_7A_1}"}),
            row(24, {{10, 2}}, {"(A_8)_{E_8}"}),
            row(28, {{3, 1}, {9, 1}}, {"(D_8(a_3))_{E_8}"}),
            row(40, {{6, 4}}, {"(2A_4)_{E_8}"}),
        };
    throw std::invalid_argument("no embedded table for type: " + type);
}

namespace {

RowReport search_row_report(const RootSystem& rs, const EllipticRow& row,
                            unsigned long long budget, unsigned long long seed) {
    RowReport rep;
    rep.row = row;
    int degree = 0;
    for (const auto& [d, mult] : row.factors) degree += cyclotomic(d).degree() * mult;
    rep.degree_ok = degree == rs.rank;
    rep.no_fixed_vector = row.factors.count(1) == 0;
    const SearchResult sr = find_elliptic_rep(rs, row.factors, budget, seed, row.min_length);
    rep.found = sr.found;
    if (sr.found) {
        rep.found_length = sr.min_length;
        rep.length_ok = sr.min_length == row.min_length;
        rep.representative_word = reduced_word(rs, sr.element);
        WeylMat pw = weyl_identity(rs);
        for (int k = 1; k <= rs.rank; ++k) {
            pw = weyl_mul(rs, pw, sr.element);
            long long tr = 0;
            for (int i = 0; i < rs.rank; ++i)
                tr += pw.m[static_cast<std::size_t>(i) * rs.rank + i];
            rep.fingerprint.push_back(tr);
        }
    } else {
        rep.inconclusive = true;
    }
    return rep;
}

}  // namespace

std::vector<RowReport> verify_table_row(const std::string& type, std::size_t row_index,
                                        unsigned long long budget, unsigned long long seed) {
    const std::vector<EllipticRow> rows = builtin_table(type);
    if (row_index >= rows.size()) throw std::invalid_argument("row index out of range");
    const RootSystem rs = build_weyl(type);
    return {search_row_report(rs, rows[row_index], budget, seed + row_index)};
}

std::vector<RowReport> verify_table(const std::string& type, unsigned long long budget,
                                    unsigned long long seed, bool exhaustive_e7) {
    const std::vector<EllipticRow> rows = builtin_table(type);
    const RootSystem rs = build_weyl(type);
    const bool exhaustive =
        (type == "G2" || type == "F4" || type == "E6") || (type == "E7" && exhaustive_e7);
    std::vector<WeylClassInfo> classes;
    if (exhaustive) classes = enumerate_classes(rs);

    std::vector<RowReport> reports;
    unsigned long long row_index = 0;
    for (const EllipticRow& row : rows) {
        RowReport rep;
        rep.row = row;
        int degree = 0;
        for (const auto& [d, mult] : row.factors) degree += cyclotomic(d).degree() * mult;
        rep.degree_ok = degree == rs.rank;
        rep.no_fixed_vector = row.factors.count(1) == 0;
        if (exhaustive) {
            rep.exhaustive = true;
            const WeylClassInfo* match = nullptr;
            for (const WeylClassInfo& c : classes) {
                if (c.factors != row.factors) continue;
                rep.found = true;
                if (rep.found_length < 0 || c.min_length < rep.found_length)
                    rep.found_length = c.min_length;
                if (c.min_length == row.min_length && match == nullptr) match = &c;
            }
            if (match != nullptr) {
                rep.length_ok = true;
                rep.representative_word = reduced_word(rs, match->representative);
                rep.fingerprint = match->power_traces;
            }
        } else {
            rep = search_row_report(rs, row, budget, seed + row_index);
        }
        reports.push_back(std::move(rep));
        ++row_index;
    }
    return reports;
}

}  // namespace weylwit
