#include "weylwit/block_seq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weylwit {

namespace {

void drop_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/* Common checks: nonnegative, descending, no repeated positive value. */
void check_shape(const std::vector<int>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            throw std::invalid_argument(std::string(name) + ": negative entry");
        if (i + 1 < v.size()) {
            if (v[i] < v[i + 1])
                throw std::invalid_argument(std::string(name) + ": not descending");
            if (v[i] == v[i + 1] && v[i] > 0)
                throw std::invalid_argument(std::string(name) + ": repeated positive entry");
        }
    }
}

int count_positive(const std::vector<int>& v) {
    int n = 0;
    for (int x : v)
        if (x > 0) ++n;
    return n;
}

}  // namespace

IsoBlockSeq derive_iso(std::vector<int> a, std::vector<int> b) {
    drop_trailing_zeros(a);
    drop_trailing_zeros(b);
    check_shape(a, "a");
    check_shape(b, "b");

    /* All positive entries must share one parity; odd forces epsilon = +1,
     * even forces epsilon = -1. */
    int parity = -1; /* -1: unknown, else 0/1 */
    for (const auto* v : {&a, &b})
        for (int x : *v) {
            if (x == 0) continue;
            if (parity == -1)
                parity = x % 2;
            else if (parity != x % 2)
                throw std::invalid_argument("mixed parity between positive entries");
        }
    IsoBlockSeq s;
    s.a = a;
    s.b = b;
    s.epsilon = (parity == 0) ? -1 : 1; /* empty input defaults to +1 */
    s.dim = std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
    s.kappa = s.dim % 2;
    s.k = std::min(count_positive(a), count_positive(b));

    int len = static_cast<int>(std::max(a.size(), b.size()));
    for (int i = 1; i <= len; ++i) s.c.push_back(s.a_at(i) + s.b_at(i));

    std::vector<int> p;
    if (s.epsilon == -1) {
        for (int ci : s.c) p.push_back(ci / 2);
    } else {
        for (int i = 1; i <= s.k; ++i) p.push_back(s.c_at(i) / 2);
        for (int sidx = 1; s.k + sidx <= len; sidx += 2) {
            int u = s.c_at(s.k + sidx), v = s.c_at(s.k + sidx + 1);
            if (u >= 1 && v >= 1) {
                p.push_back((u - 1) / 2);
                p.push_back((v + 1) / 2);
            } else if (u >= 1) {
                p.push_back((u - 1) / 2);
                p.push_back(0);
            } else {
                p.push_back(0);
                p.push_back(0);
            }
        }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::logic_error("derived p not descending");
    s.p = p;
    s.sigma = static_cast<int>(p.size());
    for (int pt : p) s.two_p_prime.push_back(2 * pt);
    if (s.kappa == 1) s.two_p_prime.push_back(1);

    int total = 0;
    for (int pt : p) total += 2 * pt;
    if (total + s.kappa != s.dim) throw std::logic_error("half-size sum check failed");
    return s;
}

TwistedBlockSeq derive_twisted(std::vector<int> a, std::vector<int> b) {
    drop_trailing_zeros(a);
    drop_trailing_zeros(b);
    check_shape(a, "a");
    check_shape(b, "b");
    for (int x : a)
        if (x > 0 && x % 2 == 0)
            throw std::invalid_argument("a: positive entries must be odd");
    for (int x : b)
        if (x > 0 && x % 2 == 1)
            throw std::invalid_argument("b: positive entries must be even");

    TwistedBlockSeq s;
    s.a = a;
    s.b = b;
    s.n = std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
    s.k = std::min(count_positive(a), count_positive(b));

    std::vector<int> p;
    for (int i = 1; i <= s.k; ++i) p.push_back((s.a_at(i) + s.b_at(i) + 1) / 2);
    int len = static_cast<int>(std::max(a.size(), b.size()));
    for (int sidx = 1; s.k + sidx <= len; sidx += 2) {
        int bt = s.b_at(s.k + sidx);
        if (bt > 0) {
            p.push_back(bt / 2);
            p.push_back((s.b_at(s.k + sidx + 1) + 2) / 2);
        } else {
            int at = s.a_at(s.k + sidx), an = s.a_at(s.k + sidx + 1);
            if (at > 0 && an > 0) {
                p.push_back((at + 1) / 2);
                p.push_back((an + 1) / 2);
            } else if (at > 0) {
                p.push_back((at + 1) / 2);
                p.push_back(0);
            } else {
                p.push_back(0);
                p.push_back(0);
            }
        }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::logic_error("derived p not descending");
    s.p = p;
    s.sigma = static_cast<int>(p.size());

    int total = 0;
    for (int pt : p) total += 2 * pt - 1;
    if (total != s.n) throw std::logic_error("line-size sum check failed");
    return s;
}

SignGroupShape sign_group(const IsoBlockSeq& seq) {
    SignGroupShape shape;
    shape.size = seq.sigma + seq.kappa;
    if (seq.epsilon == 1) {
        for (int t = seq.k + 1; t + 1 <= shape.size; t += 2)
            shape.linked_pairs.emplace_back(t, t + 1);
    }
    return shape;
}

SignGroupShape sign_group(const TwistedBlockSeq& seq) {
    SignGroupShape shape;
    shape.size = seq.sigma;
    for (int t = seq.k + 1; t + 1 <= seq.sigma; t += 2)
        if (seq.b_at(t) > 0) shape.linked_pairs.emplace_back(t, t + 1);
    return shape;
}

namespace {

/* Strictly descending sequences of positive integers with the given parity
 * (0 even, 1 odd) and sum <= max_sum; includes the empty sequence. */
std::vector<std::vector<int>> descending_seqs(int parity, int max_sum) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int largest_allowed, int budget) -> void {
        int start = std::min(largest_allowed, budget);
        if (start % 2 != parity) --start;
        for (int v = start; v >= 1; v -= 2) {
            cur.push_back(v);
            out.push_back(cur);
            self(self, v - 2, budget - v);
            cur.pop_back();
        }
    };
    rec(rec, max_sum, max_sum);
    return out;
}

}  // namespace

std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_iso(int max_dim) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    out.push_back({{}, {}});
    for (int parity : {1, 0}) {
        auto seqs = descending_seqs(parity, max_dim);
        for (const auto& a : seqs)
            for (const auto& b : seqs) {
                if (a.empty() && b.empty()) continue;
                int total = std::accumulate(a.begin(), a.end(), 0) +
                            std::accumulate(b.begin(), b.end(), 0);
                if (total <= max_dim) out.push_back({a, b});
            }
    }
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_twisted(int max_dim) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    auto as = descending_seqs(1, max_dim);
    auto bs = descending_seqs(0, max_dim);
    for (const auto& a : as)
        for (const auto& b : bs) {
            int total = std::accumulate(a.begin(), a.end(), 0) +
                        std::accumulate(b.begin(), b.end(), 0);
            if (total <= max_dim) out.push_back({a, b});
        }
    return out;
}

}  // namespace weylwit
