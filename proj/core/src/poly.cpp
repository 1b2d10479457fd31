#include "weylwit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace weylwit {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, const GaussRational& v) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<GaussRational> c(degree + 1, GaussRational(0));
    c[degree] = v;
    return Poly(std::move(c));
}

bool Poly::has_integer_coeffs() const {
    for (const auto& v : c_)
        if (v.im != 0 || !is_integer(v.re)) return false;
    return true;
}

GaussRational Poly::eval(const GaussRational& x) const {
    GaussRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<GaussRational> c(std::max(c_.size(), o.c_.size()), GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<GaussRational> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<GaussRational> c(c_.size() + o.c_.size() - 1, GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<GaussRational> rem(c_);
    int dd = divisor.degree();
    GaussRational lead = divisor.leading();
    int qdeg = static_cast<int>(rem.size()) - 1 - dd;
    if (qdeg < 0) return {Poly(), *this};
    std::vector<GaussRational> q(qdeg + 1, GaussRational(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        GaussRational f = rem[i] / lead;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(GaussRational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly Poly::truncate(int terms) const {
    if (terms <= 0) return Poly();
    std::vector<GaussRational> c(c_.begin(),
                                 c_.begin() + std::min<size_t>(c_.size(), terms));
    return Poly(std::move(c));
}

Poly Poly::series_inverse(int terms) const {
    if (is_zero() || c_[0].is_zero()) throw std::domain_error("series inverse needs a unit term");
    std::vector<GaussRational> q(terms, GaussRational(0));
    GaussRational inv0 = c_[0].inv();
    q[0] = inv0;
    for (int n = 1; n < terms; ++n) {
        GaussRational s(0);
        for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) s += c_[k] * q[n - k];
        q[n] = -s * inv0;
    }
    return Poly(std::move(q));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const GaussRational& v = c_[d];
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        os << rational_to_string(v.re);
        if (v.im != 0) os << (v.im > 0 ? "+" : "") << rational_to_string(v.im) << "i";
        os << ")";
        if (d > 0) os << "T^" << d;
    }
    return os.str();
}

const Poly& cyclotomic(int d) {
    static std::map<int, Poly> cache;
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    /* Phi_d = (T^d - 1) / prod_{e | d, e < d} Phi_e */
    std::vector<GaussRational> c(d + 1, GaussRational(0));
    c[0] = GaussRational(-1);
    c[d] = GaussRational(1);
    Poly num(std::move(c));
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, r] = num.divmod(cyclotomic(e));
        if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
        num = q;
    }
    return cache.emplace(d, std::move(num)).first->second;
}

CyclotomicFactorization cyclotomic_factorization(const Poly& p, int max_index) {
    if (!p.has_integer_coeffs()) throw std::invalid_argument("non-integer coefficients");
    if (!p.is_monic()) throw std::invalid_argument("non-monic polynomial");
    CyclotomicFactorization out;
    out.remainder = p;
    for (int d = 1; d <= max_index && out.remainder.degree() > 0; ++d) {
        const Poly& phi = cyclotomic(d);
        while (out.remainder.degree() >= phi.degree()) {
            auto [q, r] = out.remainder.divmod(phi);
            if (!r.is_zero()) break;
            ++out.factors[d];
            out.remainder = q;
        }
    }
    out.complete = out.remainder.degree() == 0;
    return out;
}

std::string factorization_str(const std::map<int, int>& factors) {
    std::ostringstream os;
    for (const auto& [d, m] : factors) {
        os << "Phi" << d;
        if (m > 1) os << "^" << m;
        os << " ";
    }
    auto s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace weylwit
