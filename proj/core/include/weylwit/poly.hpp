#ifndef WEYLWIT_POLY_HPP
#define WEYLWIT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "weylwit/scalar.hpp"

namespace weylwit {

/* Dense univariate polynomial over Q(i), coefficients ascending.
 * The zero polynomial is the empty coefficient list. */
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const GaussRational& v) { return Poly({v}); }
    static Poly monomial(int degree, const GaussRational& v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussRational>& coeffs() const { return c_; }
    GaussRational coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[d] : GaussRational(0);
    }
    GaussRational leading() const { return is_zero() ? GaussRational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == GaussRational(1); }
    bool has_integer_coeffs() const;

    GaussRational eval(const GaussRational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /* Quotient and remainder; divisor must be nonzero. */
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly pow(unsigned e) const;

    /* Truncated power series inverse: q with p*q = 1 mod T^terms.
     * Requires a unit constant term. */
    Poly series_inverse(int terms) const;
    Poly truncate(int terms) const;

    std::string str() const;

  private:
    void trim();
    std::vector<GaussRational> c_;
};

/* d-th cyclotomic polynomial, integer coefficients; cached. */
const Poly& cyclotomic(int d);

struct CyclotomicFactorization {
    std::map<int, int> factors;  /* d -> multiplicity */
    Poly remainder;              /* 1 when the factorization is complete */
    bool complete = false;
};

/* Factor a monic integer polynomial into cyclotomics Phi_d, d <= max_index,
 * by trial division.  A non-cyclotomic part is reported as remainder. */
CyclotomicFactorization cyclotomic_factorization(const Poly& p, int max_index = 60);

std::string factorization_str(const std::map<int, int>& factors);

}  // namespace weylwit

#endif
