#include <random>

#include "doctest.h"
#include "weylwit/matrix.hpp"
#include "weylwit/poly.hpp"
#include "weylwit/scalar.hpp"

using namespace weylwit;

namespace {

GaussRational rnd_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

Matrix rnd_matrix(std::mt19937_64& rng, int r, int c) {
    Matrix m(r, c);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = GaussRational(num(rng));
    return m;
}

}  // namespace

TEST_CASE("rational and gaussian basics") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(pow2(3) == 8);
    CHECK(pow2(-2) == make_rational(1, 4));
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 3) == 35);
    CHECK(GaussRational::i() * GaussRational::i() == GaussRational(-1));
    GaussRational z(make_rational(2, 3), make_rational(-1, 5));
    CHECK(z * z.inv() == GaussRational(1));
    CHECK(is_even_integer(GaussRational(4)));
    CHECK(!is_even_integer(GaussRational(3)));
    CHECK(!is_even_integer(GaussRational(make_rational(1, 2))));
    CHECK(rational_from_string("6/-4") == make_rational(-3, 2));
    CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
}

TEST_CASE("square roots and nth roots") {
    CHECK(*rational_sqrt(make_rational(9, 4)) == make_rational(3, 2));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(*gauss_sqrt(GaussRational(-4)) == GaussRational(Rational(0), Rational(2)));
    /* (1+i)^2 = 2i */
    auto r = gauss_sqrt(GaussRational(Rational(0), Rational(2)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussRational(Rational(0), Rational(2)));
    CHECK(*rational_nth_root(Rational(-27), 3) == -3);
    CHECK(!rational_nth_root(Rational(-27), 2).has_value());
}

TEST_CASE("gaussian field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        GaussRational a = rnd_scalar(rng), b = rnd_scalar(rng), c = rnd_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == GaussRational(1));
    }
}

TEST_CASE("matrix multiplication") {
    std::mt19937_64 rng(7);
    Matrix m = rnd_matrix(rng, 3, 3);
    CHECK(Matrix::identity(3) * m == m);

    Matrix swap(2, 2);
    swap.at(0, 1) = GaussRational(1);
    swap.at(1, 0) = GaussRational(1);
    CHECK(swap * swap == Matrix::identity(2));

    Matrix a(1, 1), b(1, 1);
    a.at(0, 0) = GaussRational(make_rational(2, 3));
    b.at(0, 0) = GaussRational(make_rational(3, 2));
    CHECK(a * b == Matrix::identity(1));
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(Matrix::identity(2)) ==
          Poly({GaussRational(1), GaussRational(-2), GaussRational(1)}));

    Matrix m(2, 2);
    m.at(0, 0) = GaussRational(0);
    m.at(0, 1) = GaussRational(-1);
    m.at(1, 0) = GaussRational(1);
    m.at(1, 1) = GaussRational(1);
    CHECK(char_poly(m) == cyclotomic(6));

    Matrix d(2, 2);
    d.at(0, 0) = GaussRational(2);
    d.at(1, 1) = GaussRational(3);
    CHECK(char_poly(d) == Poly({GaussRational(6), GaussRational(-5), GaussRational(1)}));
}

TEST_CASE("jordan partitions") {
    Matrix n3(3, 3);
    n3.at(0, 1) = GaussRational(1);
    n3.at(1, 2) = GaussRational(1);
    CHECK(jordan_partition(n3, GaussRational(0)) == std::vector<int>{3});

    CHECK(jordan_partition(Matrix::identity(4), GaussRational(1)) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(jordan_partition(Matrix::identity(4), GaussRational(2)).empty());

    /* Companion matrix of (T-1)^3 (T+1): basis cycle with last column from
     * the coefficients of (1-T)^3 (1+T) = 1 - 2T + 2T^3 - T^4. */
    Matrix g(4, 4);
    g.at(1, 0) = GaussRational(1);
    g.at(2, 1) = GaussRational(1);
    g.at(3, 2) = GaussRational(1);
    g.at(0, 3) = GaussRational(1);
    g.at(1, 3) = GaussRational(-2);
    g.at(2, 3) = GaussRational(0);
    g.at(3, 3) = GaussRational(2);
    CHECK(jordan_partition(g, GaussRational(1)) == std::vector<int>{3});
    CHECK(jordan_partition(g, GaussRational(-1)) == std::vector<int>{1});
}

TEST_CASE("rank, determinant, inverse, kernel") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        Matrix m = rnd_matrix(rng, r, c);
        int rk = rank(m);
        Matrix k = kernel_basis(m);
        CHECK(rk + k.cols() == c);
        if (k.cols() > 0) CHECK((m * k).is_zero());
        if (r == c) {
            bool invertible = rk == c;
            CHECK(invertible == (det(m) != GaussRational(0)));
            if (invertible) CHECK(m * inverse(m) == Matrix::identity(r));
        }
    }
}

TEST_CASE("solve") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        Matrix a = rnd_matrix(rng, 4, 4);
        if (rank(a) < 4) continue;
        Matrix b = rnd_matrix(rng, 4, 2);
        Matrix x = solve(a, b);
        CHECK(a * x == b);
    }
}

TEST_CASE("jordan partition sums to generalized eigenspace dimension") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 15; ++it) {
        /* Block-diagonal nilpotent with random block sizes, conjugated randomly. */
        std::vector<int> sizes;
        int n = 0;
        while (n < 5) {
            int s = 1 + static_cast<int>(rng() % 3);
            sizes.push_back(s);
            n += s;
        }
        Matrix m(n, n);
        int off = 0;
        for (int s : sizes) {
            for (int i = 0; i + 1 < s; ++i) m.at(off + i, off + i + 1) = GaussRational(1);
            off += s;
        }
        Matrix t = rnd_matrix(rng, n, n);
        if (rank(t) < n) continue;
        Matrix conj = t * m * inverse(t);
        auto part = jordan_partition(conj, GaussRational(0));
        int total = 0;
        for (int s : part) total += s;
        CHECK(total == n);
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        CHECK(part == sizes);
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly p({GaussRational(1), GaussRational(2)});           /* 1 + 2T */
    Poly q({GaussRational(-1), GaussRational(0), GaussRational(1)}); /* T^2 - 1 */
    CHECK((p * q).degree() == 3);
    auto [quo, rem] = (p * q + p).divmod(p);
    CHECK(rem.is_zero());
    CHECK(quo == q + Poly::constant(GaussRational(1)));
    CHECK(p.pow(3).coeff(3) == GaussRational(8));
    Poly inv = p.series_inverse(6);
    CHECK((p * inv).truncate(6) == Poly::constant(GaussRational(1)));
    CHECK(p.eval(GaussRational(3)) == GaussRational(7));
}

TEST_CASE("cyclotomic polynomials and factorization") {
    CHECK(cyclotomic(1) == Poly({GaussRational(-1), GaussRational(1)}));
    CHECK(cyclotomic(6) == Poly({GaussRational(1), GaussRational(-1), GaussRational(1)}));
    CHECK(cyclotomic(12).degree() == 4);

    auto f = cyclotomic_factorization(cyclotomic(6));
    CHECK(f.complete);
    CHECK(f.factors == std::map<int, int>{{6, 1}});

    auto f2 = cyclotomic_factorization(cyclotomic(3) * cyclotomic(1) * cyclotomic(1));
    CHECK(f2.complete);
    CHECK(f2.factors == std::map<int, int>{{1, 2}, {3, 1}});
    CHECK(factorization_str(f2.factors) == "Phi1^2 Phi3");

    /* T^2 - 2 has no cyclotomic factor. */
    auto f3 = cyclotomic_factorization(Poly({GaussRational(-2), GaussRational(0), GaussRational(1)}));
    CHECK(!f3.complete);
    CHECK(f3.remainder.degree() == 2);

    for (int d1 = 1; d1 <= 30; ++d1)
        for (int d2 = d1; d2 <= 30; d2 += 7) {
            auto g = cyclotomic_factorization(cyclotomic(d1) * cyclotomic(d2));
            CHECK(g.complete);
            std::map<int, int> want;
            ++want[d1];
            ++want[d2];
            CHECK(g.factors == want);
        }
}

TEST_CASE("coxeter element of the rank-2 hexagonal reflection group") {
    /* s1*s2 in the simple-root basis. */
    Matrix s1(2, 2), s2(2, 2);
    s1.at(0, 0) = GaussRational(-1);
    s1.at(0, 1) = GaussRational(1);
    s1.at(1, 1) = GaussRational(1);
    s2.at(0, 0) = GaussRational(1);
    s2.at(1, 0) = GaussRational(3);
    s2.at(1, 1) = GaussRational(-1);
    auto f = cyclotomic_factorization(char_poly(s1 * s2));
    CHECK(f.complete);
    CHECK(f.factors == std::map<int, int>{{6, 1}});
}
