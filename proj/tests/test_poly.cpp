#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polsyz/poly.hpp"

using namespace polsyz;

namespace {

Poly random_poly(std::mt19937& rng, int nvars, int maxdeg, int maxterms) {
    std::uniform_int_distribution<int> nt(0, maxterms);
    std::uniform_int_distribution<int> e(0, maxdeg);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> ts;
    int k = nt(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        int left = maxdeg;
        for (int i = 0; i < nvars; ++i) {
            int ei = e(rng) % (left + 1);
            m.e.push_back(ei);
            left -= ei;
        }
        ts.push_back({m, mpq_class(coeff(rng))});
    }
    return Poly::from_terms(nvars, std::move(ts));
}

} // namespace

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 250; ++it) {
        Poly a = random_poly(rng, 3, 4, 5), b = random_poly(rng, 3, 4, 5),
             c = random_poly(rng, 3, 4, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly::zero(3));
        CHECK(a * Poly::zero(3) == Poly::zero(3));
    }
}

TEST_CASE("degrees and homogeneity") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK(Poly::zero(2).total_degree() == -1);
    CHECK((x * x + y).total_degree() == 2);
    CHECK((x * x + y).is_homogeneous() == false);
    CHECK((x * x + y).is_homogeneous({1, 2}) == true);
    CHECK((x * x * y - y * y * x).is_homogeneous());
    CHECK((x * x).weighted_degree({3, 1}) == 6);
}

TEST_CASE("derivative is a derivation") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(rng, 2, 3, 4), b = random_poly(rng, 2, 3, 4);
        for (int v = 0; v < 2; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
    Poly x = Poly::variable(1, 0);
    CHECK((x * x * x).derivative(0) == x * x * mpq_class(3));
}

TEST_CASE("substitution is a ring map") {
    std::mt19937 rng(99);
    for (int it = 0; it < 150; ++it) {
        Poly a = random_poly(rng, 2, 3, 3), b = random_poly(rng, 2, 3, 3);
        std::vector<Poly> im = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
        CHECK((a + b).substitute(im) == a.substitute(im) + b.substitute(im));
        CHECK((a * b).substitute(im) == a.substitute(im) * b.substitute(im));
    }
}

TEST_CASE("embed and project round-trip") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(rng, 2, 4, 4);
        CHECK(a.embed(5, 2).project(2, 2) == a);
    }
}

TEST_CASE("normalized gives a primitive integral representative") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = x * mpq_class(-2, 3) + y * mpq_class(4, 3);
    Poly n = p.normalized();
    CHECK(n == x - y * mpq_class(2));
    CHECK(Poly::zero(2).normalized() == Poly::zero(2));
}

TEST_CASE("exact division") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 100) {
        Poly a = random_poly(rng, 2, 3, 3), b = random_poly(rng, 2, 2, 3);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
        ++done;
    }
    Poly x = Poly::variable(1, 0);
    CHECK_THROWS(exact_div(x + Poly::constant(1, 1), x));
}

TEST_CASE("matrix rank over the fraction field") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly one = Poly::constant(2, 1), zero = Poly::zero(2);
    CHECK(matrix_rank({{one, zero}, {zero, one}}) == 2);
    CHECK(matrix_rank({{x, y}, {x * x, x * y}}) == 1);
    CHECK(matrix_rank({{x, y}, {y, x}}) == 2);
    CHECK(matrix_rank({{zero, zero}, {zero, zero}}) == 0);
    // 3x2, rank 2
    CHECK(matrix_rank({{x, y}, {y, x}, {x + y, x + y}}) == 2);
}

TEST_CASE("rendering uses explicit operators in degrevlex order") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = x * x - y * y * mpq_class(2) + Poly::constant(2, mpq_class(1, 3));
    CHECK(p.str({"x", "y"}) == "x^2 - 2*y^2 + 1/3");
    CHECK(Poly::zero(2).str({"x", "y"}) == "0");
}
