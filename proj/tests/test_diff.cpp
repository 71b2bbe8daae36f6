#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "polsyz/diff.hpp"

using namespace polsyz;

namespace {

Poly random_form(std::mt19937& rng, int nvars, int deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    // random homogeneous polynomial of the exact given degree
    std::vector<Term> ts;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[static_cast<size_t>(i)] = left;
            int c = coeff(rng);
            if (c) ts.push_back({Monomial(e), mpq_class(c)});
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<size_t>(i)] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, deg);
    Poly p = Poly::from_terms(nvars, std::move(ts));
    return p.is_zero() ? Poly::variable(nvars, 0, deg) : p;
}

} // namespace

TEST_CASE("Euler identity for homogeneous forms") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + it % 3;
        int d = 2 + it % 4;
        Poly f = random_form(rng, n, d);
        auto jp = transposed_jacobian({f});
        Poly euler = Poly::zero(n);
        for (int i = 0; i < n; ++i) euler += Poly::variable(n, i) * jp.theta[0][static_cast<size_t>(i)];
        CHECK(euler == f * mpq_class(d));
    }
}

TEST_CASE("Jacobian layout and transpose columns") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    auto jp = transposed_jacobian({x * x * y, y * y * y});
    REQUIRE(jp.theta.size() == 2);
    REQUIRE(jp.theta[0].size() == 2);
    CHECK(jp.theta[0][0] == x * y * mpq_class(2));
    CHECK(jp.theta[0][1] == x * x);
    CHECK(jp.theta[1][0] == Poly::zero(2));
    CHECK(jp.theta[1][1] == y * y * mpq_class(3));
    REQUIRE(jp.theta_t_columns.size() == 2);
    CHECK(jp.theta_t_columns[0][0] == jp.theta[0][0]);
    CHECK(jp.theta_t_columns[0][1] == jp.theta[0][1]);
    CHECK(jp.theta_t_module.rank == 2);
    CHECK(jp.rank == 2);
}

TEST_CASE("Jacobian rank detects algebraic dependence") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    // f2 = f1^2: rank 1
    auto dep = transposed_jacobian({x * y, x * x * y * y});
    CHECK(dep.rank == 1);
    auto indep = transposed_jacobian({x * x, y * y});
    CHECK(indep.rank == 2);
    // more forms than variables never exceed n
    auto many = transposed_jacobian({x * x, x * y, y * y});
    CHECK(many.rank == 2);
}

TEST_CASE("koszul_z is exactly the syzygy module of the variables") {
    for (int n = 2; n <= 4; ++n) {
        Submodule k = koszul_z(n);
        CHECK(k.rank == n);
        CHECK(static_cast<int>(k.gens.size()) == n * (n - 1) / 2);
        std::vector<Poly> vars;
        for (int i = 0; i < n; ++i) vars.push_back(Poly::variable(n, i));
        for (const auto& g : k.gens) {
            Poly dot = Poly::zero(n);
            for (int i = 0; i < n; ++i) dot += g[static_cast<size_t>(i)] * vars[static_cast<size_t>(i)];
            CHECK(dot.is_zero());
        }
        Submodule syz = syzygies(Submodule::module(
            n, 1, [&] {
                std::vector<FreeElem> gs;
                for (auto& v : vars) gs.push_back({v});
                return gs;
            }()));
        CHECK(submodule_equal(k, syz));
    }
}

TEST_CASE("gradient columns of random forms satisfy their own syzygies") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 50; ++it) {
        std::vector<Poly> forms = {random_form(rng, 3, 2), random_form(rng, 3, 2),
                                   random_form(rng, 3, 3)};
        auto jp = transposed_jacobian(forms);
        Submodule z = syzygies(jp.theta_t_module);
        for (const auto& s : z.gens) {
            for (int i = 0; i < 3; ++i) {
                Poly dot = Poly::zero(3);
                for (size_t j = 0; j < forms.size(); ++j)
                    dot += s[j] * jp.theta_t_columns[j][static_cast<size_t>(i)];
                CHECK(dot.is_zero());
            }
        }
    }
}
