#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "polsyz/polarize.hpp"

using namespace polsyz;

namespace {

struct Pipeline {
    Presentation pres;
    JacobianPair jp;
    JacobianIdealData jac;
    PolarData pd;
};

Pipeline run(const std::vector<Poly>& forms) {
    Pipeline p;
    p.pres = implicitize(forms);
    p.jp = transposed_jacobian(forms);
    p.jac = jacobian_ideal(p.pres);
    p.pd = polar_data(p.pres, p.jp);
    return p;
}

bool has_gen(const Submodule& m, const FreeElem& v) {
    for (const auto& g : m.gens) {
        if (elem_eq(g, v)) return true;
        FreeElem neg = elem_scale(v, Poly::constant(m.nvars, -1));
        if (elem_eq(g, neg)) return true;
    }
    return false;
}

int top_degree(const FreeElem& v) {
    int d = -1;
    for (const auto& p : v) d = std::max(d, p.total_degree());
    return d;
}

} // namespace

TEST_CASE("the pair x^2, x^3: exact generators of both modules") {
    Poly x = Poly::variable(1, 0);
    auto pl = run({x * x, x * x * x});
    // z is generated by (3x, -2); the polar module by (3x^4, -2x^3) after
    // clearing to the primitive representative x^3 * (3x, -2)
    Poly three_x = x * mpq_class(3), m2 = Poly::constant(1, -2);
    REQUIRE(pl.pd.Z_mod.gens.size() == 1);
    CHECK(has_gen(pl.pd.Z_mod, {three_x, m2}));
    REQUIRE(pl.pd.P_mod.gens.size() == 1);
    CHECK(has_gen(pl.pd.P_mod, {x * x * x * x * mpq_class(3), x * x * x * mpq_class(-2)}));
    CHECK(pl.pd.rank_common == 1);
    auto verdict = is_polarizable(pl.pd, pl.jac);
    CHECK(!verdict.verdict);
    CHECK(verdict.route_direct == verdict.route_jacobian);
}

TEST_CASE("the triple x1^3, x1^2 x2, x2^3: degree gap 3 vs 6") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    auto pl = run({x1 * x1 * x1, x1 * x1 * x2, x2 * x2 * x2});
    auto zmin = min_generators(pl.pd.Z_mod);
    auto pmin = min_generators(pl.pd.P_mod);
    int ztop = -1, pbot = 1 << 20;
    for (const auto& g : zmin) ztop = std::max(ztop, top_degree(g));
    for (const auto& g : pmin) pbot = std::min(pbot, top_degree(g));
    CHECK(ztop >= 3);
    // first differential syzygy appears in degree 3, first polar one in 6
    int zbot = 1 << 20;
    for (const auto& g : zmin) zbot = std::min(zbot, top_degree(g));
    CHECK(zbot == 3);
    CHECK(pbot == 6);
    CHECK(!is_polarizable(pl.pd, pl.jac).verdict);
}

TEST_CASE("square-free cubic hypersurface with a codimension-one conductor") {
    Poly x1 = Poly::variable(4, 0), x2 = Poly::variable(4, 1), x3 = Poly::variable(4, 2),
         x4 = Poly::variable(4, 3);
    std::vector<Poly> forms = {x1 * x1, x1 * x2, x2 * x3, x3 * x4, x2 * x4};
    auto pl = run(forms);
    // P is the principal ideal (T2^2 T4 - T1 T3 T5)
    REQUIRE(pl.pres.P_min_gens.size() == 1);
    auto T = [](int i) { return Poly::variable(5, i - 1); };
    Poly g = pl.pres.P_min_gens[0];
    Poly expect = T(2) * T(2) * T(4) - T(1) * T(3) * T(5);
    CHECK((g == expect || g == -expect));
    CHECK(!is_polarizable(pl.pd, pl.jac).verdict);
    ConductorData cd = conductor_height(pl.pd);
    CHECK(cd.height == 1);
    CHECK(!cd.codim1_equal);
    // the conductor fails exactly along (x2): it is contained in (x2) and
    // saturating it there leaves nothing of codimension one
    Ideal x2i = Ideal::ideal(4, {x2});
    CHECK(submodule_contains(x2i, cd.conductor));
    CHECK(height(saturate(cd.conductor, x2i)) >= 2);
}

TEST_CASE("twisted cubic diagnostics") {
    Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
    std::vector<Poly> forms = {s * s * s, s * s * t, s * t * t, t * t * t};
    auto pl = run(forms);
    CHECK(!is_polarizable(pl.pd, pl.jac).verdict);
    SymbolicSquare sq = symbolic_square(pl.pres, pl.jac);
    OmegaData om = omega_diagnostics(pl.pres, pl.jac, pl.pd, sq);
    CHECK(!om.omega_torsionfree);
    CHECK(!om.contracted);
    CHECK(om.contracted_from_extension);
    CHECK(!om.conormal_reflexive);
}

TEST_CASE("structural invariants across small inputs") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    std::vector<std::vector<Poly>> cases = {
        {x * x, x * y, y * y},
        {x * x * x, x * x * y, x * y * y, y * y * y},
        {x * x, y * y, x * y + y * y},
        {x * x * x, y * y * y, x * y * (x + y)},
    };
    for (const auto& forms : cases) {
        auto pl = run(forms);
        INFO("m=" << forms.size());
        // polar subset of z always
        CHECK(submodule_contains(pl.pd.Z_mod, pl.pd.P_mod));
        // common rank is the height of P
        CHECK(pl.pd.rank_common == pl.pres.ht_P);
        CHECK(submodule_rank(pl.pd.Z_mod) == pl.pres.ht_P);
        if (!pl.pd.P_mod.gens.empty())
            CHECK(submodule_rank(pl.pd.P_mod) == pl.pres.ht_P);
        // Jacobian multiplier: JR * z lands in the polar module
        if (!pl.jac.trivial) {
            auto gbp = groebner(pl.pd.P_mod);
            for (const auto& zg : pl.pd.Z_mod.gens)
                for (const auto& jg : pl.jac.JR.gens)
                    CHECK(is_member(elem_scale(zg, jg[0]), *gbp));
        }
        // differential syzygies start in degree >= 2 for quadrics and higher
        auto zmin = min_generators(pl.pd.Z_mod);
        for (const auto& g : zmin) CHECK(top_degree(g) >= 1);
        (void)is_polarizable(pl.pd, pl.jac); // both routes must agree (no throw)
    }
}

TEST_CASE("polar module does not depend on the chosen generators of P") {
    Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
    std::vector<Poly> forms = {s * s * s, s * s * t, s * t * t, t * t * t};
    Presentation pres = implicitize(forms);
    Submodule pm = polar_module(pres);

    // replace the minimal generators by sums and a redundant extra element
    Presentation alt = pres;
    std::vector<Poly> g = pres.P_min_gens;
    alt.P_min_gens = {g[0] + g[1], g[1], g[2] - g[0],
                      Poly::variable(4, 0) * g[1] + g[2]};
    Submodule pm2 = polar_module(alt);
    CHECK(submodule_equal(pm, pm2));
}

TEST_CASE("random generating sets leave the polar module fixed") {
    std::mt19937 rng(5150);
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    std::vector<Poly> forms = {x * x, x * y, y * y};
    Presentation pres = implicitize(forms);
    Submodule pm = polar_module(pres);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int it = 0; it < 25; ++it) {
        // invertible change of generators: unimodular integer combinations
        Presentation alt = pres;
        auto& g = pres.P_min_gens;
        std::vector<Poly> ng;
        for (size_t i = 0; i < g.size(); ++i) {
            Poly s = g[i];
            for (size_t j = 0; j < g.size(); ++j)
                if (j != i) s += g[j] * mpq_class(coeff(rng));
            ng.push_back(s);
        }
        alt.P_min_gens = ng;
        CHECK(submodule_equal(pm, polar_module(alt)));
    }
}
