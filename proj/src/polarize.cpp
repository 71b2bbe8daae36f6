#include "polsyz/polarize.hpp"

namespace polsyz {

namespace {

// the relations p*e_c, p over the generators of P, in k[T]^rank
std::vector<FreeElem> p_times_basis(const Presentation& pres, int rank) {
    std::vector<FreeElem> out;
    for (const auto& p : pres.P_min_gens)
        for (int c = 0; c < rank; ++c) {
            FreeElem w(static_cast<size_t>(rank), Poly(pres.m));
            w[static_cast<size_t>(c)] = p;
            out.push_back(std::move(w));
        }
    return out;
}

} // namespace

Submodule polar_module(const Presentation& pres) {
    std::vector<FreeElem> gens;
    for (const auto& F : pres.P_min_gens) {
        FreeElem v(static_cast<size_t>(pres.m), Poly(pres.n));
        for (int j = 0; j < pres.m; ++j)
            v[static_cast<size_t>(j)] = F.derivative(j).substitute(pres.forms);
        gens.push_back(std::move(v));
    }
    Submodule p = Submodule::module(pres.n, pres.m, std::move(gens));
    p.shifts = pres.form_degrees;
    return p;
}

Submodule differential_syzygies(const Presentation& pres, const JacobianPair& jp) {
    Submodule z = kernel_of_map(jp.theta_t_columns, pres.n, pres.n);
    z.shifts = pres.form_degrees;
    return z;
}

PolarData polar_data(const Presentation& pres, const JacobianPair& jp) {
    PolarData pd;
    pd.P_mod = polar_module(pres);
    pd.Z_mod = differential_syzygies(pres, jp);
    pd.rank_common = pres.ht_P;
    return pd;
}

PolarVerdict is_polarizable(const PolarData& pd, const JacobianIdealData& jac) {
    PolarVerdict v;
    v.route_direct = submodule_contains(pd.P_mod, pd.Z_mod);
    v.route_jacobian = colon_mod_is_trivial(pd.P_mod, jac.JR);
    if (v.route_direct != v.route_jacobian)
        throw ConsistencyError("polarizability routes disagree: direct containment says " +
                               std::string(v.route_direct ? "yes" : "no") +
                               ", Jacobian colon test says the opposite");
    v.verdict = v.route_direct;
    return v;
}

ConductorData conductor_height(const PolarData& pd) {
    ConductorData c;
    c.conductor = colon(pd.P_mod, pd.Z_mod);
    c.height = c.conductor.gens.empty() ? 0 : height(c.conductor);
    bool unit = !c.conductor.gens.empty() && dimension(c.conductor) == -1;
    c.codim1_equal = unit || c.height >= 2;
    return c;
}

Submodule contract_module(const Submodule& m_in_R, const Presentation& pres) {
    const int n = pres.n, m = pres.m, total = n + m;
    std::vector<FreeElem> gens;
    for (const auto& g : m_in_R.gens) {
        FreeElem w;
        for (const auto& e : g) w.push_back(e.embed(total, 0));
        gens.push_back(std::move(w));
    }
    for (int j = 0; j < m; ++j) {
        Poly rel = Poly::variable(total, n + j) -
                   pres.forms[static_cast<size_t>(j)].embed(total, 0);
        for (int c = 0; c < m; ++c) {
            FreeElem w(static_cast<size_t>(m), Poly(total));
            w[static_cast<size_t>(c)] = rel;
            gens.push_back(std::move(w));
        }
    }
    Submodule big = Submodule::module(total, m, std::move(gens));
    Submodule out = eliminate_module(big, n);
    out.var_weights = pres.form_degrees;
    out.shifts = pres.form_degrees;
    return out;
}

OmegaData omega_diagnostics(const Presentation& pres, const JacobianIdealData& jac,
                            const PolarData& pd, const SymbolicSquare& sq,
                            bool with_reflexivity) {
    OmegaData o;
    std::vector<FreeElem> cgens;
    for (const auto& F : pres.P_min_gens) {
        FreeElem v;
        for (int j = 0; j < pres.m; ++j) v.push_back(F.derivative(j));
        cgens.push_back(std::move(v));
    }
    for (auto& w : p_times_basis(pres, pres.m)) cgens.push_back(std::move(w));
    o.conormal_image = Submodule::module(pres.m, pres.m, std::move(cgens));
    o.conormal_image.var_weights = pres.form_degrees;
    o.conormal_image.shifts = pres.form_degrees;

    o.torsion_lift = jac.trivial ? o.conormal_image : saturate(o.conormal_image, jac.J_lift_ideal);
    o.contraction = contract_module(pd.Z_mod, pres);
    if (!submodule_equal(o.torsion_lift, o.contraction))
        throw ConsistencyError(
            "torsion lift of the conormal image differs from the contraction of z");

    o.omega_torsionfree = submodule_contains(o.conormal_image, o.torsion_lift);
    o.contracted = submodule_contains(o.conormal_image, o.contraction);
    Submodule ext_c = contract_module(pd.P_mod, pres);
    o.contracted_from_extension = submodule_contains(o.conormal_image, ext_c);
    if (with_reflexivity)
        o.conormal_reflexive = is_reflexive(conormal_presentation(pres, sq), pres, jac);
    return o;
}

APresentation conormal_presentation(const Presentation& pres, const SymbolicSquare& sq) {
    APresentation ap;
    ap.m0 = static_cast<int>(pres.P_min_gens.size());
    if (ap.m0 == 0) return ap;
    // relations of P/P^(2) over A: a with sum a_i F_i in P^(2)
    std::vector<FreeElem> cols;
    for (const auto& F : pres.P_min_gens) cols.push_back({F});
    for (const auto& g : sq.P2_sym.gens) cols.push_back(g);
    Submodule ker = kernel_of_map(cols, pres.m, 1);
    for (const auto& s : ker.gens) {
        FreeElem a(s.begin(), s.begin() + ap.m0);
        if (!elem_is_zero(a)) ap.rel.push_back(std::move(a));
    }
    return ap;
}

namespace {

// generators u in k[T]^q of Hom_A(coker, A) lifted to k[T]: u with u.r_t in P
// for every relation r_t (P*e_c relations included by the caller's list)
std::vector<FreeElem> dual_generators(const std::vector<FreeElem>& rels, int q,
                                      const Presentation& pres) {
    const int s = static_cast<int>(rels.size());
    if (s == 0) {
        // free module: dual generated by the coordinate vectors
        std::vector<FreeElem> out;
        for (int i = 0; i < q; ++i) {
            FreeElem u(static_cast<size_t>(q), Poly(pres.m));
            u[static_cast<size_t>(i)] = Poly::constant(pres.m, 1);
            out.push_back(std::move(u));
        }
        return out;
    }
    std::vector<FreeElem> cols;
    for (int i = 0; i < q; ++i) {
        FreeElem col;
        for (int t = 0; t < s; ++t) col.push_back(rels[static_cast<size_t>(t)][static_cast<size_t>(i)]);
        cols.push_back(std::move(col));
    }
    for (int t = 0; t < s; ++t)
        for (const auto& p : pres.P_min_gens) {
            FreeElem col(static_cast<size_t>(s), Poly(pres.m));
            col[static_cast<size_t>(t)] = p;
            cols.push_back(std::move(col));
        }
    Submodule ker = kernel_of_map(cols, pres.m, s);
    std::vector<FreeElem> out;
    for (const auto& g : ker.gens) {
        FreeElem u(g.begin(), g.begin() + q);
        if (!elem_is_zero(u)) out.push_back(std::move(u));
    }
    return out;
}

// relations over A among given vectors in k[T]^q
std::vector<FreeElem> relations_over_A(const std::vector<FreeElem>& vecs, int q,
                                       const Presentation& pres) {
    std::vector<FreeElem> cols = vecs;
    for (const auto& p : pres.P_min_gens)
        for (int c = 0; c < q; ++c) {
            FreeElem col(static_cast<size_t>(q), Poly(pres.m));
            col[static_cast<size_t>(c)] = p;
            cols.push_back(std::move(col));
        }
    Submodule ker = kernel_of_map(cols, pres.m, q);
    std::vector<FreeElem> out;
    const size_t k = vecs.size();
    for (const auto& g : ker.gens) {
        FreeElem a(g.begin(), g.begin() + static_cast<long>(k));
        if (!elem_is_zero(a)) out.push_back(std::move(a));
    }
    return out;
}

} // namespace

bool is_reflexive(const APresentation& ap, const Presentation& pres,
                  const JacobianIdealData& jac) {
    if (ap.m0 == 0) return true;
    // torsion first, via Jacobian saturation of the relation module
    std::vector<FreeElem> full_rel = ap.rel;
    for (auto& w : p_times_basis(pres, ap.m0)) full_rel.push_back(std::move(w));
    Submodule N = Submodule::module(pres.m, ap.m0, full_rel);
    N.var_weights = pres.form_degrees;
    if (!jac.trivial && !submodule_contains(N, saturate(N, jac.J_lift_ideal))) return false;

    std::vector<FreeElem> mstar = dual_generators(full_rel, ap.m0, pres);
    const int m1 = static_cast<int>(mstar.size());
    if (m1 == 0) return false; // M* = 0 < M** impossible; M** = 0 too, but then ev can't hit M** gens unless M torsion
    std::vector<FreeElem> rel_star = relations_over_A(mstar, ap.m0, pres);
    std::vector<FreeElem> full_rel_star = rel_star;
    for (auto& w : p_times_basis(pres, m1)) full_rel_star.push_back(std::move(w));
    std::vector<FreeElem> mstarstar = dual_generators(full_rel_star, m1, pres);

    // image of evaluation: ev(e_i) = (u_1[i], ..., u_m1[i])
    std::vector<FreeElem> ev;
    for (int i = 0; i < ap.m0; ++i) {
        FreeElem v;
        for (const auto& u : mstar) v.push_back(u[static_cast<size_t>(i)]);
        ev.push_back(std::move(v));
    }
    for (auto& w : p_times_basis(pres, m1)) ev.push_back(std::move(w));
    Submodule image = Submodule::module(pres.m, m1, std::move(ev));
    image.var_weights = pres.form_degrees;
    auto gb = groebner(image);
    for (const auto& w : mstarstar)
        if (!is_member(w, *gb)) return false;
    return true;
}

} // namespace polsyz
