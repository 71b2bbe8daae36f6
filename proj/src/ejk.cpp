#include "polsyz/ejk.hpp"

#include "polsyz/diff.hpp"

namespace polsyz {

EjkData ejk_build(const Presentation& pres, const JacobianPair& jp) {
    if (!pres.homogeneous)
        throw std::invalid_argument("the Euler-Jacobi-Koszul sequence needs homogeneous forms");
    const int n = pres.n, m = pres.m;
    EjkData e;

    std::vector<FreeElem> ftilde;
    for (int j = 0; j < m; ++j)
        ftilde.push_back({pres.forms[static_cast<size_t>(j)] *
                          mpq_class(pres.form_degrees[static_cast<size_t>(j)])});
    e.Z_ftilde = kernel_of_map(ftilde, n, 1);
    e.Z_ftilde.shifts = pres.form_degrees;
    e.phi = e.Z_ftilde.gens;

    std::vector<FreeElem> jac_cols;
    for (const auto& v : e.phi) {
        FreeElem w(static_cast<size_t>(n), Poly(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                w[static_cast<size_t>(i)] +=
                    jp.theta[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                    v[static_cast<size_t>(j)];
        jac_cols.push_back(std::move(w));
    }
    {
        std::vector<FreeElem> nz;
        for (const auto& w : jac_cols)
            if (!elem_is_zero(w)) nz.push_back(w);
        e.jacobi_image = Submodule::module(n, n, std::move(nz));
    }
    e.intersection = intersect(jp.theta_t_module, koszul_z(n));

    if (!e.phi.empty()) {
        Submodule ker = kernel_of_map(jac_cols, n, n);
        e.psi = ker.gens;
        std::vector<FreeElem> cols;
        for (const auto& s : e.psi) {
            FreeElem w(static_cast<size_t>(m), Poly(n));
            for (size_t t = 0; t < e.phi.size(); ++t)
                for (int c = 0; c < m; ++c)
                    w[static_cast<size_t>(c)] += e.phi[t][static_cast<size_t>(c)] * s[t];
            if (!elem_is_zero(w)) cols.push_back(std::move(w));
        }
        e.Z_via_phi_psi = Submodule::module(n, m, std::move(cols));
    } else {
        e.Z_via_phi_psi = Submodule::module(n, m, {});
    }
    return e;
}

bool ejk_verify(const EjkData& e, const Submodule& zd) {
    if (!submodule_contains(e.Z_ftilde, zd))
        throw ConsistencyError("z is not contained in Z(f~)");
    if (!submodule_contains(e.intersection, e.jacobi_image))
        throw ConsistencyError("a column of Theta^t*phi escapes D(f) and Z(x)");
    if (!submodule_contains(e.jacobi_image, e.intersection))
        throw ConsistencyError("the Jacobi map does not reach all of D(f) \\cap Z(x)");
    if (!submodule_contains(zd, e.Z_via_phi_psi))
        throw ConsistencyError("a column of phi*psi lies outside z");
    if (!submodule_contains(e.Z_via_phi_psi, zd))
        throw ConsistencyError("the columns of phi*psi do not span z");
    return true;
}

} // namespace polsyz
