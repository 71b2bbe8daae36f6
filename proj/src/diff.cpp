#include "polsyz/diff.hpp"

namespace polsyz {

JacobianPair transposed_jacobian(const std::vector<Poly>& forms) {
    if (forms.empty()) throw std::invalid_argument("transposed_jacobian: no forms");
    const int n = forms[0].nvars();
    JacobianPair jp;
    for (const auto& f : forms) {
        if (f.is_zero()) throw std::invalid_argument("transposed_jacobian: zero form");
        std::vector<Poly> row;
        FreeElem col;
        for (int i = 0; i < n; ++i) {
            Poly d = f.derivative(i);
            row.push_back(d);
            col.push_back(d);
        }
        jp.theta.push_back(std::move(row));
        jp.theta_t_columns.push_back(std::move(col));
    }
    jp.theta_t_module = Submodule::module(n, n, jp.theta_t_columns);
    // grading: df_j columns are homogeneous of degree deg f_j - 1 when the
    // forms are homogeneous; ambient basis dx_i has shift 0
    jp.rank = matrix_rank(jp.theta);
    return jp;
}

Submodule koszul_z(int nvars) {
    if (nvars < 1) throw std::invalid_argument("koszul_z: need at least one variable");
    std::vector<FreeElem> gens;
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            FreeElem v = elem_zero(nvars, nvars);
            v[static_cast<size_t>(j)] = Poly::variable(nvars, i);
            v[static_cast<size_t>(i)] = -Poly::variable(nvars, j);
            gens.push_back(std::move(v));
        }
    return Submodule::module(nvars, nvars, std::move(gens));
}

} // namespace polsyz
