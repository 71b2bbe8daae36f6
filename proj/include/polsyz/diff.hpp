#ifndef POLSYZ_DIFF_HPP
#define POLSYZ_DIFF_HPP

#include "polsyz/gb.hpp"

namespace polsyz {

// Jacobian matrix of the forms and the transposed Jacobian module: the
// R-span of the columns of Theta^t (the differentials df_j in the dx_i basis).
struct JacobianPair {
    std::vector<std::vector<Poly>> theta;   // m x n, theta[j][i] = df_j/dx_i
    std::vector<FreeElem> theta_t_columns;  // m columns in R^n, column j = df_j
    Submodule theta_t_module;               // their span in R^n
    int rank = 0;                           // rank of theta over Frac(R)
};

JacobianPair transposed_jacobian(const std::vector<Poly>& forms);

// syzygy module of (x_1..x_n): the Koszul relations x_i e_j - x_j e_i
Submodule koszul_z(int nvars);

} // namespace polsyz

#endif
