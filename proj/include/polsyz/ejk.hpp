#ifndef POLSYZ_EJK_HPP
#define POLSYZ_EJK_HPP

#include "polsyz/polarize.hpp"

namespace polsyz {

// Euler-Jacobi-Koszul data: 0 -> z -> Z(f~) -> D(f) \cap Z(x) -> 0,
// with f~ the degree-scaled forms and j(v) = Theta^t v
struct EjkData {
    Submodule Z_ftilde;            // syzygies of (d_1 f_1, ..., d_m f_m), in R^m
    std::vector<FreeElem> phi;     // its generator columns
    Submodule jacobi_image;        // columns of Theta^t * phi, in R^n
    Submodule intersection;        // D(f) \cap Z(x), in R^n
    std::vector<FreeElem> psi;     // syzygy columns of Theta^t * phi
    Submodule Z_via_phi_psi;       // nonnull columns of phi * psi, in R^m
};

EjkData ejk_build(const Presentation& pres, const JacobianPair& jp);

// asserts the sequence invariants against z from the polar module; throws
// ConsistencyError naming the failed identity
bool ejk_verify(const EjkData& e, const Submodule& zd);

} // namespace polsyz

#endif
