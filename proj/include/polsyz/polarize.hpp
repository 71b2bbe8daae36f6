#ifndef POLSYZ_POLARIZE_HPP
#define POLSYZ_POLARIZE_HPP

#include "polsyz/algebra.hpp"
#include "polsyz/diff.hpp"

namespace polsyz {

// a theorem-backed identity failed to verify; the pipeline aborts rather
// than report from a computation it cannot trust
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct PolarData {
    Submodule P_mod;     // polar syzygy module, in R^m
    Submodule Z_mod;     // differential syzygy module ker(Theta^t), in R^m
    int rank_common = 0; // = ht P = rank of both
};

// generated by the evaluated T-gradients of the minimal generators of P
Submodule polar_module(const Presentation& pres);
Submodule differential_syzygies(const Presentation& pres, const JacobianPair& jp);
PolarData polar_data(const Presentation& pres, const JacobianPair& jp);

struct PolarVerdict {
    bool verdict = false;
    bool route_direct = false;   // GB containment z <= polar
    bool route_jacobian = false; // polar : JR == polar
};

// decides polarizability by two independent routes; throws ConsistencyError
// if they disagree
PolarVerdict is_polarizable(const PolarData& pd, const JacobianIdealData& jac);

struct ConductorData {
    Ideal conductor; // polar :_R z
    int height = 0;
    bool codim1_equal = false; // equality in codimension one
};

ConductorData conductor_height(const PolarData& pd);

struct OmegaData {
    // all three live in k[T]^m and contain P*(free basis)
    Submodule conormal_image; // span of dF over min gens of P, plus P-relations
    Submodule torsion_lift;   // saturation of the conormal image by the Jacobian ideal
    Submodule contraction;    // contraction of z

    bool omega_torsionfree = false;
    bool contracted = false;                // conormal image = contraction of z
    bool contracted_from_extension = false; // conormal image = contraction of polar
    bool conormal_reflexive = false;        // P/P^(2) reflexive over A
};

// full section-2 diagnostics; throws ConsistencyError if torsion_lift and
// contraction differ
OmegaData omega_diagnostics(const Presentation& pres, const JacobianIdealData& jac,
                            const PolarData& pd, const SymbolicSquare& sq,
                            bool with_reflexivity = true);

// contraction of a submodule of R^m to k[T]^m along T_j -> f_j
// (graph relations adjoined, x-block eliminated); result contains P*(basis)
Submodule contract_module(const Submodule& m_in_R, const Presentation& pres);

// module over A = k[T]/P given by k[T]-relations among m0 generators;
// the relations P*e_c are implicit and adjoined by every computation
struct APresentation {
    int m0 = 0;
    std::vector<FreeElem> rel; // in k[T]^m0
};

APresentation conormal_presentation(const Presentation& pres, const SymbolicSquare& sq);

// M reflexive over A: torsionfree (Jacobian saturation adds nothing) and the
// evaluation map M -> M** is surjective
bool is_reflexive(const APresentation& ap, const Presentation& pres,
                  const JacobianIdealData& jac);

} // namespace polsyz

#endif
