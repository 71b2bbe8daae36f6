#ifndef POLSYZ_ALGEBRA_HPP
#define POLSYZ_ALGEBRA_HPP

#include "polsyz/gb.hpp"

namespace polsyz {

// A = k[f_1..f_m] presented as k[T]/P via T_j -> f_j.  Variables of k[T]
// carry weights deg(f_j), so P is graded even for mixed-degree forms.
struct Presentation {
    std::vector<Poly> forms; // in R = k[x_1..x_n]
    std::vector<int> form_degrees;
    int n = 0; // x-variable count
    int m = 0; // form / T-variable count
    bool homogeneous = false;
    bool same_degree = false;

    Ideal P;                         // in k[T], generated by P_min_gens
    std::vector<Poly> P_min_gens;
    std::vector<int> P_gen_degrees;  // standard T-degrees
    int ht_P = 0;
    int dim_A = 0;
};

Presentation implicitize(const std::vector<Poly>& forms);

struct JacobianIdealData {
    bool trivial = false;              // ht P = 0: A is a polynomial ring
    std::vector<std::vector<Poly>> theta_T; // Jacobian of P_min_gens over k[T]
    std::vector<Poly> J_lift;          // pruned g-minors in k[T], each nonzero mod P
    Ideal J_lift_ideal;                // the ideal they generate in k[T]
    Ideal JR;                          // extended ideal in R
};

JacobianIdealData jacobian_ideal(const Presentation& pres);

struct SymbolicSquare {
    Ideal P2;        // P^2
    Ideal P2_sym;    // P^(2) = P^2 : J'^infinity
    bool equals_square = false;
};

SymbolicSquare symbolic_square(const Presentation& pres, const JacobianIdealData& jac);

struct CiCmFlags {
    int mu_P = 0;
    bool is_complete_intersection = false;
    bool is_almost_ci = false;
    bool is_cohen_macaulay = false;
    int pd_quotient = 0; // pd of k[T]/P
    int ecodim = 0;
    bool ecodim_valid = false; // all forms of degree >= 2
};

CiCmFlags ci_cm_flags(const Presentation& pres);

} // namespace polsyz

#endif
