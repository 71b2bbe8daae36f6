#ifndef POLSYZ_GB_HPP
#define POLSYZ_GB_HPP

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>

#include "polsyz/poly.hpp"

namespace polsyz {

// element of a free module R^rank
using FreeElem = std::vector<Poly>;

bool elem_is_zero(const FreeElem& v);
FreeElem elem_zero(int nvars, int rank);
FreeElem elem_add(const FreeElem& a, const FreeElem& b);
FreeElem elem_sub(const FreeElem& a, const FreeElem& b);
FreeElem elem_scale(const FreeElem& a, const Poly& s);
bool elem_eq(const FreeElem& a, const FreeElem& b);

// finitely generated submodule of R^rank, with grading bookkeeping:
// deg(e_c) = shifts[c] (0 when empty), variable weights var_weights (1 when
// empty).  A Groebner basis is cached per computation.
struct GroebnerBasis;

struct Submodule {
    int nvars = 0;
    int rank = 1;
    std::vector<FreeElem> gens;
    std::vector<int> shifts;
    std::vector<int> var_weights;

    mutable std::shared_ptr<const GroebnerBasis> cached_gb;

    static Submodule ideal(int nvars, std::vector<Poly> ps);
    static Submodule module(int nvars, int rank, std::vector<FreeElem> gs);

    std::vector<Poly> as_polys() const; // rank 1 only
    bool is_zero() const;

    int shift(int c) const { return shifts.empty() ? 0 : shifts[static_cast<size_t>(c)]; }
    // degree of a homogeneous element under shifts/weights; -1 for zero
    int elem_degree(const FreeElem& v) const;
    bool elem_homogeneous(const FreeElem& v) const;
};

using Ideal = Submodule;

struct MTerm {
    int comp;
    Monomial m;
    mpq_class c;
};
using Vec = std::vector<MTerm>; // sorted descending under the active order

struct GroebnerBasis {
    ModuleOrder ord;
    int nvars = 0;
    int rank = 1;
    std::vector<Vec> elems; // auto-reduced, primitive, sorted by lead
};

struct TimeoutError : std::runtime_error {
    TimeoutError() : std::runtime_error("computation exceeded its deadline") {}
};

// Per-thread wall-clock guard; Buchberger loops poll it.
class ScopedDeadline {
  public:
    explicit ScopedDeadline(std::chrono::seconds budget);
    ~ScopedDeadline();
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;
};

ModuleOrder default_order(const Submodule& m);

// Buchberger with normal (minimal lcm degree) pair selection; result is
// auto-reduced and deterministic for fixed input sequence and order.
std::shared_ptr<const GroebnerBasis> groebner(const Submodule& m);
std::shared_ptr<const GroebnerBasis> groebner(const Submodule& m, const ModuleOrder& ord);

FreeElem normal_form(const FreeElem& v, const GroebnerBasis& gb);
bool is_member(const FreeElem& v, const GroebnerBasis& gb);
// every generator of inner reduces to 0 against GB(outer)
bool submodule_contains(const Submodule& outer, const Submodule& inner);
bool submodule_equal(const Submodule& a, const Submodule& b);

// kernel of R^{#gens} -> M, e_i -> g_i (tag-component method)
Submodule syzygies(const Submodule& m);

// I in k[y_1..y_k, z_1..z_{n-k}]; returns I \cap k[z] as an ideal in n-k vars
Ideal eliminate(const Ideal& i, int elim_vars);
// same for submodules of free modules; components survive, variables project
Submodule eliminate_module(const Submodule& m, int elim_vars);

Ideal colon_elem(const Submodule& m, const FreeElem& v); // {r : r v in M}
Ideal colon(const Submodule& m, const Submodule& n);     // {r : r N in M}
Submodule colon_mod(const Submodule& m, const Ideal& j); // {v : J v in M}
// early-exit containment test: colon_mod(m, j) == m ?
bool colon_mod_is_trivial(const Submodule& m, const Ideal& j);
Submodule saturate(const Submodule& m, const Ideal& j);
Submodule intersect(const Submodule& m, const Submodule& n);

// kernel of the map R^p -> R^q given by a q x p matrix (columns in R^q)
Submodule kernel_of_map(const std::vector<FreeElem>& columns, int nvars, int q);

// minimal homogeneous generating set (graded Nakayama)
std::vector<FreeElem> min_generators(const Submodule& m);
int mu(const Submodule& m);

struct GradedResolution {
    // steps[0] = minimal generators of M (columns in R^rank);
    // steps[i>0] = minimal generators of the i-th syzygy module
    std::vector<std::vector<FreeElem>> steps;
    std::vector<std::vector<int>> degrees; // generator degrees per step
    int pd() const { return static_cast<int>(steps.size()) - 1; }
    std::vector<int> betti() const;
};

GradedResolution free_resolution(const Submodule& m);

// Krull dimension of R/I from the lead-term ideal (independent sets);
// dimension(unit ideal) = -1
int dimension(const Ideal& i);
int height(const Ideal& i);

int submodule_rank(const Submodule& m); // rank over Frac(R)

} // namespace polsyz

#endif
