#ifndef POLSYZ_POLY_HPP
#define POLSYZ_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polsyz/order.hpp"

namespace polsyz {

struct Term {
    Monomial m;
    mpq_class c;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted descending
// by degrevlex; no zero coefficients are stored.  Immutable in spirit: all
// operations return fresh values.
class Poly {
  public:
    Poly() : nv_(0) {}
    explicit Poly(int nvars) : nv_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const mpq_class& c);
    static Poly variable(int nvars, int i, int exp = 1);
    static Poly monomial(Monomial m, const mpq_class& c);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    int total_degree() const; // -1 for the zero polynomial
    int weighted_degree(const std::vector<int>& w) const;
    bool is_homogeneous() const;
    bool is_homogeneous(const std::vector<int>& w) const;

    Poly operator-() const;
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    Poly operator*(const mpq_class& s) const;
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    bool operator==(const Poly& q) const;
    bool operator!=(const Poly& q) const { return !(*this == q); }

    // primitive integral representative: divide by rational content, lead
    // coefficient positive
    Poly normalized() const;
    Poly monic(const MonomialOrder& ord) const;

    const Term& lead(const MonomialOrder& ord) const;

    Poly derivative(int var) const;

    // ring homomorphism sending variable i to images[i]
    Poly substitute(const std::vector<Poly>& images) const;

    // same polynomial in a ring with `nvars` variables, variable i mapped to
    // offset + i
    Poly embed(int nvars, int offset) const;
    // inverse of embed: keep variables [offset, offset+nvars), which must be
    // the only ones appearing
    Poly project(int nvars, int offset) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const; // x0,x1,... fallback names

    // builds the term list from arbitrary input (sorts, strips zeros)
    static Poly from_terms(int nvars, std::vector<Term> ts);

  private:
    int nv_;
    std::vector<Term> terms_;
};

// exact quotient a/b; throws if not divisible (used by fraction-free
// elimination where divisibility is guaranteed)
Poly exact_div(const Poly& a, const Poly& b);

// rank over Frac(R) by Bareiss fraction-free elimination
int matrix_rank(std::vector<std::vector<Poly>> m);

std::string format_rational(const mpq_class& q);

} // namespace polsyz

#endif
