#ifndef POLSYZ_ORDER_HPP
#define POLSYZ_ORDER_HPP

#include "polsyz/monomial.hpp"

namespace polsyz {

enum class OrderKind {
    Degrevlex,
    Lex,
    Block,    // elimination order: first `block` variables dominate
    Weighted, // weight vector first, degrevlex tie-break
};

// Total multiplicative well-order on monomials.
struct MonomialOrder {
    OrderKind kind = OrderKind::Degrevlex;
    int block = 0;            // Block: number of leading variables eliminated
    std::vector<int> weights; // Weighted

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0, {}}; }
    static MonomialOrder elimination(int k) { return {OrderKind::Block, k, {}}; }
    static MonomialOrder weighted(std::vector<int> w) {
        return {OrderKind::Weighted, 0, std::move(w)};
    }

    // degrevlex on the index range [lo, hi)
    static int cmp_drl_range(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    // -1: a < b, 0: equal, 1: a > b
    int cmp(const Monomial& a, const Monomial& b) const {
        const int n = a.nvars();
        switch (kind) {
        case OrderKind::Degrevlex:
            return cmp_drl_range(a, b, 0, n);
        case OrderKind::Lex:
            for (int i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case OrderKind::Block: {
            if (int c = cmp_drl_range(a, b, 0, block)) return c;
            return cmp_drl_range(a, b, block, n);
        }
        case OrderKind::Weighted: {
            int da = a.weighted_degree(weights), db = b.weighted_degree(weights);
            if (da != db) return da < db ? -1 : 1;
            return cmp_drl_range(a, b, 0, n);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

// Order on module monomials (component, monomial).  `elim_vars` makes it an
// elimination order for the first variables regardless of component; then
// position-over-term (lower component index wins) or term-over-position.
struct ModuleOrder {
    MonomialOrder base;
    int elim_vars = 0;
    bool pot = true;
    std::vector<int> shifts; // degree of basis vector e_c, grading only

    int shift(int c) const {
        return shifts.empty() ? 0 : shifts[static_cast<size_t>(c)];
    }

    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
        if (elim_vars > 0)
            if (int c = MonomialOrder::cmp_drl_range(m1, m2, 0, elim_vars)) return c;
        if (pot) {
            if (c1 != c2) return c1 > c2 ? -1 : 1;
            return base.cmp(m1, m2);
        }
        int d1 = m1.degree() + shift(c1), d2 = m2.degree() + shift(c2);
        if (d1 != d2) return d1 < d2 ? -1 : 1;
        if (int c = base.cmp(m1, m2)) return c;
        if (c1 != c2) return c1 > c2 ? -1 : 1;
        return 0;
    }
};

} // namespace polsyz

#endif
