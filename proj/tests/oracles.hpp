// Test-only linear-algebra oracles, independent of the Groebner engine:
// degree-truncated Macaulay-matrix implicitization and the Zariski-Nagata
// criterion for the second symbolic power.
#ifndef POLSYZ_TESTS_ORACLES_HPP
#define POLSYZ_TESTS_ORACLES_HPP

#include <functional>
#include <map>

#include "polsyz/algebra.hpp"

namespace polsyz::oracle {

inline void monomials_of_wdeg(int nv, const std::vector<int>& w, int target,
                              std::vector<Monomial>& out) {
    Monomial m;
    m.e.assign(static_cast<size_t>(nv), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nv) {
            if (left == 0) out.push_back(m);
            return;
        }
        int wt = w.empty() ? 1 : w[static_cast<size_t>(var)];
        for (int e = 0; e * wt <= left; ++e) {
            m.e[static_cast<size_t>(var)] = e;
            rec(var + 1, left - e * wt);
        }
        m.e[static_cast<size_t>(var)] = 0;
    };
    rec(0, target);
}

// rational row reduction; returns rank, rows end in reduced echelon form
inline int rref(std::vector<std::vector<mpq_class>>& a,
                std::vector<size_t>* pivot_cols = nullptr) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        mpq_class inv = 1 / a[r][c];
        for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return static_cast<int>(r);
}

// nullspace basis of the matrix (columns = unknowns)
inline std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> a,
                                                     size_t cols) {
    if (a.empty()) {
        std::vector<std::vector<mpq_class>> id;
        for (size_t j = 0; j < cols; ++j) {
            std::vector<mpq_class> v(cols, 0);
            v[j] = 1;
            id.push_back(std::move(v));
        }
        return id;
    }
    std::vector<size_t> pivots;
    rref(a, &pivots);
    std::vector<long> pivot_of_col(cols, -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<long>(r);
    std::vector<std::vector<mpq_class>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<mpq_class> v(cols, 0);
        v[c] = 1;
        for (size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] != -1)
                v[c2] = -a[static_cast<size_t>(pivot_of_col[c2])][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// coordinates of polys in a fixed monomial basis, as matrix rows
inline std::vector<std::vector<mpq_class>> coord_rows(const std::vector<Poly>& ps,
                                                      const std::vector<Monomial>& basis) {
    std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> idx(
        [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& p : ps) {
        std::vector<mpq_class> row(basis.size(), 0);
        for (const auto& t : p.terms()) row[idx.at(t.m)] = t.c;
        rows.push_back(std::move(row));
    }
    return rows;
}

// dimension of the degree-D graded piece of an ideal (weights w)
inline int ideal_piece_dim(const Ideal& I, const std::vector<int>& w, int D,
                           std::vector<Monomial> const& basisD) {
    std::vector<Poly> elems;
    for (const auto& g : I.gens) {
        const Poly& p = g[0];
        int dg = p.weighted_degree(w);
        if (dg > D) continue;
        std::vector<Monomial> mults;
        monomials_of_wdeg(I.nvars, w, D - dg, mults);
        for (const auto& m : mults) elems.push_back(p * Poly::monomial(m, 1));
    }
    auto rows = coord_rows(elems, basisD);
    return rref(rows);
}

// degree-D piece of ker(T_j -> f_j) by Macaulay-matrix linear algebra
inline std::vector<Poly> implicit_kernel_piece(const std::vector<Poly>& forms, int D) {
    const int m = static_cast<int>(forms.size());
    const int n = forms[0].nvars();
    std::vector<int> w;
    for (const auto& f : forms) w.push_back(f.total_degree());
    std::vector<Monomial> tmons;
    monomials_of_wdeg(m, w, D, tmons);
    std::vector<Monomial> xmons;
    monomials_of_wdeg(n, {}, D, xmons);
    // matrix: rows = x-monomials (equations), columns = T-monomials
    std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> xi(
        [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    for (size_t i = 0; i < xmons.size(); ++i) xi[xmons[i]] = i;
    std::vector<std::vector<mpq_class>> a(xmons.size(),
                                          std::vector<mpq_class>(tmons.size(), 0));
    for (size_t c = 0; c < tmons.size(); ++c) {
        Poly prod = Poly::constant(n, 1);
        for (int j = 0; j < m; ++j)
            for (int e = 0; e < tmons[c].e[static_cast<size_t>(j)]; ++e)
                prod *= forms[static_cast<size_t>(j)];
        for (const auto& t : prod.terms()) a[xi.at(t.m)][c] += t.c;
    }
    std::vector<Poly> out;
    for (const auto& v : nullspace(std::move(a), tmons.size())) {
        std::vector<Term> ts;
        for (size_t c = 0; c < tmons.size(); ++c)
            if (v[c] != 0) ts.push_back({tmons[c], v[c]});
        out.push_back(Poly::from_terms(m, std::move(ts)));
    }
    return out;
}

// degree-D piece of {h : h in P and all dh/dT_j in P} (= P^(2) in char 0)
inline std::vector<Poly> zariski_nagata_piece(const Presentation& pres, int D) {
    const int m = pres.m;
    auto gb = groebner(pres.P);
    std::vector<Monomial> tmons;
    monomials_of_wdeg(m, pres.form_degrees, D, tmons);
    // linear conditions: coefficients of NF(T^a) and NF(d T^a / d T_j)
    std::map<std::pair<int, std::vector<int>>, size_t> eq; // (derivative index or -1, exponent)
    std::vector<std::vector<mpq_class>> a;
    auto add_poly = [&](int tag, const Poly& nf, size_t col, size_t ncols) {
        for (const auto& t : nf.terms()) {
            auto key = std::make_pair(tag, t.m.e);
            auto it = eq.find(key);
            size_t row;
            if (it == eq.end()) {
                row = a.size();
                eq.emplace(key, row);
                a.emplace_back(ncols, mpq_class(0));
            } else {
                row = it->second;
            }
            a[row][col] += t.c;
        }
    };
    for (size_t c = 0; c < tmons.size(); ++c) {
        Poly mono = Poly::monomial(tmons[c], 1);
        add_poly(-1, normal_form({mono}, *gb)[0], c, tmons.size());
        for (int j = 0; j < m; ++j)
            add_poly(j, normal_form({mono.derivative(j)}, *gb)[0], c, tmons.size());
    }
    std::vector<Poly> out;
    for (const auto& v : nullspace(std::move(a), tmons.size())) {
        std::vector<Term> ts;
        for (size_t c = 0; c < tmons.size(); ++c)
            if (v[c] != 0) ts.push_back({tmons[c], v[c]});
        out.push_back(Poly::from_terms(m, std::move(ts)));
    }
    return out;
}

// two-sided degreewise agreement of an ideal with an oracle piece
inline bool piece_matches(const Ideal& I, const std::vector<int>& w, int D,
                          const std::vector<Poly>& oracle_piece) {
    auto gb = groebner(I);
    for (const auto& h : oracle_piece)
        if (!is_member({h}, *gb)) return false;
    std::vector<Monomial> basisD;
    monomials_of_wdeg(I.nvars, w, D, basisD);
    auto rows = coord_rows(oracle_piece, basisD);
    int oracle_dim = rref(rows);
    return oracle_dim == ideal_piece_dim(I, w, D, basisD);
}

} // namespace polsyz::oracle

#endif
