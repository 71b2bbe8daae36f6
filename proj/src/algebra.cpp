#include "polsyz/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace polsyz {

namespace {

Poly det_recursive(const std::vector<std::vector<Poly>>& m, std::vector<int> rows,
                   std::vector<int> cols) {
    const size_t k = rows.size();
    if (k == 1) return m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    Poly acc(m[0][0].nvars());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        const Poly& piv = m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[j])];
        if (piv.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t l = 0; l < k; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        Poly minor = det_recursive(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + piv * minor : acc - piv * minor;
    }
    return acc;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// minimal-weighted-degree nonzero polynomial h with h(f_1..f_m) = 0, for
// forms known to satisfy exactly one irreducible relation (height-one prime
// kernel).  Row-reduces the substituted T-monomials degree by degree while
// tracking the combination that produced each row; the first monomial whose
// substitution reduces to zero yields the generator.
Poly principal_relation(const std::vector<Poly>& forms, const std::vector<int>& weights) {
    const int m = static_cast<int>(forms.size());
    const int n = forms[0].nvars();
    using Row = std::map<std::vector<int>, mpq_class>;
    auto to_row = [](const Poly& p) {
        Row r;
        for (const auto& t : p.terms()) r[t.m.e] = t.c;
        return r;
    };
    std::vector<std::pair<Row, Row>> basis; // substituted value, T-combination
    Poly result(m);
    const int wmin = *std::min_element(weights.begin(), weights.end());
    for (int W = wmin; W <= 1000 * wmin; ++W) {
        // enumerate T-exponent vectors of weighted degree exactly W
        std::vector<int> e(static_cast<size_t>(m), 0);
        std::function<bool(int, int)> enumerate = [&](int j, int rem) -> bool {
            if (j == m - 1) {
                if (rem % weights[static_cast<size_t>(j)] != 0) return false;
                e[static_cast<size_t>(j)] = rem / weights[static_cast<size_t>(j)];
            } else {
                for (int c = 0; c * weights[static_cast<size_t>(j)] <= rem; ++c) {
                    e[static_cast<size_t>(j)] = c;
                    if (enumerate(j + 1, rem - c * weights[static_cast<size_t>(j)])) return true;
                }
                e[static_cast<size_t>(j)] = 0;
                return false;
            }
            Poly val = Poly::constant(n, 1);
            for (int i = 0; i < m; ++i)
                for (int c = 0; c < e[static_cast<size_t>(i)]; ++c) val *= forms[static_cast<size_t>(i)];
            Row row = to_row(val);
            Row combo;
            combo[e] = 1;
            bool changed = true;
            while (changed && !row.empty()) {
                changed = false;
                for (const auto& [bval, bcombo] : basis) {
                    if (row.empty()) break;
                    auto hit = row.find(bval.rbegin()->first);
                    if (hit == row.end()) continue;
                    changed = true;
                    mpq_class f = hit->second;
                    for (const auto& [mon, c] : bval) {
                        auto it = row.find(mon);
                        mpq_class v = (it == row.end() ? mpq_class(0) : it->second) - f * c;
                        if (v == 0) {
                            if (it != row.end()) row.erase(it);
                        } else {
                            row[mon] = v;
                        }
                    }
                    for (const auto& [mon, c] : bcombo) {
                        auto it = combo.find(mon);
                        mpq_class v = (it == combo.end() ? mpq_class(0) : it->second) - f * c;
                        if (v == 0) {
                            if (it != combo.end()) combo.erase(it);
                        } else {
                            combo[mon] = v;
                        }
                    }
                }
            }
            if (row.empty()) {
                Poly h(m);
                for (const auto& [mon, c] : combo) h += Poly::monomial(Monomial(mon), c);
                result = h.normalized();
                return true;
            }
            mpq_class inv = 1 / row.rbegin()->second;
            Row nval, ncombo;
            for (const auto& [mon, c] : row) nval[mon] = c * inv;
            for (const auto& [mon, c] : combo) ncombo[mon] = c * inv;
            basis.emplace_back(std::move(nval), std::move(ncombo));
            return false;
        };
        if (enumerate(0, W)) return result;
    }
    throw std::logic_error("principal_relation: no relation found within the degree cap");
}

} // namespace

Presentation implicitize(const std::vector<Poly>& forms) {
    if (forms.empty()) throw std::invalid_argument("implicitize: no forms");
    Presentation pres;
    pres.forms = forms;
    pres.n = forms[0].nvars();
    pres.m = static_cast<int>(forms.size());
    pres.homogeneous = true;
    for (const auto& f : forms) {
        if (f.is_zero()) throw std::invalid_argument("implicitize: zero form");
        if (f.nvars() != pres.n) throw std::invalid_argument("implicitize: ambient mismatch");
        if (!f.is_homogeneous())
            throw std::invalid_argument(
                "implicitize: every input must be a form (homogeneous); the grading of "
                "the presentation ideal depends on it");
        pres.form_degrees.push_back(f.total_degree());
    }
    pres.same_degree =
        std::all_of(pres.form_degrees.begin(), pres.form_degrees.end(),
                    [&](int d) { return d == pres.form_degrees[0]; });

    // In characteristic zero the dimension of the subalgebra equals the rank
    // of the Jacobian of the forms.  When the presentation ideal has height
    // <= 1 it is principal (k[T] is a UFD and the kernel of a map onto a
    // domain is prime), so P is either zero or generated by the unique
    // minimal-degree relation among the forms, which a degreewise
    // linear-algebra search finds much faster than the elimination below.
    {
        std::vector<std::vector<Poly>> theta;
        for (const auto& f : forms) {
            std::vector<Poly> row;
            for (int i = 0; i < pres.n; ++i) row.push_back(f.derivative(i));
            theta.push_back(std::move(row));
        }
        const int dim_B = matrix_rank(std::move(theta));
        const int ht = pres.m - dim_B;
        if (ht == 0) {
            pres.P = Submodule::ideal(pres.m, {});
            pres.P.var_weights = pres.form_degrees;
            pres.ht_P = 0;
            pres.dim_A = pres.m;
            return pres;
        }
        if (ht == 1) {
            pres.P_min_gens = {principal_relation(forms, pres.form_degrees)};
            pres.P = Submodule::ideal(pres.m, pres.P_min_gens);
            pres.P.var_weights = pres.form_degrees;
            pres.P_gen_degrees.push_back(pres.P_min_gens[0].total_degree());
            pres.ht_P = 1;
            pres.dim_A = pres.m - 1;
            return pres;
        }
    }

    // graph ideal (T_j - f_j) in k[x_1..x_n, T_1..T_m], x-block eliminated
    const int total = pres.n + pres.m;
    std::vector<Poly> graph;
    for (int j = 0; j < pres.m; ++j)
        graph.push_back(Poly::variable(total, pres.n + j) -
                        forms[static_cast<size_t>(j)].embed(total, 0));
    Ideal big = Submodule::ideal(total, std::move(graph));
    Ideal P = eliminate(big, pres.n);
    P.var_weights = pres.form_degrees;

    Submodule Pmin = P;
    Pmin.gens = min_generators(P);
    pres.P_min_gens = Pmin.as_polys();
    std::sort(pres.P_min_gens.begin(), pres.P_min_gens.end(),
              [](const Poly& a, const Poly& b) { return a.total_degree() < b.total_degree(); });
    pres.P = Submodule::ideal(pres.m, pres.P_min_gens);
    pres.P.var_weights = pres.form_degrees;
    for (const auto& g : pres.P_min_gens) pres.P_gen_degrees.push_back(g.total_degree());
    pres.ht_P = pres.P.gens.empty() ? 0 : height(pres.P);
    pres.dim_A = pres.m - pres.ht_P;
    return pres;
}

JacobianIdealData jacobian_ideal(const Presentation& pres) {
    JacobianIdealData jac;
    const int g = pres.ht_P;
    const int r = static_cast<int>(pres.P_min_gens.size());
    for (const auto& F : pres.P_min_gens) {
        std::vector<Poly> row;
        for (int j = 0; j < pres.m; ++j) row.push_back(F.derivative(j));
        jac.theta_T.push_back(std::move(row));
    }
    if (g == 0) {
        // A is a polynomial ring; by convention the Jacobian ideal is the
        // unit ideal and the embedding is trivially polarizable
        jac.trivial = true;
        jac.J_lift_ideal = Submodule::ideal(pres.m, {Poly::constant(pres.m, 1)});
        jac.J_lift_ideal.var_weights = pres.form_degrees;
        jac.JR = Submodule::ideal(pres.n, {Poly::constant(pres.n, 1)});
        return jac;
    }

    auto gbP = groebner(pres.P);
    // All minors in one weighted degree span a finite-dimensional piece of
    // (J + P)/P, so exact membership pruning there is Gaussian elimination on
    // the normal forms: a minor is redundant iff its NF lies in the span of
    // the NFs already kept in that degree.
    std::vector<Poly> kept;
    std::map<int, std::vector<std::map<std::vector<int>, mpq_class>>> echelon;
    auto adds_new_direction = [&](const Poly& nf) {
        std::map<std::vector<int>, mpq_class> row;
        for (const auto& t : nf.terms()) row[t.m.e] = t.c;
        int deg = nf.weighted_degree(pres.form_degrees);
        auto& basis = echelon[deg];
        while (!row.empty()) {
            const auto& pivot = row.rbegin()->first;
            auto hit = std::find_if(basis.begin(), basis.end(), [&](const auto& b) {
                return b.rbegin()->first == pivot;
            });
            if (hit == basis.end()) {
                mpq_class inv = 1 / row.rbegin()->second;
                for (auto& [mon, c] : row) c *= inv;
                basis.push_back(std::move(row));
                return true;
            }
            mpq_class f = row.rbegin()->second;
            for (const auto& [mon, c] : *hit) {
                auto it = row.find(mon);
                mpq_class v = (it == row.end() ? mpq_class(0) : it->second) - f * c;
                if (v == 0) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[mon] = v;
                }
            }
        }
        return false;
    };
    combinations(r, g, [&](const std::vector<int>& rows) {
        combinations(pres.m, g, [&](const std::vector<int>& cols) {
            Poly minor = det_recursive(jac.theta_T, rows, cols);
            if (minor.is_zero()) return;
            Poly nf = normal_form({minor}, *gbP)[0];
            if (nf.is_zero()) return;
            if (adds_new_direction(nf)) kept.push_back(nf.normalized());
        });
    });
    jac.J_lift = kept;
    jac.J_lift_ideal = Submodule::ideal(pres.m, kept);
    jac.J_lift_ideal.var_weights = pres.form_degrees;
    std::vector<Poly> in_R;
    for (const auto& d : kept) {
        Poly v = d.substitute(pres.forms);
        if (!v.is_zero()) in_R.push_back(v.normalized());
    }
    jac.JR = Submodule::ideal(pres.n, std::move(in_R));
    return jac;
}

SymbolicSquare symbolic_square(const Presentation& pres, const JacobianIdealData& jac) {
    SymbolicSquare s;
    std::vector<Poly> sq;
    const auto& gens = pres.P_min_gens;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) sq.push_back(gens[i] * gens[j]);
    s.P2 = Submodule::ideal(pres.m, std::move(sq));
    s.P2.var_weights = pres.form_degrees;
    if (jac.trivial) {
        s.P2_sym = s.P2;
        s.equals_square = true;
        return s;
    }
    // P is prime and the base field has characteristic zero, so the symbolic
    // square is the second differential power: h in P with every dh/dT_j in
    // P.  Writing h = sum a_i g_i over the minimal generators, the partials
    // of the a_i contribute multiples of P, so the condition is that the
    // T-Jacobian applied to (a_i) lands in P * k[T]^m.  That preimage is one
    // syzygy computation; no saturation is needed.
    const int m = pres.m;
    const int r = static_cast<int>(gens.size());
    auto gbP = groebner(pres.P);
    auto nf = [&](const Poly& p) { return normal_form({p}, *gbP)[0]; };
    // Columns of G generate the coefficient vectors a with sum a_i dg_i/dT_j
    // in P for the rows handled so far.  Vectors only matter modulo P^r:
    // moving a by P-multiples moves h = sum a_i g_i by an element of P^2,
    // and the row conditions only change by elements of P.  Handling one
    // Jacobian row at a time keeps every Groebner computation at ideal level
    // instead of one large module kernel.
    std::vector<FreeElem> G;
    for (int i = 0; i < r; ++i) {
        FreeElem e = elem_zero(m, r);
        e[static_cast<size_t>(i)] = Poly::constant(m, 1);
        G.push_back(std::move(e));
    }
    for (int j = 0; j < m && !G.empty(); ++j) {
        std::vector<FreeElem> next;
        std::vector<Poly> ps;
        std::vector<int> live; // G-index of each nonzero row value
        for (size_t t = 0; t < G.size(); ++t) {
            Poly p(m);
            for (int i = 0; i < r; ++i)
                p += G[t][static_cast<size_t>(i)] * jac.theta_T[static_cast<size_t>(i)][static_cast<size_t>(j)];
            p = nf(p);
            if (p.is_zero())
                next.push_back(G[t]); // already lands in P for this row
            else {
                ps.push_back(std::move(p));
                live.push_back(static_cast<int>(t));
            }
        }
        const int s_live = static_cast<int>(ps.size());
        if (s_live > 0) {
            for (const auto& g : gens) ps.push_back(g);
            Submodule row = Submodule::ideal(m, std::move(ps));
            Submodule syz = syzygies(row);
            for (const auto& z : syz.gens) {
                FreeElem col = elem_zero(m, r);
                for (int t = 0; t < s_live; ++t)
                    for (int i = 0; i < r; ++i)
                        col[static_cast<size_t>(i)] +=
                            z[static_cast<size_t>(t)] * G[static_cast<size_t>(live[static_cast<size_t>(t)])][static_cast<size_t>(i)];
                for (auto& entry : col) entry = nf(entry);
                if (!elem_is_zero(col)) next.push_back(std::move(col));
            }
        }
        G = std::move(next);
    }
    s.P2_sym = s.P2;
    s.P2_sym.cached_gb.reset();
    auto gb2 = groebner(s.P2);
    s.equals_square = true;
    for (const auto& a : G) {
        Poly h(m);
        for (int i = 0; i < r; ++i) h += a[static_cast<size_t>(i)] * gens[static_cast<size_t>(i)];
        if (h.is_zero()) continue;
        // the kernel is computed without the weighted grading, so split h
        // into its weighted-homogeneous pieces (the symbolic square is a
        // graded ideal, hence contains each piece)
        std::map<int, Poly> pieces;
        for (const auto& t : h.terms()) {
            int d = t.m.weighted_degree(pres.form_degrees);
            auto [it, fresh] = pieces.try_emplace(d, Poly(m));
            it->second += Poly::monomial(t.m, t.c);
        }
        for (auto& [d, piece] : pieces) {
            if (is_member({piece}, *gb2)) continue;
            s.P2_sym.gens.push_back({piece.normalized()});
            s.equals_square = false;
        }
    }
    return s;
}

CiCmFlags ci_cm_flags(const Presentation& pres) {
    CiCmFlags f;
    f.mu_P = static_cast<int>(pres.P_min_gens.size());
    f.is_complete_intersection = (f.mu_P == pres.ht_P);
    f.is_almost_ci = (f.mu_P == pres.ht_P + 1);
    if (pres.P.gens.empty()) {
        f.pd_quotient = 0;
        f.is_cohen_macaulay = true;
    } else {
        GradedResolution res = free_resolution(pres.P);
        f.pd_quotient = res.pd() + 1;
        f.is_cohen_macaulay = (f.pd_quotient == pres.ht_P);
    }
    f.ecodim = pres.m - pres.dim_A;
    f.ecodim_valid = std::all_of(pres.form_degrees.begin(), pres.form_degrees.end(),
                                 [](int d) { return d >= 2; });
    return f;
}

} // namespace polsyz
