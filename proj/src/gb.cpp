#include "polsyz/gb.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace polsyz {

// ---------------------------------------------------------------------------
// free-module element helpers

bool elem_is_zero(const FreeElem& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

FreeElem elem_zero(int nvars, int rank) {
    return FreeElem(static_cast<size_t>(rank), Poly(nvars));
}

FreeElem elem_add(const FreeElem& a, const FreeElem& b) {
    FreeElem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

FreeElem elem_sub(const FreeElem& a, const FreeElem& b) {
    FreeElem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

FreeElem elem_scale(const FreeElem& a, const Poly& s) {
    FreeElem r = a;
    for (auto& p : r) p = p * s;
    return r;
}

bool elem_eq(const FreeElem& a, const FreeElem& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Submodule Submodule::ideal(int nvars, std::vector<Poly> ps) {
    Submodule m;
    m.nvars = nvars;
    m.rank = 1;
    for (auto& p : ps)
        if (!p.is_zero()) m.gens.push_back({std::move(p)});
    return m;
}

Submodule Submodule::module(int nvars, int rank, std::vector<FreeElem> gs) {
    Submodule m;
    m.nvars = nvars;
    m.rank = rank;
    for (auto& g : gs)
        if (!elem_is_zero(g)) m.gens.push_back(std::move(g));
    return m;
}

std::vector<Poly> Submodule::as_polys() const {
    if (rank != 1) throw std::logic_error("as_polys: not an ideal");
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(g[0]);
    return ps;
}

bool Submodule::is_zero() const {
    for (const auto& g : gens)
        if (!elem_is_zero(g)) return false;
    return true;
}

int Submodule::elem_degree(const FreeElem& v) const {
    int d = -1;
    for (int c = 0; c < rank; ++c) {
        if (v[static_cast<size_t>(c)].is_zero()) continue;
        int dc = var_weights.empty() ? v[static_cast<size_t>(c)].total_degree()
                                     : v[static_cast<size_t>(c)].weighted_degree(var_weights);
        d = std::max(d, dc + shift(c));
    }
    return d;
}

bool Submodule::elem_homogeneous(const FreeElem& v) const {
    int d = -1;
    for (int c = 0; c < rank; ++c) {
        const Poly& p = v[static_cast<size_t>(c)];
        if (p.is_zero()) continue;
        for (const auto& t : p.terms()) {
            int dt = (var_weights.empty() ? t.m.degree() : t.m.weighted_degree(var_weights)) +
                     shift(c);
            if (d < 0) d = dt;
            if (dt != d) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// deadline

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;

inline void poll_deadline() {
    if (g_deadline && std::chrono::steady_clock::now() > *g_deadline) throw TimeoutError();
}
} // namespace

ScopedDeadline::ScopedDeadline(std::chrono::seconds budget) {
    g_deadline = std::chrono::steady_clock::now() + budget;
}
ScopedDeadline::~ScopedDeadline() { g_deadline.reset(); }

// ---------------------------------------------------------------------------
// engine representation

namespace {

Vec vec_from_elem(const FreeElem& v, const ModuleOrder& ord) {
    Vec r;
    for (size_t c = 0; c < v.size(); ++c)
        for (const auto& t : v[c].terms()) r.push_back({static_cast<int>(c), t.m, t.c});
    std::sort(r.begin(), r.end(), [&](const MTerm& a, const MTerm& b) {
        return ord.cmp(a.comp, a.m, b.comp, b.m) > 0;
    });
    return r;
}

FreeElem elem_from_vec(const Vec& v, int nvars, int rank) {
    std::vector<std::vector<Term>> per(static_cast<size_t>(rank));
    for (const auto& t : v) per[static_cast<size_t>(t.comp)].push_back({t.m, t.c});
    FreeElem r;
    for (int c = 0; c < rank; ++c) r.push_back(Poly::from_terms(nvars, std::move(per[static_cast<size_t>(c)])));
    return r;
}

// primitive over Z, positive lead coefficient
void vec_normalize(Vec& v) {
    if (v.empty()) return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : v) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (v[0].c < 0) content = -content;
    for (auto& t : v) {
        t.c /= content;
        t.c.canonicalize();
    }
}

// a - s * x^w * g, both sorted under ord
Vec vec_axpy(const Vec& a, const mpq_class& s, const Monomial& w, const Vec& g,
             const ModuleOrder& ord) {
    Vec r;
    r.reserve(a.size() + g.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < g.size()) {
        Monomial gm = g[j].m * w;
        int c = ord.cmp(a[i].comp, a[i].m, g[j].comp, gm);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back({g[j].comp, std::move(gm), -s * g[j].c});
            ++j;
        } else {
            mpq_class nc = a[i].c - s * g[j].c;
            if (nc != 0) r.push_back({a[i].comp, a[i].m, std::move(nc)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < g.size(); ++j) r.push_back({g[j].comp, g[j].m * w, -s * g[j].c});
    return r;
}

// full normal form of v against basis
Vec vec_reduce(Vec v, const std::vector<Vec>& basis, const ModuleOrder& ord,
               const Vec* skip = nullptr) {
    Vec result;
    int steps = 0;
    while (!v.empty()) {
        if (++steps % 64 == 0) poll_deadline();
        const MTerm& lt = v.front();
        const Vec* red = nullptr;
        for (const auto& g : basis) {
            if (g.empty() || &g == skip) continue;
            if (g[0].comp == lt.comp && g[0].m.divides(lt.m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            v = vec_axpy(v, lt.c / (*red)[0].c, lt.m / (*red)[0].m, *red, ord);
        } else {
            result.push_back(lt);
            v.erase(v.begin());
        }
    }
    return result;
}

bool vec_single_component(const Vec& v) {
    for (const auto& t : v)
        if (t.comp != v[0].comp) return false;
    return true;
}

void auto_reduce(std::vector<Vec>& basis, const ModuleOrder& ord) {
    // drop elements whose lead is divisible by another kept lead
    std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
        return ord.cmp(a[0].comp, a[0].m, b[0].comp, b[0].m) < 0;
    });
    std::vector<Vec> kept;
    for (auto& g : basis) {
        bool red = false;
        for (const auto& h : kept)
            if (h[0].comp == g[0].comp && h[0].m.divides(g[0].m)) {
                red = true;
                break;
            }
        if (!red) kept.push_back(std::move(g));
    }
    // tail-reduce each against the others (leads are pairwise non-divisible)
    for (auto& g : kept) {
        Vec r = vec_reduce(g, kept, ord, &g);
        vec_normalize(r);
        g = std::move(r);
    }
    basis = std::move(kept);
}

struct SPair {
    int i, j;
    Monomial lcm_m;
    int deg;
};

std::vector<Vec> buchberger(std::vector<Vec> basis, const ModuleOrder& ord) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Vec& v) { return v.empty(); }),
                basis.end());
    for (auto& g : basis) vec_normalize(g);

    std::vector<SPair> pairs;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[static_cast<size_t>(i)][0].comp != basis[static_cast<size_t>(j)][0].comp) continue;
            Monomial L = lcm(basis[static_cast<size_t>(i)][0].m, basis[static_cast<size_t>(j)][0].m);
            pairs.push_back({i, j, L, L.degree()});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs(j);

    while (!pairs.empty()) {
        poll_deadline();
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const SPair& a, const SPair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        });
        SPair pr = *it;
        pairs.erase(it);

        const Vec& gi = basis[static_cast<size_t>(pr.i)];
        const Vec& gj = basis[static_cast<size_t>(pr.j)];
        // product criterion (valid for elements supported in one component)
        if (coprime(gi[0].m, gj[0].m) && vec_single_component(gi) && vec_single_component(gj))
            continue;
        // chain criterion: some other lead divides the lcm strictly finer
        bool chained = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j) continue;
            const Vec& gk = basis[k];
            if (gk[0].comp != gi[0].comp || !gk[0].m.divides(pr.lcm_m)) continue;
            Monomial lik = lcm(gi[0].m, gk[0].m), ljk = lcm(gj[0].m, gk[0].m);
            if (lik != pr.lcm_m && ljk != pr.lcm_m) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Vec s = vec_axpy(Vec{}, mpq_class(-1) / gi[0].c, pr.lcm_m / gi[0].m, gi, ord);
        s = vec_axpy(s, mpq_class(1) / gj[0].c, pr.lcm_m / gj[0].m, gj, ord);
        Vec r = vec_reduce(std::move(s), basis, ord);
        if (!r.empty()) {
            vec_normalize(r);
            basis.push_back(std::move(r));
            add_pairs(static_cast<int>(basis.size()) - 1);
        }
    }
    auto_reduce(basis, ord);
    return basis;
}

Submodule with_grading_of(const Submodule& src, int rank, std::vector<FreeElem> gens,
                          std::vector<int> shifts = {}) {
    Submodule m;
    m.nvars = src.nvars;
    m.rank = rank;
    m.var_weights = src.var_weights;
    m.shifts = std::move(shifts);
    for (auto& g : gens)
        if (!elem_is_zero(g)) m.gens.push_back(std::move(g));
    return m;
}

} // namespace

ModuleOrder default_order(const Submodule& m) {
    ModuleOrder ord;
    ord.base = MonomialOrder::degrevlex();
    ord.pot = true;
    ord.shifts = m.shifts;
    return ord;
}

std::shared_ptr<const GroebnerBasis> groebner(const Submodule& m) {
    return groebner(m, default_order(m));
}

std::shared_ptr<const GroebnerBasis> groebner(const Submodule& m, const ModuleOrder& ord) {
    if (m.cached_gb && m.cached_gb->ord.elim_vars == ord.elim_vars &&
        m.cached_gb->ord.pot == ord.pot && m.cached_gb->ord.base.kind == ord.base.kind &&
        m.cached_gb->ord.base.block == ord.base.block)
        return m.cached_gb;
    auto gb = std::make_shared<GroebnerBasis>();
    gb->ord = ord;
    gb->nvars = m.nvars;
    gb->rank = m.rank;
    std::vector<Vec> seed;
    for (const auto& g : m.gens) seed.push_back(vec_from_elem(g, ord));
    gb->elems = buchberger(std::move(seed), ord);
    m.cached_gb = gb;
    return gb;
}

FreeElem normal_form(const FreeElem& v, const GroebnerBasis& gb) {
    Vec r = vec_reduce(vec_from_elem(v, gb.ord), gb.elems, gb.ord);
    return elem_from_vec(r, gb.nvars, gb.rank);
}

bool is_member(const FreeElem& v, const GroebnerBasis& gb) {
    return vec_reduce(vec_from_elem(v, gb.ord), gb.elems, gb.ord).empty();
}

bool submodule_contains(const Submodule& outer, const Submodule& inner) {
    auto gb = groebner(outer);
    for (const auto& g : inner.gens)
        if (!is_member(g, *gb)) return false;
    return true;
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
    return submodule_contains(a, b) && submodule_contains(b, a);
}

Submodule syzygies(const Submodule& m) {
    const int s = static_cast<int>(m.gens.size());
    const int big = m.rank + s;
    ModuleOrder ord;
    ord.pot = true;
    ord.shifts.assign(static_cast<size_t>(big), 0);
    for (int c = 0; c < m.rank; ++c) ord.shifts[static_cast<size_t>(c)] = m.shift(c);
    std::vector<int> tag_shifts(static_cast<size_t>(s), 0);
    bool graded = true;
    for (int i = 0; i < s; ++i) {
        if (!m.elem_homogeneous(m.gens[static_cast<size_t>(i)])) graded = false;
        tag_shifts[static_cast<size_t>(i)] =
            std::max(0, m.elem_degree(m.gens[static_cast<size_t>(i)]));
    }
    for (int i = 0; i < s; ++i) ord.shifts[static_cast<size_t>(m.rank + i)] = tag_shifts[static_cast<size_t>(i)];

    std::vector<Vec> seed;
    for (int i = 0; i < s; ++i) {
        FreeElem h = elem_zero(m.nvars, big);
        for (int c = 0; c < m.rank; ++c) h[static_cast<size_t>(c)] = m.gens[static_cast<size_t>(i)][static_cast<size_t>(c)];
        h[static_cast<size_t>(m.rank + i)] = Poly::constant(m.nvars, 1);
        seed.push_back(vec_from_elem(h, ord));
    }
    std::vector<Vec> gb = buchberger(std::move(seed), ord);

    std::vector<FreeElem> syz;
    for (const auto& g : gb) {
        bool tags_only = true;
        for (const auto& t : g)
            if (t.comp < m.rank) {
                tags_only = false;
                break;
            }
        if (!tags_only) continue;
        FreeElem full = elem_from_vec(g, m.nvars, big);
        syz.push_back(FreeElem(full.begin() + m.rank, full.end()));
    }
    return with_grading_of(m, s, std::move(syz), graded ? tag_shifts : std::vector<int>{});
}

Submodule eliminate_module(const Submodule& m, int elim_vars) {
    ModuleOrder ord = default_order(m);
    ord.elim_vars = elim_vars;
    auto gb = groebner(m, ord);
    const int keep = m.nvars - elim_vars;
    Submodule r;
    r.nvars = keep;
    r.rank = m.rank;
    r.shifts = m.shifts;
    if (!m.var_weights.empty())
        r.var_weights.assign(m.var_weights.begin() + elim_vars, m.var_weights.end());
    for (const auto& g : gb->elems) {
        bool free_of = true;
        for (const auto& t : g) {
            for (int i = 0; i < elim_vars && free_of; ++i)
                if (t.m.e[static_cast<size_t>(i)]) free_of = false;
            if (!free_of) break;
        }
        if (!free_of) continue;
        FreeElem full = elem_from_vec(g, m.nvars, m.rank);
        FreeElem proj;
        for (auto& p : full) proj.push_back(p.project(keep, elim_vars));
        r.gens.push_back(std::move(proj));
    }
    return r;
}

Ideal eliminate(const Ideal& i, int elim_vars) { return eliminate_module(i, elim_vars); }

Ideal colon_elem(const Submodule& m, const FreeElem& v) {
    std::vector<FreeElem> cols;
    cols.push_back(v);
    for (const auto& g : m.gens) cols.push_back(g);
    Submodule joint = with_grading_of(m, m.rank, std::move(cols), m.shifts);
    Submodule syz = syzygies(joint);
    std::vector<Poly> out;
    for (const auto& z : syz.gens)
        if (!z[0].is_zero()) out.push_back(z[0]);
    Ideal r = Submodule::ideal(m.nvars, std::move(out));
    r.var_weights = m.var_weights;
    return r;
}

Ideal colon(const Submodule& m, const Submodule& n) {
    if (n.gens.empty()) {
        Ideal one = Submodule::ideal(m.nvars, {Poly::constant(m.nvars, 1)});
        one.var_weights = m.var_weights;
        return one;
    }
    std::optional<Ideal> acc;
    for (const auto& v : n.gens) {
        Ideal c = colon_elem(m, v);
        acc = acc ? intersect(*acc, c) : c;
    }
    return *acc;
}

namespace {
Submodule colon_mod_single(const Submodule& m, const Poly& a) {
    std::vector<FreeElem> cols;
    for (int c = 0; c < m.rank; ++c) {
        FreeElem e = elem_zero(m.nvars, m.rank);
        e[static_cast<size_t>(c)] = a;
        cols.push_back(std::move(e));
    }
    for (const auto& g : m.gens) cols.push_back(g);
    Submodule joint = with_grading_of(m, m.rank, std::move(cols), m.shifts);
    Submodule syz = syzygies(joint);
    std::vector<FreeElem> out;
    for (const auto& z : syz.gens) {
        FreeElem v(z.begin(), z.begin() + m.rank);
        if (!elem_is_zero(v)) out.push_back(std::move(v));
    }
    return with_grading_of(m, m.rank, std::move(out), m.shifts);
}
} // namespace

Submodule colon_mod(const Submodule& m, const Ideal& j) {
    if (j.gens.empty()) {
        // J = 0: every vector qualifies
        std::vector<FreeElem> basis;
        for (int c = 0; c < m.rank; ++c) {
            FreeElem e = elem_zero(m.nvars, m.rank);
            e[static_cast<size_t>(c)] = Poly::constant(m.nvars, 1);
            basis.push_back(std::move(e));
        }
        return with_grading_of(m, m.rank, std::move(basis), m.shifts);
    }
    std::optional<Submodule> acc;
    for (const auto& a : j.gens) {
        Submodule c = colon_mod_single(m, a[0]);
        acc = acc ? intersect(*acc, c) : c;
    }
    return *acc;
}

bool colon_mod_is_trivial(const Submodule& m, const Ideal& j) {
    // colon_mod(m, j) always contains m; it is contained in every m : a_i,
    // so a single generator with m : a_i subset of m settles equality.
    std::optional<Submodule> acc;
    for (const auto& a : j.gens) {
        Submodule c = colon_mod_single(m, a[0]);
        if (submodule_contains(m, c)) return true;
        acc = acc ? intersect(*acc, c) : c;
    }
    if (!acc) return false; // J = 0 and m proper: colon is the full module
    return submodule_contains(m, *acc);
}

Submodule saturate(const Submodule& m, const Ideal& j) {
    // M : J^infty equals the single-element saturations taken one generator
    // after another: stabilizing against a_1, then a_2 on the result, and so
    // on.  Each pass only ever enlarges the module inside M : J^infty, and a
    // vector of the saturation survives every pass, so no intersections or
    // re-passes over earlier generators are needed.
    Submodule cur = m;
    for (const auto& a : j.gens) {
        for (;;) {
            poll_deadline();
            Submodule next = colon_mod_single(cur, a[0]);
            if (submodule_contains(cur, next)) break;
            cur = next;
        }
    }
    return cur;
}

Submodule intersect(const Submodule& m, const Submodule& n) {
    if (m.nvars != n.nvars || m.rank != n.rank)
        throw std::invalid_argument("intersect: ambient mismatch");
    std::vector<FreeElem> cols;
    for (const auto& g : m.gens) cols.push_back(g);
    for (const auto& g : n.gens) cols.push_back(g);
    Submodule joint = with_grading_of(m, m.rank, std::move(cols), m.shifts);
    Submodule syz = syzygies(joint);
    const size_t s = m.gens.size();
    std::vector<FreeElem> out;
    for (const auto& z : syz.gens) {
        FreeElem w = elem_zero(m.nvars, m.rank);
        for (size_t i = 0; i < s; ++i) w = elem_add(w, elem_scale(m.gens[i], z[i]));
        if (!elem_is_zero(w)) out.push_back(std::move(w));
    }
    return with_grading_of(m, m.rank, std::move(out), m.shifts);
}

Submodule kernel_of_map(const std::vector<FreeElem>& columns, int nvars, int q) {
    Submodule img;
    img.nvars = nvars;
    img.rank = q;
    img.gens = columns; // zero columns kept: e_i is then a kernel element
    for (const auto& c : columns)
        if (static_cast<int>(c.size()) != q)
            throw std::invalid_argument("kernel_of_map: column dimension mismatch");
    return syzygies(img);
}

std::vector<FreeElem> min_generators(const Submodule& m) {
    for (const auto& g : m.gens)
        if (!m.elem_homogeneous(g))
            throw std::invalid_argument("min_generators: non-homogeneous generator");
    std::vector<FreeElem> sorted = m.gens;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const FreeElem& a, const FreeElem& b) {
        return m.elem_degree(a) < m.elem_degree(b);
    });
    std::vector<FreeElem> kept;
    for (const auto& g : sorted) {
        if (elem_is_zero(g)) continue;
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        Submodule sub = with_grading_of(m, m.rank, kept, m.shifts);
        if (!is_member(g, *groebner(sub))) kept.push_back(g);
    }
    return kept;
}

int mu(const Submodule& m) { return static_cast<int>(min_generators(m).size()); }

std::vector<int> GradedResolution::betti() const {
    std::vector<int> b;
    for (const auto& s : steps) b.push_back(static_cast<int>(s.size()));
    return b;
}

GradedResolution free_resolution(const Submodule& m) {
    GradedResolution res;
    Submodule cur = m;
    cur.gens = min_generators(m);
    for (;;) {
        poll_deadline();
        std::vector<int> degs;
        for (const auto& g : cur.gens) degs.push_back(cur.elem_degree(g));
        res.steps.push_back(cur.gens);
        res.degrees.push_back(degs);
        if (cur.gens.empty()) break;
        Submodule syz = syzygies(cur);
        if (syz.is_zero()) break;
        Submodule next = syz;
        next.gens = min_generators(syz);
        // minimality: entries of higher differentials lie in the irrelevant ideal
        for (const auto& g : next.gens)
            for (const auto& p : g)
                if (!p.is_zero() && p.is_constant())
                    throw std::logic_error("free_resolution: non-minimal differential");
        cur = next;
    }
    return res;
}

namespace {
struct IndepSearch {
    std::vector<uint64_t> supports;
    std::unordered_set<uint64_t> seen;
    int best = 0;

    void rec(uint64_t allowed) {
        if (!seen.insert(allowed).second) return;
        int pc = __builtin_popcountll(allowed);
        if (pc <= best) return;
        const uint64_t* bad = nullptr;
        for (const auto& s : supports)
            if ((s & ~allowed) == 0) {
                bad = &s;
                break;
            }
        if (!bad) {
            best = pc;
            return;
        }
        uint64_t s = *bad;
        while (s) {
            uint64_t v = s & (~s + 1);
            s ^= v;
            rec(allowed & ~v);
        }
    }
};
} // namespace

int dimension(const Ideal& i) {
    if (i.rank != 1) throw std::invalid_argument("dimension: expects an ideal");
    if (i.gens.empty()) return i.nvars;
    auto gb = groebner(i);
    IndepSearch search;
    for (const auto& g : gb->elems) {
        uint64_t s = 0;
        for (int v = 0; v < i.nvars; ++v)
            if (g[0].m.e[static_cast<size_t>(v)]) s |= 1ull << v;
        if (s == 0) return -1; // unit ideal
        search.supports.push_back(s);
    }
    uint64_t full = i.nvars == 64 ? ~0ull : (1ull << i.nvars) - 1;
    search.rec(full);
    return search.best;
}

int height(const Ideal& i) { return i.nvars - dimension(i); }

int submodule_rank(const Submodule& m) {
    if (m.gens.empty()) return 0;
    std::vector<std::vector<Poly>> mat(static_cast<size_t>(m.rank));
    for (int r = 0; r < m.rank; ++r)
        for (const auto& g : m.gens) mat[static_cast<size_t>(r)].push_back(g[static_cast<size_t>(r)]);
    return matrix_rank(std::move(mat));
}

} // namespace polsyz
