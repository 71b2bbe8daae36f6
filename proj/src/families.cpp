#include "polsyz/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polsyz {

std::vector<Poly> veronese2(int n) {
    if (n < 1) throw std::invalid_argument("veronese2: n >= 1 required");
    std::vector<Poly> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            out.push_back(Poly::variable(n, i) * Poly::variable(n, j));
    return out;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int i, j;
        if (!(ls >> i)) continue; // blank
        if (!(ls >> j) || i < 1 || j < 1) {
            throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                        ": expected two positive vertex numbers");
        }
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                        ": trailing tokens");
        g.edges.emplace_back(i, j);
        g.nverts = std::max({g.nverts, i, j});
    }
    return g;
}

std::vector<Poly> edge_algebra(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("edge_algebra: empty graph");
    std::vector<Poly> out;
    for (auto [i, j] : g.edges)
        out.push_back(Poly::variable(g.nverts, i - 1) * Poly::variable(g.nverts, j - 1));
    return out;
}

int pair_index(int i, int j, int m) {
    return (i - 1) * (2 * m - i) / 2 + (j - i) - 1;
}

std::vector<Poly> generic_minors(int m) {
    if (m < 3) throw std::invalid_argument("generic_minors: m >= 3 required");
    const int nv = 2 * m;
    auto x = [&](int row, int col) { return Poly::variable(nv, (row - 1) * m + (col - 1)); };
    std::vector<Poly> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) out.push_back(x(1, i) * x(2, j) - x(1, j) * x(2, i));
    return out;
}

std::vector<Poly> plucker_relations(int m) {
    std::vector<Poly> out;
    if (m < 4) return out;
    const int nT = m * (m - 1) / 2;
    auto T = [&](int i, int j) { return Poly::variable(nT, pair_index(i, j, m)); };
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d)
                    out.push_back(T(a, b) * T(c, d) - T(a, c) * T(b, d) + T(a, d) * T(b, c));
    return out;
}

std::vector<Poly> catalecticant(int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("catalecticant: 1 <= d <= m required");
    const int nv = m + d;
    auto x = [&](int i) { return Poly::variable(nv, i - 1); }; // 1-based
    std::vector<Poly> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) out.push_back(x(i) * x(j + d) - x(j) * x(i + d));
    return out;
}

std::vector<Poly> m_relations(int m, int d) {
    std::vector<Poly> out;
    if (m - d < 4) return out;
    const int nT = m * (m - 1) / 2;
    auto T = [&](int i, int j) { return Poly::variable(nT, pair_index(i, j, m)); };
    for (int i = d + 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l) {
                    const int c[4] = {i, j, k, l};
                    Poly rel(nT);
                    // Laplace expansion along the top two rows of the stacked
                    // 4x4 matrix with a repeated row
                    for (int p = 0; p < 4; ++p)
                        for (int q = p + 1; q < 4; ++q) {
                            int comp[2], t = 0;
                            for (int u = 0; u < 4; ++u)
                                if (u != p && u != q) comp[t++] = u;
                            Poly term =
                                T(c[p], c[q]) * T(c[comp[0]] - d, c[comp[1]] - d);
                            rel = ((p + q) % 2 == 1) ? rel + term : rel - term;
                        }
                    out.push_back(rel.normalized());
                }
    return out;
}

std::vector<Poly> gordan_noether(const std::vector<Poly>& inner) {
    if (inner.empty()) throw std::invalid_argument("gordan_noether: no inner forms");
    const int r = inner[0].nvars();
    const int k = static_cast<int>(inner.size());
    const int n = r + k;
    const int deg = inner[0].total_degree();
    for (const auto& f : inner) {
        if (f.nvars() != r) throw std::invalid_argument("gordan_noether: ambient mismatch");
        if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != deg || deg < 2)
            throw std::invalid_argument(
                "gordan_noether: inner forms must share one degree >= 2");
    }
    Poly F(n);
    for (int i = 0; i < k; ++i)
        F += Poly::variable(n, r + i) * inner[static_cast<size_t>(i)].embed(n, 0);
    std::vector<Poly> out;
    for (int t = 0; t < n; ++t) out.push_back(F.derivative(t));
    return out;
}

} // namespace polsyz
