#ifndef POLSYZ_FAMILIES_HPP
#define POLSYZ_FAMILIES_HPP

#include "polsyz/poly.hpp"

namespace polsyz {

// all degree-2 monomials of k[x_1..x_n]
std::vector<Poly> veronese2(int n);

struct Graph {
    int nverts = 0;
    std::vector<std::pair<int, int>> edges; // 1-based, loops allowed
};

// one edge "i j" per line, '#' comments
Graph parse_graph(const std::string& text);
std::vector<Poly> edge_algebra(const Graph& g);

// 2x2 minors of the 2xm generic matrix, variables x_{kl} row-major (2m of them)
std::vector<Poly> generic_minors(int m);
// Grassmann-Pluecker quadrics in the C(m,2) minor variables T_{ij}
std::vector<Poly> plucker_relations(int m);

// minors of the d-catalecticant X(m,d): rows (x_1..x_m), (x_{1+d}..x_{m+d})
std::vector<Poly> catalecticant(int m, int d);
// six-term Laplace relations from the stacked 4x4 matrices, one per
// 4-subset of {d+1..m}
std::vector<Poly> m_relations(int m, int d);

// partials of F = x_{r+1} f_1 + ... + x_n f_{n-r} over the inner forms f
// (all in r variables); returned in variable order, the last n-r are the f_i
std::vector<Poly> gordan_noether(const std::vector<Poly>& inner);

// 0-based position of the pair (i,j), 1 <= i < j <= m, in lexicographic order
int pair_index(int i, int j, int m);

} // namespace polsyz

#endif
