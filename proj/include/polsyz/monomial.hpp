#ifndef POLSYZ_MONOMIAL_HPP
#define POLSYZ_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polsyz {

// Exponent vector of a monomial; length is the ambient variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    int weighted_degree(const std::vector<int>& w) const {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
        return d;
    }

    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // this / m, assuming m.divides(*this)
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int x : m.e) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace polsyz

#endif
