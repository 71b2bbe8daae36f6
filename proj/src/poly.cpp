#include "polsyz/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polsyz {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

struct CanonLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return kCanonical.cmp(a, b) > 0; // descending
    }
};

void check_ambient(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial ambient variable count mismatch");
}

} // namespace

Poly Poly::constant(int nvars, const mpq_class& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Poly Poly::variable(int nvars, int i, int exp) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p(nvars);
    Monomial m(nvars);
    m.e[i] = exp;
    p.terms_.push_back({std::move(m), mpq_class(1)});
    return p;
}

Poly Poly::monomial(Monomial m, const mpq_class& c) {
    Poly p(m.nvars());
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> ts) {
    std::map<Monomial, mpq_class, CanonLess> acc;
    for (auto& t : ts) acc[t.m] += t.c;
    Poly p(nvars);
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

int Poly::weighted_degree(const std::vector<int>& w) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.weighted_degree(w));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.degree();
    for (const auto& t : terms_)
        if (t.m.degree() != d) return false;
    return true;
}

bool Poly::is_homogeneous(const std::vector<int>& w) const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.weighted_degree(w);
    for (const auto& t : terms_)
        if (t.m.weighted_degree(w) != d) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

Poly Poly::operator+(const Poly& q) const {
    check_ambient(*this, q);
    Poly r(nv_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        int c = kCanonical.cmp(terms_[i].m, q.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            mpq_class s = terms_[i].c + q.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& q) const { return *this + (-q); }

Poly Poly::operator*(const Poly& q) const {
    check_ambient(*this, q);
    std::map<Monomial, mpq_class, CanonLess> acc;
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) acc[a.m * b.m] += a.c * b.c;
    Poly r(nv_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const mpq_class& s) const {
    if (s == 0) return Poly(nv_);
    Poly p(*this);
    for (auto& t : p.terms_) t.c *= s;
    return p;
}

bool Poly::operator==(const Poly& q) const {
    if (nv_ != q.nv_ || terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != q.terms_[i].m || terms_[i].c != q.terms_[i].c) return false;
    return true;
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_[0].c < 0) content = -content;
    Poly p(*this);
    for (auto& t : p.terms_) {
        t.c /= content;
        t.c.canonicalize();
    }
    return p;
}

Poly Poly::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    return *this * (mpq_class(1) / lead(ord).c);
}

const Term& Poly::lead(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("lead term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (ord.cmp(t.m, best->m) > 0) best = &t;
    return *best;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nv_) throw std::invalid_argument("derivative index out of range");
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.m, t.c * t.m.e[var]};
        d.m.e[var] -= 1;
        ts.push_back(std::move(d));
    }
    return from_terms(nv_, std::move(ts));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nv_)
        throw std::invalid_argument("substitute: image count != variable count");
    int out_nv = images.empty() ? 0 : images[0].nvars();
    Poly r(out_nv);
    for (const auto& t : terms_) {
        Poly word = Poly::constant(out_nv, t.c);
        for (int i = 0; i < nv_; ++i)
            for (int k = 0; k < t.m.e[i]; ++k) word = word * images[i];
        r = r + word;
    }
    return r;
}

Poly Poly::embed(int nvars, int offset) const {
    if (offset + nv_ > nvars) throw std::invalid_argument("embed: target ring too small");
    Poly r(nvars);
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        Monomial m(nvars);
        for (int i = 0; i < nv_; ++i) m.e[offset + i] = t.m.e[i];
        ts.push_back({std::move(m), t.c});
    }
    return from_terms(nvars, std::move(ts));
}

Poly Poly::project(int nvars, int offset) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        Monomial m(nvars);
        for (int i = 0; i < nv_; ++i) {
            if (t.m.e[i] == 0) continue;
            if (i < offset || i >= offset + nvars)
                throw std::invalid_argument("project: foreign variable present");
            m.e[i - offset] = t.m.e[i];
        }
        ts.push_back({std::move(m), t.c});
    }
    return from_terms(nvars, std::move(ts));
}

std::string format_rational(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t.m.is_one()) {
            os << format_rational(c);
            printed_coeff = true;
        }
        bool any_var = false;
        for (int i = 0; i < nv_; ++i) {
            if (t.m.e[i] == 0) continue;
            if (printed_coeff || any_var) os << "*";
            os << names[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            any_var = true;
        }
    }
    return os.str();
}

std::string Poly::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < nv_; ++i) names.push_back("x" + std::to_string(i));
    return str(names);
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div by zero");
    const MonomialOrder& ord = kCanonical;
    Poly rem = a, q(a.nvars());
    const Term& lb = b.lead(ord);
    while (!rem.is_zero()) {
        const Term& lr = rem.lead(ord);
        if (!lb.m.divides(lr.m)) throw std::logic_error("exact_div: not divisible");
        Poly t = Poly::monomial(lr.m / lb.m, lr.c / lb.c);
        q = q + t;
        rem = rem - t * b;
    }
    return q;
}

int matrix_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    Poly prev_pivot; // empty: first step divides by 1
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                Poly num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                m[r][c] = prev_pivot.is_zero() ? num : exact_div(num, prev_pivot);
            }
            m[r][col] = Poly(m[r][col].nvars());
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace polsyz
