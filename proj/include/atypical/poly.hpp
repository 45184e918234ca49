#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "atypical/rational.hpp"

namespace atypical {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Monomial exponents; length always equals the ambient variable count.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

// Graded-lex, highest term first: canonical iteration equals printing order.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

struct ComplexMatrix {
    std::size_t rows = 0, cols = 0;
    CVec data;  // row major

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Complex& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Sparse multivariate polynomial over Q(i).  Zero coefficients are never
// stored; immutable by convention once built (all operations return copies).
class SparsePoly {
public:
    using TermMap = std::map<Exponents, GaussianRational, TermOrder>;

    explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, GaussianRational c) {
        SparsePoly p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }

    static SparsePoly variable(std::size_t nvars, std::size_t i) {
        SparsePoly p(nvars);
        Exponents e(nvars, 0);
        e.at(i) = 1;
        p.add_term(std::move(e), GaussianRational(1));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    GaussianRational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    GaussianRational constant_term() const { return coefficient(Exponents(nvars_, 0)); }

    void add_term(Exponents e, GaussianRational c) {
        if (e.size() != nvars_) throw std::invalid_argument("exponent length != nvars");
        for (int v : e)
            if (v < 0) throw std::invalid_argument("negative exponent");
        accumulate(e, c);
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly r = a;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly r = a;
        for (const auto& [e, c] : b.terms_) r.accumulate(e, -c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }

    SparsePoly scaled(const GaussianRational& s) const {
        SparsePoly r(nvars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, s * c);
        return r;
    }

    SparsePoly pow(unsigned k) const {
        SparsePoly r = constant(nvars_, GaussianRational(1));
        SparsePoly base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    // Formal partial derivative with respect to variable i (0-based), exact.
    SparsePoly partial(std::size_t i) const {
        if (i >= nvars_) throw std::out_of_range("variable index out of range");
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            --d[i];
            r.terms_.emplace(std::move(d), Rational(e[i]) * c);
        }
        return r;
    }

    Complex evaluate(const CVec& z) const {
        if (z.size() != nvars_) throw std::invalid_argument("point length != nvars");
        Complex acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            Complex t = c.to_complex();
            for (std::size_t i = 0; i < nvars_; ++i) {
                for (int k = 0; k < e[i]; ++k) t *= z[i];
            }
            acc += t;
        }
        return acc;
    }

    std::set<Exponents> support() const {
        std::set<Exponents> s;
        for (const auto& [e, c] : terms_) s.insert(e);
        return s;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    static void check_same(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("mixed variable counts");
    }

    void accumulate(const Exponents& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    TermMap terms_;
};

// Canonical rendering; re-parses to the identical term map.
inline std::string to_string(const SparsePoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        GaussianRational coef = c;
        if (first) {
            if (coef.is_real() && coef.re < 0) {
                out += "-";
                coef = -coef;
            }
        } else {
            if (coef.is_real() && coef.re < 0) {
                out += " - ";
                coef = -coef;
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool unit = coef.is_real() && coef.re == 1;
        if (mono.empty()) {
            out += to_string(coef);
        } else if (unit) {
            out += mono;
        } else {
            out += to_string(coef) + "*" + mono;
        }
    }
    return out;
}

// Restriction of f to a set of exponents (a face of its Newton polyhedron).
// Points outside supp(f) other than the origin are rejected.
inline SparsePoly face_restriction(const SparsePoly& f, const std::set<Exponents>& points) {
    SparsePoly r(f.nvars());
    const Exponents origin(f.nvars(), 0);
    for (const auto& e : points) {
        auto c = f.coefficient(e);
        if (c.is_zero()) {
            if (e != origin) throw std::invalid_argument("face point not in the support");
            continue;
        }
        r.add_term(e, c);
    }
    return r;
}

// m-tuple of polynomials over common variables, 1 <= m < n.  The symbolic
// Jacobian is precomputed once; evaluation is then pure.
class PolyMap {
public:
    explicit PolyMap(std::vector<SparsePoly> components) : components_(std::move(components)) {
        if (components_.empty()) throw std::invalid_argument("empty map");
        nvars_ = components_[0].nvars();
        for (const auto& f : components_)
            if (f.nvars() != nvars_) throw std::invalid_argument("mixed variable counts");
        if (components_.size() >= nvars_)
            throw std::invalid_argument("need n > m >= 1 (strictly fewer components than variables)");
        partials_.resize(components_.size());
        for (std::size_t j = 0; j < components_.size(); ++j) {
            partials_[j].reserve(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) partials_[j].push_back(components_[j].partial(i));
        }
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t arity() const { return components_.size(); }
    const std::vector<SparsePoly>& components() const { return components_; }
    const SparsePoly& component(std::size_t j) const { return components_.at(j); }
    const SparsePoly& partial(std::size_t j, std::size_t i) const { return partials_.at(j).at(i); }

    CVec evaluate(const CVec& z) const {
        CVec w(components_.size());
        for (std::size_t j = 0; j < components_.size(); ++j) w[j] = components_[j].evaluate(z);
        return w;
    }

    // Entry (j, i) is dF_j/dx_i at z.
    ComplexMatrix jacobian(const CVec& z) const {
        if (z.size() != nvars_) throw std::invalid_argument("point length != nvars");
        ComplexMatrix m(components_.size(), nvars_);
        for (std::size_t j = 0; j < components_.size(); ++j)
            for (std::size_t i = 0; i < nvars_; ++i) m.at(j, i) = partials_[j][i].evaluate(z);
        return m;
    }

    CVec value_at_origin() const {
        CVec v(components_.size());
        for (std::size_t j = 0; j < components_.size(); ++j)
            v[j] = components_[j].constant_term().to_complex();
        return v;
    }

private:
    std::vector<SparsePoly> components_;
    std::vector<std::vector<SparsePoly>> partials_;
    std::size_t nvars_;
};

}  // namespace atypical
