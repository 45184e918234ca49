#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "atypical/exact_linalg.hpp"
#include "atypical/lp.hpp"
#include "atypical/poly.hpp"

namespace atypical {

using Covector = RatVec;

// Scale to a primitive integer vector, preserving direction.
inline Covector canonical_covector(Covector c) {
    BigInt l = 1;
    for (const auto& r : c) l = lcm(l, denominator(r));
    BigInt g = 0;
    for (auto& r : c) {
        r *= Rational(l);
        g = gcd(g, numerator(r));
    }
    if (g > 1)
        for (auto& r : c) r /= Rational(g);
    return c;
}

inline Rational apply_covector(const Covector& c, const Exponents& p) {
    Rational s(0);
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * p[i];
    return s;
}

// A closed face of a lattice polytope: the generators attaining the minimum
// of `normal`, together with that minimum.  The improper face carries a
// covector vanishing on the affine hull (all-zero for full-dimensional hulls).
struct Face {
    std::vector<Exponents> points;  // sorted, deduplicated
    Covector normal;
    Rational value;
    int dim = 0;

    bool contains_origin() const {
        if (points.empty()) return false;
        const Exponents origin(points[0].size(), 0);
        return std::binary_search(points.begin(), points.end(), origin);
    }

    std::set<Exponents> point_set() const { return {points.begin(), points.end()}; }

    friend bool operator==(const Face& a, const Face& b) { return a.points == b.points; }
    friend bool operator<(const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.points < b.points;
    }
};

struct LatticePolytope {
    std::vector<Exponents> generators;  // sorted, deduplicated
    std::vector<Exponents> vertices;
    int dim = 0;
};

namespace detail {

inline RatMatrix to_rat_rows(const std::vector<Exponents>& pts) {
    RatMatrix m;
    m.reserve(pts.size());
    for (const auto& p : pts) {
        RatVec r(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) r[j] = p[j];
        m.push_back(std::move(r));
    }
    return m;
}

inline std::vector<Exponents> sorted_unique(std::vector<Exponents> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline int affine_dim_of(const std::vector<Exponents>& pts) {
    return static_cast<int>(affine_dim(to_rat_rows(pts)));
}

// All k-subsets of {0..n-1}, lexicographic.
inline bool next_combination(std::vector<std::size_t>& ix, std::size_t n) {
    const std::size_t k = ix.size();
    for (std::size_t i = k; i-- > 0;) {
        if (ix[i] < n - k + i) {
            ++ix[i];
            for (std::size_t j = i + 1; j < k; ++j) ix[j] = ix[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Irredundant vertex set: a generator is a vertex iff it is not a convex
// combination of the others (one exact LP per generator).
inline LatticePolytope hull_vertices(const std::vector<Exponents>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    LatticePolytope poly;
    poly.generators = detail::sorted_unique(points);
    poly.dim = detail::affine_dim_of(poly.generators);
    const std::size_t n = poly.generators[0].size();
    for (std::size_t i = 0; i < poly.generators.size(); ++i) {
        std::vector<const Exponents*> others;
        for (std::size_t k = 0; k < poly.generators.size(); ++k)
            if (k != i) others.push_back(&poly.generators[k]);
        if (others.empty()) {
            poly.vertices.push_back(poly.generators[i]);
            continue;
        }
        // lambda >= 0, sum lambda = 1, sum lambda * q = p
        std::vector<LinearConstraint> cs;
        const std::size_t k = others.size();
        for (std::size_t j = 0; j < n; ++j) {
            LinearConstraint c;
            c.coeffs.resize(k);
            for (std::size_t t = 0; t < k; ++t) c.coeffs[t] = (*others[t])[j];
            c.rel = Rel::EQ;
            c.rhs = poly.generators[i][j];
            cs.push_back(std::move(c));
        }
        LinearConstraint sum;
        sum.coeffs.assign(k, Rational(1));
        sum.rel = Rel::EQ;
        sum.rhs = 1;
        cs.push_back(std::move(sum));
        for (std::size_t t = 0; t < k; ++t) {
            LinearConstraint nn;
            nn.coeffs.assign(k, Rational(0));
            nn.coeffs[t] = 1;
            nn.rel = Rel::GE;
            nn.rhs = 0;
            cs.push_back(std::move(nn));
        }
        if (!lp_feasible(cs, k).feasible) poly.vertices.push_back(poly.generators[i]);
    }
    return poly;
}

// Face of all generators attaining min P.alpha, with that minimum as value.
inline Face minimizing_face(const LatticePolytope& poly, const Covector& p) {
    bool nonzero = false;
    for (const auto& r : p) nonzero = nonzero || r != 0;
    if (!nonzero) throw std::invalid_argument("zero covector");
    Face f;
    f.normal = p;
    bool first = true;
    for (const auto& g : poly.generators) {
        Rational v = apply_covector(p, g);
        if (first || v < f.value) {
            f.value = v;
            f.points.clear();
            first = false;
        }
        if (v == f.value) f.points.push_back(g);
    }
    std::sort(f.points.begin(), f.points.end());
    f.dim = detail::affine_dim_of(f.points);
    return f;
}

// Exact check of the Face contract against a generator set.
inline bool face_is_supported(const Face& f, const std::vector<Exponents>& generators) {
    for (const auto& p : f.points)
        if (apply_covector(f.normal, p) != f.value) return false;
    for (const auto& g : generators) {
        if (std::binary_search(f.points.begin(), f.points.end(), g)) continue;
        if (apply_covector(f.normal, g) <= f.value) return false;
    }
    return true;
}

// Complete face lattice (vertices through the improper face, empty face
// excluded).  Facets are found by scanning affinely independent d-subsets of
// generators; every other face is an intersection of facets, and its covector
// is the sum of the covectors of the facets containing it.
inline std::vector<Face> enumerate_faces(const LatticePolytope& poly) {
    const auto& gens = poly.generators;
    const std::size_t ngen = gens.size();
    const std::size_t nsp = gens[0].size();
    const int d = poly.dim;

    auto finish = [&](Face f) {
        std::sort(f.points.begin(), f.points.end());
        f.dim = detail::affine_dim_of(f.points);
        if (!face_is_supported(f, gens)) throw std::logic_error("face enumeration produced an unsupported face");
        return f;
    };

    std::vector<Face> out;
    if (d == 0) {
        Face f;
        f.points = gens;
        Covector c(nsp, Rational(0));
        if (!c.empty()) c[0] = 1;
        f.normal = c;
        f.value = apply_covector(c, gens[0]);
        f.dim = 0;
        out.push_back(std::move(f));
        return out;
    }

    // Affine-hull basis (rows of B) and hull coordinates of each generator.
    RatMatrix dirs;
    for (std::size_t i = 1; i < ngen; ++i) {
        RatVec v(nsp);
        for (std::size_t j = 0; j < nsp; ++j) v[j] = gens[i][j] - gens[0][j];
        dirs.push_back(std::move(v));
    }
    RatMatrix basis = dirs;
    rref(basis);
    basis.resize(static_cast<std::size_t>(d));
    RatMatrix basis_t(nsp, RatVec(static_cast<std::size_t>(d)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < nsp; ++j) basis_t[j][i] = basis[i][j];
    RatMatrix coords(ngen, RatVec(static_cast<std::size_t>(d), Rational(0)));
    for (std::size_t i = 1; i < ngen; ++i) {
        RatVec diff(nsp);
        for (std::size_t j = 0; j < nsp; ++j) diff[j] = gens[i][j] - gens[0][j];
        auto h = rat_solve(basis_t, diff);
        if (!h) throw std::logic_error("generator outside its own affine hull");
        coords[i] = *h;
    }

    // Facets: supporting hyperplanes spanned by d affinely independent points.
    std::set<std::vector<std::size_t>> facet_sets;
    std::vector<Covector> facet_normals;  // hull coordinates, minimizing side
    std::vector<std::vector<std::size_t>> facet_list;
    std::vector<std::size_t> subset(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = i;
    do {
        RatMatrix rel;
        for (std::size_t i = 1; i < subset.size(); ++i) {
            RatVec v(static_cast<std::size_t>(d));
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = coords[subset[i]][j] - coords[subset[0]][j];
            rel.push_back(std::move(v));
        }
        std::vector<RatVec> ns;
        if (rel.empty()) {
            ns.push_back(RatVec(static_cast<std::size_t>(d), Rational(0)));  // d == 1
            ns.back()[0] = 1;
        } else {
            ns = rat_nullspace(rel);
        }
        if (ns.size() != 1) continue;  // not affinely independent
        RatVec w = ns[0];
        const Rational level = dot(w, coords[subset[0]]);
        bool above = false, below = false;
        for (std::size_t i = 0; i < ngen; ++i) {
            Rational v = dot(w, coords[i]);
            if (v > level) above = true;
            if (v < level) below = true;
        }
        if (above && below) continue;  // cuts through the hull
        if (above) {  // face minimizes: flip so the face side is the minimum
            // already minimizing
        } else {
            for (auto& r : w) r = -r;
        }
        const Rational lv = dot(w, coords[subset[0]]);
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < ngen; ++i)
            if (dot(w, coords[i]) == lv) members.push_back(i);
        if (facet_sets.insert(members).second) {
            facet_normals.push_back(std::move(w));
            facet_list.push_back(std::move(members));
        }
    } while (detail::next_combination(subset, ngen));

    // Closure of facet sets under intersection = all proper faces.
    std::set<std::vector<std::size_t>> face_sets(facet_sets);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::vector<std::size_t>> snapshot(face_sets.begin(), face_sets.end());
        for (const auto& f : snapshot) {
            for (const auto& g : facet_list) {
                std::vector<std::size_t> inter;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && face_sets.insert(inter).second) grew = true;
            }
        }
    }

    // Improper face: covector from the orthogonal complement of the hull.
    {
        Face top;
        top.points = gens;
        auto comp = rat_nullspace(basis);
        Covector c(nsp, Rational(0));
        if (!comp.empty()) {
            c = canonical_covector(comp[0]);
            for (const auto& r : c)
                if (r != 0) {
                    if (r < 0)
                        for (auto& s : c) s = -s;
                    break;
                }
        }
        top.normal = c;
        top.value = apply_covector(c, gens[0]);
        out.push_back(finish(std::move(top)));
    }

    for (const auto& fs : face_sets) {
        Covector w(static_cast<std::size_t>(d), Rational(0));
        for (std::size_t k = 0; k < facet_list.size(); ++k) {
            if (std::includes(facet_list[k].begin(), facet_list[k].end(), fs.begin(), fs.end())) {
                for (std::size_t j = 0; j < w.size(); ++j) w[j] += facet_normals[k][j];
            }
        }
        auto c = rat_solve(basis, w);
        if (!c) throw std::logic_error("covector lift failed");
        Face f;
        f.normal = canonical_covector(*c);
        for (auto i : fs) f.points.push_back(gens[i]);
        f.value = apply_covector(f.normal, f.points[0]);
        out.push_back(finish(std::move(f)));
    }

    std::sort(out.begin(), out.end());
    return out;
}

// Brute-force face test: is there a covector constant on `candidate` and
// strictly larger on the remaining points?  Testing oracle for enumerate_faces.
inline bool is_face_oracle(const std::vector<Exponents>& points,
                           const std::vector<Exponents>& candidate) {
    if (candidate.empty()) return false;
    auto pts = detail::sorted_unique(points);
    auto cand = detail::sorted_unique(candidate);
    if (!std::includes(pts.begin(), pts.end(), cand.begin(), cand.end())) return false;
    const std::size_t n = pts[0].size();
    // unknowns: covector entries then the level v
    std::vector<LinearConstraint> cs;
    for (const auto& p : cand) {
        LinearConstraint c;
        c.coeffs.resize(n + 1);
        for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = p[j];
        c.coeffs[n] = -1;
        c.rel = Rel::EQ;
        c.rhs = 0;
        cs.push_back(std::move(c));
    }
    for (const auto& q : pts) {
        if (std::binary_search(cand.begin(), cand.end(), q)) continue;
        LinearConstraint c;
        c.coeffs.resize(n + 1);
        for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = q[j];
        c.coeffs[n] = -1;
        c.rel = Rel::GT;
        c.rhs = 0;
        cs.push_back(std::move(c));
    }
    return lp_feasible(cs, n + 1).feasible;
}

}  // namespace atypical
