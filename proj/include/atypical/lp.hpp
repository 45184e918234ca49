#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "atypical/exact_linalg.hpp"
#include "atypical/rational.hpp"

namespace atypical {

enum class Rel { EQ, LE, GE, LT, GT };

struct LinearConstraint {
    RatVec coeffs;
    Rel rel = Rel::EQ;
    Rational rhs = Rational(0);
};

struct LpResult {
    bool feasible = false;
    RatVec witness;   // length = nvars, exact
    Rational gap;     // achieved strictness gap (1 when clamped / no strict rows)
};

inline bool constraint_satisfied(const LinearConstraint& c, const RatVec& x) {
    Rational lhs = dot(c.coeffs, x);
    switch (c.rel) {
        case Rel::EQ: return lhs == c.rhs;
        case Rel::LE: return lhs <= c.rhs;
        case Rel::GE: return lhs >= c.rhs;
        case Rel::LT: return lhs < c.rhs;
        case Rel::GT: return lhs > c.rhs;
    }
    return false;
}

namespace detail {

// Dense exact simplex, maximization, Bland's rule throughout.
class Simplex {
public:
    RatMatrix a;  // kept in canonical form (basis columns are identity)
    RatVec b;
    std::vector<std::size_t> basis;

    enum class Status { OPTIMAL, UNBOUNDED, INFEASIBLE };

    // Phase 1 with artificial variables; afterwards artificial columns are gone.
    Status phase1() {
        const std::size_t m = a.size();
        const std::size_t n = m ? a[0].size() : 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) a[i].push_back(i == k ? Rational(1) : Rational(0));
        }
        basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
        RatVec c(n + m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) c[n + i] = -1;
        if (run(c) != Status::OPTIMAL) return Status::INFEASIBLE;  // phase 1 is always bounded
        Rational v(0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] >= n) v -= b[i];
        if (v != 0) return Status::INFEASIBLE;
        // Pivot remaining zero-value artificials out, or drop redundant rows.
        for (std::size_t i = 0; i < a.size();) {
            if (basis[i] < n) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < n && a[i][j] == 0) ++j;
            if (j < n) {
                pivot(i, j);
                ++i;
            } else {
                a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
                b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (auto& row : a) row.resize(n);
        return Status::OPTIMAL;
    }

    Status maximize(const RatVec& c) { return run(c); }

    RatVec solution(std::size_t n) const {
        RatVec y(n, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] < n) y[basis[i]] = b[i];
        return y;
    }

private:
    Status run(const RatVec& c) {
        for (;;) {
            RatVec r = c;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const Rational& cb = c[basis[i]];
                if (cb == 0) continue;
                for (std::size_t j = 0; j < r.size(); ++j) r[j] -= cb * a[i][j];
            }
            std::size_t enter = r.size();
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (r[j] > 0) {
                    enter = j;
                    break;  // Bland: lowest index
                }
            }
            if (enter == r.size()) return Status::OPTIMAL;
            std::size_t leave = a.size();
            Rational best;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = b[i] / a[i][enter];
                if (leave == a.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == a.size()) return Status::UNBOUNDED;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational inv = a[pr][pc];
        for (auto& v : a[pr]) v /= inv;
        b[pr] /= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == pr || a[i][pc] == 0) continue;
            const Rational f = a[i][pc];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[pr][j];
            b[i] -= f * b[pr];
        }
        basis[pr] = pc;
    }
};

inline LpResult lp_feasible_impl(const std::vector<LinearConstraint>& constraints,
                                 std::size_t nvars, bool clamp_eps) {
    bool strict = false;
    for (const auto& c : constraints)
        if (c.rel == Rel::LT || c.rel == Rel::GT) strict = true;

    // Columns: u_0..u_{k-1}, v_0..v_{k-1} (x = u - v), then eps, then slacks.
    const std::size_t eps_col = 2 * nvars;
    const std::size_t ncore = eps_col + (strict ? 1 : 0);
    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::EQ) ++nslack;
    if (strict && clamp_eps) ++nslack;
    const std::size_t ncols = ncore + nslack;

    Simplex sx;
    std::size_t slack = ncore;
    auto add_row = [&](const LinearConstraint& c) {
        RatVec row(ncols, Rational(0));
        for (std::size_t j = 0; j < nvars; ++j) {
            row[j] = c.coeffs[j];
            row[nvars + j] = -c.coeffs[j];
        }
        Rational rhs = c.rhs;
        switch (c.rel) {
            case Rel::EQ: break;
            case Rel::LE: row[slack++] = 1; break;
            case Rel::GE: row[slack++] = -1; break;
            case Rel::LT: row[eps_col] = 1; row[slack++] = 1; break;   // a.x + eps <= rhs
            case Rel::GT: row[eps_col] = -1; row[slack++] = -1; break; // a.x - eps >= rhs
        }
        if (rhs < 0) {
            for (auto& v : row) v = -v;
            rhs = -rhs;
        }
        sx.a.push_back(std::move(row));
        sx.b.push_back(rhs);
    };
    for (const auto& c : constraints) add_row(c);
    if (strict && clamp_eps) {
        LinearConstraint cap;
        cap.coeffs.assign(nvars, Rational(0));
        cap.rel = Rel::LE;
        cap.rhs = 1;
        RatVec row(ncols, Rational(0));
        row[eps_col] = 1;
        row[slack++] = 1;
        sx.a.push_back(std::move(row));
        sx.b.push_back(Rational(1));
    }

    LpResult res;
    if (sx.phase1() != Simplex::Status::OPTIMAL) return res;
    if (strict) {
        RatVec c(ncols, Rational(0));
        c[eps_col] = 1;
        auto st = sx.maximize(c);
        if (st == Simplex::Status::UNBOUNDED) {
            // The gap can grow without bound; clamp it to 1 and redo.
            return lp_feasible_impl(constraints, nvars, true);
        }
        RatVec y = sx.solution(ncols);
        if (y[eps_col] <= 0) return res;
        res.gap = y[eps_col];
        res.feasible = true;
        res.witness.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j) res.witness[j] = y[j] - y[nvars + j];
        return res;
    }
    RatVec y = sx.solution(ncols);
    res.feasible = true;
    res.gap = 1;
    res.witness.resize(nvars);
    for (std::size_t j = 0; j < nvars; ++j) res.witness[j] = y[j] - y[nvars + j];
    return res;
}

}  // namespace detail

// Exact feasibility over the rationals.  Strict inequalities are honoured by
// maximizing a shared gap variable; the system is declared feasible only when
// the optimal gap is positive (exactly), and an unbounded gap is clamped to 1.
inline LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t nvars) {
    return detail::lp_feasible_impl(constraints, nvars, false);
}

}  // namespace atypical
