#pragma once

#include <optional>
#include <vector>

#include "perimap/mpoly.hpp"

namespace perimap {

// ---------------------------------------------------------------------------
// Exact division. For a single divisor the division algorithm leaves a zero
// remainder iff the divisor divides exactly, so this doubles as the
// divisibility test.
// ---------------------------------------------------------------------------

inline std::optional<MPoly> try_exact_div(const MPoly& p, const MPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MPoly q(p.vars());
    MPoly r = p;
    std::vector<Term> qts;
    while (!r.is_zero()) {
        const Mono& lm = r.leading_mono();
        if (!mono_divides(g.leading_mono(), lm)) return std::nullopt;
        Rat c = r.leading_coeff() / g.leading_coeff();
        Mono m = mono_div(lm, g.leading_mono());
        r -= MPoly::monomial(p.vars(), m, c) * g;
        qts.push_back({std::move(m), std::move(c)});
    }
    return MPoly::from_terms(p.vars(), std::move(qts));
}

inline MPoly exact_div(const MPoly& p, const MPoly& g) {
    auto q = try_exact_div(p, g);
    if (!q) throw InexactDivisionError("polynomial division left a remainder");
    return *q;
}

inline bool divides(const MPoly& g, const MPoly& p) {
    if (p.is_zero()) return true;
    return try_exact_div(p, g).has_value();
}

// ---------------------------------------------------------------------------
// Multivariate gcd. The fast path is the evaluation-based heuristic
// (substitute a large integer, take the gcd one level down, read the result
// back off base-xi digits); every candidate is verified by trial division, so
// a heuristic miss only costs a retry. The fallback is a primitive PRS.
// Results are integer-primitive with positive leading coefficient.
// ---------------------------------------------------------------------------

namespace detail {

inline Rat balanced_mod(const Rat& c, const Int& xi) {
    // c is an integer here
    Int v = c.get_num() % xi;
    if (v < 0) v += xi;
    if (v * 2 >= xi) v -= xi;
    return Rat(v);
}

inline MPoly poly_balanced_mod(const MPoly& p, const Int& xi) {
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
        Rat c = balanced_mod(t.c, xi);
        if (!rat_is_zero(c)) ts.push_back({t.m, std::move(c)});
    }
    return MPoly::from_terms(p.vars(), std::move(ts));
}

inline std::vector<int> active_vars(const MPoly& p, const MPoly& q) {
    std::vector<int> av;
    for (std::size_t i = 0; i < p.vars()->size(); ++i)
        if (p.contains_var(static_cast<int>(i)) || q.contains_var(static_cast<int>(i)))
            av.push_back(static_cast<int>(i));
    return av;
}

// gcd of the rational contents, as a constant polynomial; this is the whole
// gcd when the polynomial parts share no variable
inline MPoly content_gcd_const(const MPoly& p, const MPoly& q) {
    Rat cp = abs(p.content()), cq = abs(q.content());
    Int gn, gd;
    mpz_gcd(gn.get_mpz_t(), cp.get_num().get_mpz_t(), cq.get_num().get_mpz_t());
    mpz_lcm(gd.get_mpz_t(), cp.get_den().get_mpz_t(), cq.get_den().get_mpz_t());
    Rat g(gn, gd);
    g.canonicalize();
    return MPoly::constant(p.vars(), g);
}

// Heuristic gcd on integer-coefficient polynomials. Returns primitive result.
inline std::optional<MPoly> gcd_heu(const MPoly& p, const MPoly& q, int depth = 0) {
    if (depth > 12) return std::nullopt;
    auto av = active_vars(p, q);
    if (av.empty()) return content_gcd_const(p, q);

    int v = av.back();
    if (!p.contains_var(v) || !q.contains_var(v)) {
        // a variable on one side only cannot enter the gcd; pick a shared one
        for (int cand : av)
            if (p.contains_var(cand) && q.contains_var(cand)) {
                v = cand;
                break;
            }
        if (!p.contains_var(v) || !q.contains_var(v)) {
            // no shared variable: only the contents can divide both
            return content_gcd_const(p, q);
        }
    }

    Int hp = p.height(), hq = q.height();
    Int xi = 2 * (hp < hq ? hp : hq) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MPoly pe = p.subst_const(v, Rat(xi));
        MPoly qe = q.subst_const(v, Rat(xi));
        std::optional<MPoly> gamma;
        if (!pe.is_zero() && !qe.is_zero()) {
            if (active_vars(pe, qe).empty()) {
                // integer gcd at the bottom of the recursion
                Int a = abs(pe.constant_value().get_num());
                Int b = abs(qe.constant_value().get_num());
                Int g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                gamma = MPoly::constant(p.vars(), Rat(g));
            } else {
                gamma = gcd_heu(pe, qe, depth + 1);
            }
        }
        if (gamma) {
            // reconstruct candidate from base-xi digits of gamma
            MPoly g(p.vars());
            MPoly rem = *gamma;
            std::uint32_t e = 0;
            bool ok = true;
            while (!rem.is_zero()) {
                if (e > p.degree_in(v) && e > q.degree_in(v)) {
                    ok = false;
                    break;
                }
                MPoly digit = poly_balanced_mod(rem, xi);
                if (!digit.is_zero()) {
                    Mono shift(p.vars()->size(), 0);
                    shift[static_cast<std::size_t>(v)] = e;
                    g += MPoly::monomial(p.vars(), shift, Rat(1)) * digit;
                }
                rem = rem - digit;
                // exact divide coefficients by xi
                std::vector<Term> ts;
                for (auto& t : rem.terms()) ts.push_back({t.m, Rat(t.c.get_num() / xi)});
                rem = MPoly::from_terms(p.vars(), std::move(ts));
                ++e;
            }
            if (ok && !g.is_zero()) {
                // do NOT make primitive here: at inner recursion levels the
                // integer content carries the evaluated image of content
                // factors, which the caller's digit reconstruction needs
                if (divides(g, p) && divides(g, q)) return g;
            }
        }
        xi = xi * 73794 / 27011;  // next evaluation point
    }
    return std::nullopt;
}

MPoly gcd_prs(const MPoly& p, const MPoly& q);

}  // namespace detail

MPoly poly_gcd(const MPoly& p, const MPoly& q);

namespace detail {

// gcd of the coefficient list of p w.r.t. variable v (the content), itself a
// polynomial in the remaining variables.
inline MPoly content_wrt(const MPoly& p, int v) {
    auto cs = p.univar_coeffs(v);
    MPoly g(p.vars());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in variable v.
inline MPoly prem(const MPoly& a, const MPoly& b, int v) {
    auto ac = a.univar_coeffs(v);
    auto bc = b.univar_coeffs(v);
    long da = static_cast<long>(ac.size()) - 1;
    long db = static_cast<long>(bc.size()) - 1;
    MPoly lb = bc.back();
    MPoly r = a;
    long steps = da - db + 1;
    for (long k = 0; k < steps && !r.is_zero(); ++k) {
        auto rc = r.univar_coeffs(v);
        long dr = static_cast<long>(rc.size()) - 1;
        if (dr < db) break;
        // r = lb * r - lead(r) * v^(dr-db) * b
        Mono shift(a.vars()->size(), 0);
        shift[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(dr - db);
        r = lb * r - MPoly::monomial(a.vars(), shift, Rat(1)) * rc.back() * b;
    }
    return r;
}

inline MPoly gcd_prs(const MPoly& p, const MPoly& q) {
    // choose main variable: shared, minimizing the smaller degree
    auto av = active_vars(p, q);
    int best = -1;
    std::uint32_t best_deg = 0;
    for (int v : av) {
        std::uint32_t dp = p.degree_in(v), dq = q.degree_in(v);
        if (dp == 0 || dq == 0) continue;
        std::uint32_t d = std::min(dp, dq);
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    if (best < 0) return MPoly::constant(p.vars(), Rat(1));

    MPoly cp = content_wrt(p, best), cq = content_wrt(q, best);
    MPoly cg = poly_gcd(cp, cq);
    MPoly a = exact_div(p, cp), b = exact_div(q, cq);
    if (a.degree_in(best) < b.degree_in(best)) std::swap(a, b);
    while (true) {
        MPoly r = prem(a, b, best);
        if (r.is_zero()) break;
        if (r.degree_in(best) == 0) {
            b = MPoly::constant(p.vars(), Rat(1));
            break;
        }
        r = exact_div(r, content_wrt(r, best));
        a = b;
        b = r;
    }
    return (cg * b).primitive_part();
}

}  // namespace detail

// Primitive positive-leading gcd; poly_gcd(p, 0) = primitive part of p.
inline MPoly poly_gcd(const MPoly& p, const MPoly& q) {
    if (p.is_zero()) return q.is_zero() ? q : q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    MPoly a = p.primitive_part(), b = q.primitive_part();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(p.vars(), Rat(1));
    if (a == b) return a;
    if (auto g = detail::gcd_heu(a, b)) return g->primitive_part();
    return detail::gcd_prs(a, b);
}

inline MPoly poly_gcd_many(const std::vector<MPoly>& v) {
    MPoly g;
    bool started = false;
    for (auto& p : v) {
        if (p.is_zero()) continue;
        g = started ? poly_gcd(g, p) : p.primitive_part();
        started = true;
        if (g.is_constant()) break;
    }
    if (!started) throw DegenerateError("gcd of all-zero list");
    return g;
}

// Divide every entry by the common gcd (including rational content); returns
// the stripped list and the overall factor that was removed.
inline std::pair<std::vector<MPoly>, MPoly> content_strip(const std::vector<MPoly>& v) {
    if (v.empty()) throw DegenerateError("content_strip of empty list");
    MPoly g = poly_gcd_many(v);  // throws on all-zero
    std::vector<MPoly> out;
    out.reserve(v.size());
    // also strip the common rational content so entries are jointly primitive
    Rat rc(0);
    for (auto& p : v) {
        if (p.is_zero()) continue;
        MPoly q = exact_div(p, g);
        Rat c = q.content();
        if (rat_is_zero(rc))
            rc = abs(c);
        else {
            Int gn, gd;
            mpz_gcd(gn.get_mpz_t(), rc.get_num().get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(gd.get_mpz_t(), rc.get_den().get_mpz_t(), c.get_den().get_mpz_t());
            rc = Rat(gn, gd);
            rc.canonicalize();
        }
    }
    // fix overall sign by the first nonzero entry
    for (auto& p : v) {
        if (!p.is_zero()) {
            if (sgn(exact_div(p, g).leading_coeff()) < 0) rc = -rc;
            break;
        }
    }
    for (auto& p : v) out.push_back(p.is_zero() ? p : exact_div(p, g) * (Rat(1) / rc));
    return {out, g * rc};
}

// Squarefree part over characteristic zero: p / gcd(p, all partials).
inline MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero() || p.is_constant()) return p.primitive_part();
    MPoly g = p.primitive_part();
    MPoly m = g;
    for (std::size_t v = 0; v < p.vars()->size(); ++v) {
        if (!p.contains_var(static_cast<int>(v))) continue;
        m = poly_gcd(m, g.derivative(static_cast<int>(v)));
        if (m.is_constant()) break;
    }
    return exact_div(g, m).primitive_part();
}

// Exact square root of a perfect-square polynomial (greedy leading-term
// descent under graded-lex). Throws if p is not a square.
inline MPoly poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return p;
    const Mono& lm = p.leading_mono();
    Mono half(lm.size());
    for (std::size_t i = 0; i < lm.size(); ++i) {
        if (lm[i] % 2) throw InexactDivisionError("not a square: odd leading exponent");
        half[i] = lm[i] / 2;
    }
    const Rat& lc = p.leading_coeff();
    if (sgn(lc) < 0) throw InexactDivisionError("not a square: negative leading coefficient");
    Int sn, sd;
    if (!mpz_perfect_square_p(lc.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(lc.get_den().get_mpz_t()))
        throw InexactDivisionError("not a square: leading coefficient");
    mpz_sqrt(sn.get_mpz_t(), lc.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), lc.get_den().get_mpz_t());
    Rat slc(sn, sd);
    slc.canonicalize();

    MPoly s = MPoly::monomial(p.vars(), half, slc);
    MPoly r = p - s * s;
    std::size_t guard = 4 * (p.nterms() + 2) * (p.nterms() + 2);
    while (!r.is_zero()) {
        if (guard-- == 0) throw InexactDivisionError("not a square: no convergence");
        const Mono& rm = r.leading_mono();
        Mono tm(rm.size());
        const Mono& sm = s.leading_mono();
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < sm[i]) throw InexactDivisionError("not a square");
            tm[i] = rm[i] - sm[i];
        }
        MPoly t = MPoly::monomial(p.vars(), tm, r.leading_coeff() / (Rat(2) * s.leading_coeff()));
        r = r - (Rat(2) * s * t) - t * t;
        s += t;
    }
    if (sgn(s.leading_coeff()) < 0) s = -s;
    return s;
}

}  // namespace perimap
