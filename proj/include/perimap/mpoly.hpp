#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "perimap/dd.hpp"
#include "perimap/rational.hpp"
#include "perimap/vartable.hpp"

namespace perimap {

// Exponent vector; length always equals the size of the owning VarTable.
using Mono = std::vector<std::uint32_t>;

inline std::uint32_t mono_degree(const Mono& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic: compare total degree, then exponents left to right.
inline int grlex_cmp(const Mono& a, const Mono& b) {
    std::uint32_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

inline bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

struct Term {
    Mono m;
    Rat c;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted in descending graded-lex order with no zeros stored.
class MPoly {
  public:
    MPoly() = default;  // zero over a null table; usable as a placeholder only

    explicit MPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MPoly zero(VarTablePtr vars) { return MPoly(std::move(vars)); }

    static MPoly constant(VarTablePtr vars, const Rat& c) {
        MPoly p(std::move(vars));
        if (!rat_is_zero(c)) p.ts_.push_back({Mono(p.vars_->size(), 0), c});
        return p;
    }

    static MPoly var(VarTablePtr vars, int index, std::uint32_t power = 1) {
        MPoly p(vars);
        Mono m(vars->size(), 0);
        m[static_cast<std::size_t>(index)] = power;
        p.ts_.push_back({std::move(m), Rat(1)});
        return p;
    }
    static MPoly var(const VarTablePtr& vars, const std::string& name, std::uint32_t power = 1) {
        return var(vars, vars->require(name), power);
    }

    static MPoly monomial(VarTablePtr vars, Mono m, const Rat& c) {
        MPoly p(std::move(vars));
        if (!rat_is_zero(c)) p.ts_.push_back({std::move(m), c});
        return p;
    }

    static MPoly from_terms(VarTablePtr vars, std::vector<Term> ts) {
        std::map<Mono, Rat, GrlexGreater> acc;
        for (auto& t : ts) {
            if (rat_is_zero(t.c)) continue;
            auto [it, fresh] = acc.emplace(std::move(t.m), t.c);
            if (!fresh && rat_is_zero(it->second += t.c)) acc.erase(it);
        }
        MPoly p(std::move(vars));
        p.ts_.reserve(acc.size());
        for (auto& [m, c] : acc) p.ts_.push_back({m, c});
        return p;
    }

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return ts_; }
    std::size_t nterms() const { return ts_.size(); }
    bool is_zero() const { return ts_.empty(); }
    bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && mono_degree(ts_[0].m) == 0); }
    Rat constant_value() const { return ts_.empty() ? Rat(0) : ts_[0].c; }

    std::uint32_t degree() const { return ts_.empty() ? 0 : mono_degree(ts_[0].m); }
    std::uint32_t degree_in(int v) const {
        std::uint32_t d = 0;
        for (auto& t : ts_) d = std::max(d, t.m[static_cast<std::size_t>(v)]);
        return d;
    }
    bool contains_var(int v) const {
        for (auto& t : ts_)
            if (t.m[static_cast<std::size_t>(v)] > 0) return true;
        return false;
    }

    // leading data under the storage (graded-lex) order
    const Mono& leading_mono() const { return ts_.front().m; }
    const Rat& leading_coeff() const { return ts_.front().c; }

    Rat coeff(const Mono& m) const {
        for (auto& t : ts_) {
            int c = grlex_cmp(t.m, m);
            if (c == 0) return t.c;
            if (c < 0) break;
        }
        return Rat(0);
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.ts_.size() != b.ts_.size()) return false;
        for (std::size_t i = 0; i < a.ts_.size(); ++i)
            if (a.ts_[i].m != b.ts_[i].m || a.ts_[i].c != b.ts_[i].c) return false;
        return true;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& t : r.ts_) t.c = -t.c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merged(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merged(a, b, true); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check(a, b);
        MPoly r(a.vars_ ? a.vars_ : b.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Mono, Rat, GrlexGreater> acc;
        for (auto& ta : a.ts_)
            for (auto& tb : b.ts_) {
                Mono m = mono_mul(ta.m, tb.m);
                Rat c = ta.c * tb.c;
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh && rat_is_zero(it->second += c)) acc.erase(it);
            }
        r.ts_.reserve(acc.size());
        for (auto& [m, c] : acc) r.ts_.push_back({m, c});
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& s) {
        MPoly r = a;
        if (rat_is_zero(s)) return MPoly(a.vars_);
        for (auto& t : r.ts_) t.c *= s;
        return r;
    }
    friend MPoly operator*(const Rat& s, const MPoly& a) { return a * s; }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly pow(std::uint32_t e) const {
        MPoly result = constant(vars_, Rat(1));
        MPoly base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = (e >>= 1) ? base * base : base;
        }
        return result;
    }

    MPoly derivative(int v) const {
        MPoly r(vars_);
        auto vi = static_cast<std::size_t>(v);
        for (auto& t : ts_) {
            if (t.m[vi] == 0) continue;
            Term nt;
            nt.m = t.m;
            nt.c = t.c * Rat(static_cast<long>(t.m[vi]));
            nt.m[vi] -= 1;
            r.ts_.push_back(std::move(nt));
        }
        // differentiation preserves descending grlex within equal-degree blocks,
        // but degrees drop by one uniformly, so order is still valid
        std::sort(r.ts_.begin(), r.ts_.end(),
                  [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
        return r;
    }

    Rat eval_exact(const std::vector<Rat>& point) const {
        Rat total(0);
        auto pows = power_table<Rat>(point, [](const Rat& b, std::uint32_t e) { return rat_pow(b, e); });
        for (auto& t : ts_) {
            Rat prod = t.c;
            for (std::size_t i = 0; i < t.m.size(); ++i)
                if (t.m[i]) prod *= pows[i][t.m[i]];
            total += prod;
        }
        return total;
    }

    std::complex<double> eval_c(const std::vector<std::complex<double>>& point) const {
        std::complex<double> total = 0.0;
        auto pows = power_table<std::complex<double>>(
            point, [](const std::complex<double>& b, std::uint32_t e) {
                std::complex<double> r = 1.0, x = b;
                for (; e; e >>= 1, x *= x)
                    if (e & 1u) r *= x;
                return r;
            });
        for (auto& t : ts_) {
            std::complex<double> prod = t.c.get_d();
            for (std::size_t i = 0; i < t.m.size(); ++i)
                if (t.m[i]) prod *= pows[i][t.m[i]];
            total += prod;
        }
        return total;
    }

    CDD eval_dd(const std::vector<CDD>& point) const {
        CDD total;
        auto pows = power_table<CDD>(point, [](const CDD& b, std::uint32_t e) {
            CDD r(1.0), x = b;
            for (; e; e >>= 1, x *= x)
                if (e & 1u) r *= x;
            return r;
        });
        for (auto& t : ts_) {
            CDD prod(dd_from_rat(t.c), DD(0.0));
            for (std::size_t i = 0; i < t.m.size(); ++i)
                if (t.m[i]) prod *= pows[i][t.m[i]];
            total += prod;
        }
        return total;
    }

    // Rational content (gcd of numerators / lcm of denominators), signed so the
    // leading coefficient of the primitive part is positive.
    Rat content() const {
        if (ts_.empty()) return Rat(0);
        Int num_gcd(0), den_lcm(1);
        for (auto& t : ts_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        if (sgn(leading_coeff()) < 0) c = -c;
        return c;
    }

    // Integer-primitive, positive leading coefficient. Returns the stripped
    // content so callers can log it.
    std::pair<MPoly, Rat> primitive() const {
        if (ts_.empty()) return {*this, Rat(0)};
        Rat c = content();
        MPoly p = *this;
        for (auto& t : p.ts_) t.c /= c;
        return {p, c};
    }
    MPoly primitive_part() const { return primitive().first; }

    // Max |integer coefficient| after clearing denominators; heuristic-gcd input.
    Int height() const {
        Int den_lcm(1);
        for (auto& t : ts_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        Int h(0);
        for (auto& t : ts_) {
            Int v = abs(t.c.get_num() * (den_lcm / t.c.get_den()));
            if (v > h) h = v;
        }
        return h;
    }

    // Coefficients of *this viewed as a univariate polynomial in variable v;
    // index = power of v, entries are polynomials over the same table.
    std::vector<MPoly> univar_coeffs(int v) const {
        std::vector<MPoly> out(degree_in(v) + 1, MPoly(vars_));
        auto vi = static_cast<std::size_t>(v);
        for (auto& t : ts_) {
            Term nt{t.m, t.c};
            std::uint32_t e = nt.m[vi];
            nt.m[vi] = 0;
            out[e].ts_.push_back(std::move(nt));
        }
        for (auto& p : out)
            std::sort(p.ts_.begin(), p.ts_.end(),
                      [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
        return out;
    }

    static MPoly from_univar_coeffs(const VarTablePtr& vars, int v, const std::vector<MPoly>& cs) {
        std::vector<Term> ts;
        for (std::size_t e = 0; e < cs.size(); ++e)
            for (auto& t : cs[e].ts_) {
                Term nt{t.m, t.c};
                nt.m[static_cast<std::size_t>(v)] += static_cast<std::uint32_t>(e);
                ts.push_back(std::move(nt));
            }
        return from_terms(vars, std::move(ts));
    }

    // Substitute variable v by a rational constant, exactly.
    MPoly subst_const(int v, const Rat& value) const {
        std::vector<Term> ts;
        auto vi = static_cast<std::size_t>(v);
        for (auto& t : ts_) {
            Term nt{t.m, t.c};
            if (std::uint32_t e = nt.m[vi]; e > 0) {
                nt.c *= rat_pow(value, e);
                nt.m[vi] = 0;
            }
            ts.push_back(std::move(nt));
        }
        return from_terms(vars_, std::move(ts));
    }

    // Re-express over a larger table containing all our variables by name.
    MPoly embed(const VarTablePtr& bigger) const {
        if (vars_ == bigger) return *this;
        std::vector<int> remap(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) remap[i] = bigger->require(vars_->name(i));
        std::vector<Term> ts;
        ts.reserve(ts_.size());
        for (auto& t : ts_) {
            Term nt;
            nt.c = t.c;
            nt.m.assign(bigger->size(), 0);
            for (std::size_t i = 0; i < vars_->size(); ++i)
                nt.m[static_cast<std::size_t>(remap[i])] = t.m[i];
            ts.push_back(std::move(nt));
        }
        return from_terms(bigger, std::move(ts));
    }

    std::string str() const {
        if (ts_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& t : ts_) {
            Rat c = t.c;
            if (!first) {
                os << (sgn(c) < 0 ? "-" : "+");
                if (sgn(c) < 0) c = -c;
            } else {
                if (sgn(c) < 0) {
                    os << "-";
                    c = -c;
                }
                first = false;
            }
            bool have_mono = mono_degree(t.m) > 0;
            if (c != 1 || !have_mono) {
                os << rat_str(c);
                if (have_mono) os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                if (t.m[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << vars_->name(i);
                if (t.m[i] > 1) os << "^" << t.m[i];
            }
        }
        return os.str();
    }

  private:
    template <typename V, typename PowFn>
    std::vector<std::vector<V>> power_table(const std::vector<V>& point, PowFn&& powfn) const {
        std::vector<std::uint32_t> maxe(vars_->size(), 0);
        for (auto& t : ts_)
            for (std::size_t i = 0; i < t.m.size(); ++i) maxe[i] = std::max(maxe[i], t.m[i]);
        std::vector<std::vector<V>> pows(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            pows[i].resize(maxe[i] + 1);
            for (std::uint32_t e = 0; e <= maxe[i]; ++e) pows[i][e] = powfn(point[i], e);
        }
        return pows;
    }

    static void check(const MPoly& a, const MPoly& b) {
        if (a.vars_ && b.vars_ && !compatible(a.vars_, b.vars_))
            throw VarMismatchError("operands use different variable tables");
    }

    static MPoly merged(const MPoly& a, const MPoly& b, bool subtract) {
        check(a, b);
        MPoly r(a.vars_ ? a.vars_ : b.vars_);
        r.ts_.reserve(a.ts_.size() + b.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < a.ts_.size() && j < b.ts_.size()) {
            int c = grlex_cmp(a.ts_[i].m, b.ts_[j].m);
            if (c > 0) {
                r.ts_.push_back(a.ts_[i++]);
            } else if (c < 0) {
                Term t = b.ts_[j++];
                if (subtract) t.c = -t.c;
                r.ts_.push_back(std::move(t));
            } else {
                Rat c2 = subtract ? Rat(a.ts_[i].c - b.ts_[j].c) : Rat(a.ts_[i].c + b.ts_[j].c);
                if (!rat_is_zero(c2)) r.ts_.push_back({a.ts_[i].m, std::move(c2)});
                ++i, ++j;
            }
        }
        for (; i < a.ts_.size(); ++i) r.ts_.push_back(a.ts_[i]);
        for (; j < b.ts_.size(); ++j) {
            Term t = b.ts_[j];
            if (subtract) t.c = -t.c;
            r.ts_.push_back(std::move(t));
        }
        return r;
    }

    VarTablePtr vars_;
    std::vector<Term> ts_;
};

}  // namespace perimap
