#pragma once

#include <complex>
#include <string>
#include <vector>

#include "perimap/gcd.hpp"
#include "perimap/mpoly.hpp"

namespace perimap {

// Reduced rational function num/den: gcd(num, den) = 1, den integer-primitive
// with positive leading coefficient under graded-lex, den != 0.
class RatFunc {
  public:
    RatFunc() = default;

    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /* implicit */ RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(p.vars(), Rat(1))) {
        normalize_sign_only();
    }

    static RatFunc zero(const VarTablePtr& vars) { return RatFunc(MPoly::zero(vars)); }
    static RatFunc constant(const VarTablePtr& vars, const Rat& c) {
        return RatFunc(MPoly::constant(vars, c));
    }
    static RatFunc var(const VarTablePtr& vars, const std::string& name) {
        return RatFunc(MPoly::var(vars, name));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-cancel first to keep intermediates small
        MPoly g1 = poly_gcd(a.num_, b.den_);
        MPoly g2 = poly_gcd(b.num_, a.den_);
        MPoly n1 = g1.is_zero() ? a.num_ : exact_div(a.num_, g1);
        MPoly d2 = g1.is_zero() ? b.den_ : exact_div(b.den_, g1);
        MPoly n2 = g2.is_zero() ? b.num_ : exact_div(b.num_, g2);
        MPoly d1 = g2.is_zero() ? a.den_ : exact_div(a.den_, g2);
        RatFunc r;
        r.num_ = n1 * n2;
        r.den_ = d1 * d2;
        r.normalize_sign_only();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DegenerateError("division by zero rational function");
        RatFunc binv;
        binv.num_ = b.den_;
        binv.den_ = b.num_;
        binv.normalize_sign_only();
        return a * binv;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long e) const {
        if (e < 0) return RatFunc::constant(vars(), Rat(1)) / pow(-e);
        RatFunc r = RatFunc::constant(vars(), Rat(1));
        RatFunc base = *this;
        auto k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1ul) r *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    // d/dv by the quotient rule.
    RatFunc derivative(int v) const {
        return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
    }

    Rat eval_exact(const std::vector<Rat>& point) const {
        Rat d = den_.eval_exact(point);
        if (rat_is_zero(d)) throw PoleError("exact evaluation hit a pole");
        return num_.eval_exact(point) / d;
    }

    // Complex evaluation; a pole is declared when |den| falls below
    // underflow_eps * (1 + |num|), a scale-aware cutoff.
    std::complex<double> eval_c(const std::vector<std::complex<double>>& point,
                                double underflow_eps = 1e-12) const {
        std::complex<double> n = num_.eval_c(point);
        std::complex<double> d = den_.eval_c(point);
        if (std::abs(d) < underflow_eps * (1.0 + std::abs(n)))
            throw PoleError("complex evaluation hit a pole");
        return n / d;
    }

    CDD eval_dd(const std::vector<CDD>& point, double underflow_eps = 1e-25) const {
        CDD n = num_.eval_dd(point);
        CDD d = den_.eval_dd(point);
        if (cdd_abs(d) < underflow_eps * (1.0 + cdd_abs(n)))
            throw PoleError("extended-precision evaluation hit a pole");
        return n / d;
    }

    // Substitute each variable by the given rational function (composition).
    RatFunc subst(const std::vector<RatFunc>& args) const {
        const VarTablePtr tv = args.empty() ? vars() : args[0].vars();
        RatFunc n = eval_poly_at(num_, args, tv);
        RatFunc d = eval_poly_at(den_, args, tv);
        return n / d;
    }

    RatFunc embed(const VarTablePtr& bigger) const {
        RatFunc r;
        r.num_ = num_.embed(bigger);
        r.den_ = den_.embed(bigger);
        return r;
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
        std::string n = num_.nterms() > 1 ? "(" + num_.str() + ")" : num_.str();
        std::string d = den_.nterms() > 1 ? "(" + den_.str() + ")" : den_.str();
        return n + "/" + d;
    }

  private:
    static RatFunc eval_poly_at(const MPoly& p, const std::vector<RatFunc>& args,
                                const VarTablePtr& tv) {
        RatFunc total = RatFunc::zero(tv);
        // per-variable power cache
        std::vector<std::vector<RatFunc>> pows(args.size());
        for (auto& t : p.terms()) {
            RatFunc prod = RatFunc::constant(tv, t.c);
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                std::uint32_t e = t.m[i];
                if (e == 0) continue;
                auto& cache = pows[i];
                if (cache.empty()) cache.push_back(RatFunc::constant(tv, Rat(1)));
                while (cache.size() <= e) cache.push_back(cache.back() * args[i]);
                prod *= cache[e];
            }
            total += prod;
        }
        return total;
    }

    void normalize() {
        if (den_.is_zero()) throw DegenerateError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly::constant(num_.vars(), Rat(1));
            return;
        }
        MPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        normalize_sign_only();
    }

    // Make den integer-primitive with positive leading coefficient.
    void normalize_sign_only() {
        if (den_.is_zero()) throw DegenerateError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = MPoly::constant(num_.vars(), Rat(1));
            return;
        }
        Rat c = den_.content();
        if (c != 1) {
            den_ = den_ * (Rat(1) / c);
            num_ = num_ * (Rat(1) / c);
        }
    }

    MPoly num_, den_;
};

}  // namespace perimap
