#pragma once

#include "schouten/errors.hpp"
#include "schouten/polynomial.hpp"

namespace schouten {

/// Quotient of two polynomials, stored unreduced.  Equality goes through
/// cross-multiplication, so no canonical form is required; reduce() applies
/// the cheap cancellations that cover the shapes arising in practice
/// (content, common monomials, one factor dividing the other).
class RatFn {
  public:
    explicit RatFn(int nvars = 0)
        : num_(nvars), den_(Poly::constant(nvars, Q(1))) {}

    RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroField("zero denominator polynomial");
        reduce();
    }

    static RatFn constant(int nvars, const Q& c) {
        return RatFn(Poly::constant(nvars, c), Poly::constant(nvars, Q(1)));
    }
    static RatFn variable(int nvars, int i) {
        return RatFn(Poly::variable(nvars, i), Poly::constant(nvars, Q(1)));
    }
    static RatFn from_poly(Poly p) {
        const int n = p.nvars();
        return RatFn(std::move(p), Poly::constant(n, Q(1)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// The underlying polynomial; valid only when is_polynomial().
    Poly as_poly() const {
        Q c = den_.constant_value();
        return (Q(1) / c) * num_;
    }

    RatFn operator-() const { return RatFn(-num_, den_, no_reduce{}); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.num_.is_zero()) return b;
        if (b.num_.is_zero()) return a;
        if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFn(a.nvars());
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFn operator*(const Q& c, const RatFn& f) {
        if (c == 0) return RatFn(f.nvars());
        return RatFn(c * f.num_, f.den_, no_reduce{});
    }

    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.num_.is_zero()) throw DivisionByZeroField();
        if (a.num_.is_zero()) return RatFn(a.nvars());
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RatFn partial(int i) const {
        if (den_.is_constant())
            return RatFn(num_.partial(i), den_, no_reduce{});
        return RatFn(num_.partial(i) * den_ - num_ * den_.partial(i), den_ * den_);
    }

    Q eval(const std::vector<Q>& x) const {
        Q d = den_.eval(x);
        if (d == 0) throw PoleAtPoint();
        return num_.eval(x) / d;
    }

    /// Compose with polynomial substitutions per variable.
    RatFn compose(const std::vector<Poly>& args) const {
        return RatFn(num_.compose(args), den_.compose(args));
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::constant(den_.nvars(), Q(1));
            return;
        }
        // Common monomial factor.
        auto gn = num_.monomial_gcd();
        auto gd = den_.monomial_gcd();
        Poly::Monomial g(gn.size());
        bool nontrivial = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = std::min(gn[i], gd[i]);
            if (g[i]) nontrivial = true;
        }
        if (nontrivial) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
        if (den_.is_constant()) {
            num_ = (Q(1) / den_.constant_value()) * num_;
            den_ = Poly::constant(den_.nvars(), Q(1));
            return;
        }
        Poly q(num_.nvars());
        if (num_.divide_exact(den_, q)) {
            num_ = q;
            den_ = Poly::constant(den_.nvars(), Q(1));
            return;
        }
        if (den_.divide_exact(num_, q)) {
            // num/den = 1/q
            den_ = q;
            num_ = Poly::constant(num_.nvars(), Q(1));
        }
        // Normalize the leading denominator coefficient to 1.
        const Q lead = den_.terms().rbegin()->second;
        if (lead != 1) {
            Q inv = Q(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_polynomial()) return as_poly().to_string(names);
        return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
    }

  private:
    struct no_reduce {};
    RatFn(Poly num, Poly den, no_reduce) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_, den_;
};

}  // namespace schouten
