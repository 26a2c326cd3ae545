#pragma once

#include "schouten/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace schouten {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Monomials are exponent vectors ordered lexicographically by the map;
/// zero coefficients are never stored.
class Poly {
  public:
    using Monomial = std::vector<unsigned>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, const Q& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Monomial(static_cast<std::size_t>(nvars), 0u)] = c;
        return p;
    }

    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        Monomial m(static_cast<std::size_t>(nvars), 0u);
        m[static_cast<std::size_t>(i)] = 1;
        p.terms_[m] = Q(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (unsigned e : terms_.begin()->first)
            if (e) return false;
        return true;
    }

    Q constant_value() const { return terms_.empty() ? Q(0) : terms_.begin()->second; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (unsigned e : m) s += static_cast<int>(e);
            if (s > d) d = s;
        }
        return d;
    }

    const std::map<Monomial, Q>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Q& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Poly operator*(const Q& c, const Poly& p) {
        Poly r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(nvars_, Q(1));
        Poly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            if (e >>= 1u) b = b * b;
        }
        return r;
    }

    Poly partial(int i) const {
        Poly r(nvars_);
        const auto ui = static_cast<std::size_t>(i);
        for (const auto& [m, c] : terms_) {
            if (m[ui] == 0) continue;
            Monomial d(m);
            --d[ui];
            r.add_term(d, c * Q(m[ui]));
        }
        return r;
    }

    Q eval(const std::vector<Q>& x) const {
        Q acc(0);
        for (const auto& [m, c] : terms_) {
            Q t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t *= q_pow(x[i], m[i]);
            acc += t;
        }
        return acc;
    }

    double eval_d(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = to_double(c);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Substitute args[i] (a polynomial over any variable set) for variable i.
    Poly compose(const std::vector<Poly>& args) const {
        const int out_vars = args.empty() ? 0 : args.front().nvars();
        Poly r(out_vars);
        for (const auto& [m, c] : terms_) {
            Poly t = constant(out_vars, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t = t * args[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    /// Largest common monomial factor of all terms (1 when empty).
    Monomial monomial_gcd() const {
        Monomial g(static_cast<std::size_t>(nvars_), 0u);
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first) {
                g = m;
                first = false;
            } else {
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (m[i] < g[i]) g[i] = m[i];
            }
        }
        return g;
    }

    Poly divide_monomial(const Monomial& g) const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial d(m);
            for (std::size_t i = 0; i < d.size(); ++i) d[i] -= g[i];
            r.terms_[d] = c;
        }
        return r;
    }

    /// Attempt exact division; returns true and sets quotient when *this = q * d.
    bool divide_exact(const Poly& d, Poly& quotient) const {
        if (d.is_zero()) return false;
        Poly rem = *this;
        Poly q(nvars_);
        const auto& lead_d = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& lead_r = *rem.terms_.rbegin();
            Monomial m(lead_r.first);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] < lead_d.first[i]) return false;
                m[i] -= lead_d.first[i];
            }
            Q c = lead_r.second / lead_d.second;
            Poly t(nvars_);
            t.terms_[m] = c;
            q += t;
            rem -= t * d;
        }
        quotient = q;
        return true;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Q& c = it->second;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            Q a = c < 0 ? Q(-c) : c;
            bool printed_coeff = false;
            bool any_var = false;
            for (unsigned e : it->first)
                if (e) any_var = true;
            if (a != 1 || !any_var) {
                os << a.str();
                printed_coeff = true;
            }
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (!it->first[i]) continue;
                if (printed_coeff || any_var) {
                    if (printed_coeff) os << "*";
                    printed_coeff = true;
                }
                os << names[i];
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

  private:
    int nvars_;
    std::map<Monomial, Q> terms_;
};

}  // namespace schouten
