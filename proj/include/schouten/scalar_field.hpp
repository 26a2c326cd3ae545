#pragma once

#include "schouten/chart.hpp"
#include "schouten/errors.hpp"
#include "schouten/rational_function.hpp"

#include <cmath>
#include <functional>
#include <utility>
#include <variant>

namespace schouten {

/// Finite-difference step for coordinate i at x: h = max(1e-6, 1e-6*|x_i|).
inline double fd_step(double xi) { return std::max(1e-6, 1e-6 * std::fabs(xi)); }

/// A coefficient function on a chart: either an exact rational function or a
/// numeric black-box evaluator.  Values are immutable; all operations are pure.
class ScalarField {
  public:
    using Evaluator = std::function<double(const std::vector<double>&)>;

    struct Numeric {
        Evaluator eval;
        double smooth_radius = 1.0;  // declared radius of smooth extension
    };

    ScalarField(ChartPtr chart, RatFn fn) : chart_(std::move(chart)), body_(std::move(fn)) {
        if (exact().nvars() != chart_->dim()) throw Error("rational function arity mismatch");
    }
    ScalarField(ChartPtr chart, Numeric n) : chart_(std::move(chart)), body_(std::move(n)) {}

    static ScalarField zero(const ChartPtr& chart) {
        return ScalarField(chart, RatFn(chart->dim()));
    }
    static ScalarField constant(const ChartPtr& chart, const Q& c) {
        return ScalarField(chart, RatFn::constant(chart->dim(), c));
    }
    static ScalarField coordinate(const ChartPtr& chart, int i) {
        if (i < 0 || i >= chart->dim()) throw IndexOutOfRange();
        return ScalarField(chart, RatFn::variable(chart->dim(), i));
    }
    static ScalarField numeric(const ChartPtr& chart, Evaluator f, double smooth_radius = 1.0) {
        return ScalarField(chart, Numeric{std::move(f), smooth_radius});
    }

    const ChartPtr& chart() const { return chart_; }
    bool is_exact() const { return std::holds_alternative<RatFn>(body_); }
    const RatFn& exact() const { return std::get<RatFn>(body_); }

    bool is_zero_exact() const { return is_exact() && exact().is_zero(); }
    bool is_polynomial() const { return is_exact() && exact().is_polynomial(); }

    /// Wrap as a numeric black box (used to exercise the numeric code paths).
    ScalarField as_numeric() const {
        if (!is_exact()) return *this;
        RatFn fn = exact();
        return numeric(chart_, [fn](const std::vector<double>& x) {
            return evaluate_exact(fn, x);
        });
    }

    double eval(const Point& x) const {
        require_same_chart(chart_, x.chart);
        return eval_raw(x.coords);
    }

    double eval_raw(const std::vector<double>& x) const {
        if (is_exact()) return evaluate_exact(exact(), x);
        return std::get<Numeric>(body_).eval(x);
    }

    Q eval_exact(const std::vector<Q>& x) const { return exact().eval(x); }

    ScalarField partial(int i) const {
        if (i < 0 || i >= chart_->dim()) throw IndexOutOfRange();
        if (is_exact()) return ScalarField(chart_, exact().partial(i));
        const Numeric& n = std::get<Numeric>(body_);
        Evaluator f = n.eval;
        auto deriv = [f, i](const std::vector<double>& x) {
            const double h = fd_step(x[static_cast<std::size_t>(i)]);
            std::vector<double> xp(x), xm(x);
            xp[static_cast<std::size_t>(i)] += h;
            xm[static_cast<std::size_t>(i)] -= h;
            return (f(xp) - f(xm)) / (2.0 * h);
        };
        return numeric(chart_, std::move(deriv), n.smooth_radius);
    }

    friend ScalarField operator+(const ScalarField& a, const ScalarField& b) {
        return combine(a, b, [](const RatFn& x, const RatFn& y) { return x + y; },
                       [](double x, double y) { return x + y; });
    }
    friend ScalarField operator-(const ScalarField& a, const ScalarField& b) {
        return combine(a, b, [](const RatFn& x, const RatFn& y) { return x - y; },
                       [](double x, double y) { return x - y; });
    }
    friend ScalarField operator*(const ScalarField& a, const ScalarField& b) {
        if (a.is_zero_exact()) return a;
        if (b.is_zero_exact()) return b;
        return combine(a, b, [](const RatFn& x, const RatFn& y) { return x * y; },
                       [](double x, double y) { return x * y; });
    }
    friend ScalarField operator/(const ScalarField& a, const ScalarField& b) {
        if (b.is_zero_exact()) throw DivisionByZeroField();
        return combine(a, b, [](const RatFn& x, const RatFn& y) { return x / y; },
                       [](double x, double y) { return x / y; });
    }

    ScalarField operator-() const { return Q(-1) * *this; }

    friend ScalarField operator*(const Q& c, const ScalarField& f) {
        if (f.is_exact()) return ScalarField(f.chart_, c * f.exact());
        const Numeric& n = std::get<Numeric>(f.body_);
        Evaluator g = n.eval;
        const double cd = to_double(c);
        return numeric(f.chart_, [g, cd](const std::vector<double>& x) { return cd * g(x); },
                       n.smooth_radius);
    }

    /// Exact equality as rational functions (cross-multiplied); exact bodies only.
    friend bool operator==(const ScalarField& a, const ScalarField& b) {
        return a.is_exact() && b.is_exact() && a.chart_->same_as(*b.chart_) &&
               a.exact() == b.exact();
    }

    std::string to_string() const {
        if (is_exact()) return exact().to_string(chart_->names());
        return "<numeric field>";
    }

  private:
    static double evaluate_exact(const RatFn& fn, const std::vector<double>& x) {
        std::vector<Q> qx;
        qx.reserve(x.size());
        for (double v : x) qx.push_back(q_from_double(v));
        Q d = fn.den().eval(qx);
        if (std::fabs(to_double(d)) <= 1e-12) throw PoleAtPoint();
        return to_double(fn.num().eval(qx) / d);
    }

    template <class ExactOp, class NumOp>
    static ScalarField combine(const ScalarField& a, const ScalarField& b, ExactOp eop,
                               NumOp nop) {
        require_same_chart(a.chart_, b.chart_);
        if (a.is_exact() && b.is_exact()) return ScalarField(a.chart_, eop(a.exact(), b.exact()));
        ScalarField an = a.as_numeric(), bn = b.as_numeric();
        Evaluator fa = std::get<Numeric>(an.body_).eval;
        Evaluator fb = std::get<Numeric>(bn.body_).eval;
        double rad = std::min(smooth_radius_of(an), smooth_radius_of(bn));
        return numeric(a.chart_,
                       [fa, fb, nop](const std::vector<double>& x) { return nop(fa(x), fb(x)); },
                       rad);
    }

    static double smooth_radius_of(const ScalarField& f) {
        return f.is_exact() ? 1.0 : std::get<Numeric>(f.body_).smooth_radius;
    }

    ChartPtr chart_;
    std::variant<RatFn, Numeric> body_;
};

}  // namespace schouten
