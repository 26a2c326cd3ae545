#pragma once

#include "schouten/chart.hpp"
#include "schouten/errors.hpp"
#include "schouten/scalar_field.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace schouten {

/// Strictly increasing coordinate index tuple; the empty tuple indexes the
/// single component of a degree-0 multivector.
using IndexTuple = std::vector<int>;

/// Sorts a tuple, returning the permutation sign; 0 when an index repeats.
inline int sort_tuple(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && t[j - 1] == t[j]) return 0;
    }
    return sign;
}

/// Merges two increasing tuples; sign of the interleaving permutation, or 0
/// when they intersect.
inline int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] hops over the remaining a-entries
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

inline std::vector<IndexTuple> increasing_tuples(int dim, int degree) {
    std::vector<IndexTuple> all;
    IndexTuple cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == degree) {
            all.push_back(cur);
            return;
        }
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return all;
}

/// Degree-graded contravariant antisymmetric tensor field with sparse
/// components on strictly increasing index tuples.  The evaluation pairing is
/// the determinant convention:
///   (d_{i1} ^ ... ^ d_{ip})(dx^{j1}, ..., dx^{jp}) = det(delta^{j_a}_{i_b}).
class Multivector {
  public:
    Multivector(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
        if (degree_ < 0 || degree_ > chart_->dim())
            throw WrongDegree("degree outside 0..dim");
    }

    static Multivector zero(const ChartPtr& chart, int degree) {
        return Multivector(chart, degree);
    }

    static Multivector scalar(const ScalarField& f) {
        Multivector m(f.chart(), 0);
        m.set_component({}, f);
        return m;
    }

    static Multivector basis_vector(const ChartPtr& chart, int i) {
        Multivector m(chart, 1);
        m.set_component({i}, ScalarField::constant(chart, Q(1)));
        return m;
    }

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, ScalarField>& components() const { return comps_; }

    bool all_exact() const {
        for (const auto& [t, f] : comps_)
            if (!f.is_exact()) return false;
        return true;
    }

    bool is_zero_exact() const {
        for (const auto& [t, f] : comps_)
            if (!f.is_zero_exact()) return false;
        return true;
    }

    /// Component at an arbitrary tuple, resolving the permutation sign.
    ScalarField component(IndexTuple t) const {
        const int sign = sort_tuple(t);
        if (sign == 0) return ScalarField::zero(chart_);
        auto it = comps_.find(t);
        if (it == comps_.end()) return ScalarField::zero(chart_);
        return sign == 1 ? it->second : -it->second;
    }

    void set_component(IndexTuple t, const ScalarField& f) {
        require_same_chart(chart_, f.chart());
        if (static_cast<int>(t.size()) != degree_) throw WrongDegree("tuple length != degree");
        const int sign = sort_tuple(t);
        if (sign == 0) return;
        validate_tuple(t);
        ScalarField v = sign == 1 ? f : -f;
        if (v.is_zero_exact())
            comps_.erase(t);
        else
            comps_.insert_or_assign(std::move(t), std::move(v));
    }

    void add_component(IndexTuple t, const ScalarField& f) {
        if (f.is_zero_exact()) return;
        const int sign = sort_tuple(t);
        if (sign == 0) return;
        validate_tuple(t);
        ScalarField v = sign == 1 ? f : -f;
        auto it = comps_.find(t);
        if (it == comps_.end()) {
            comps_.emplace(std::move(t), std::move(v));
        } else {
            ScalarField sum = it->second + v;
            if (sum.is_zero_exact())
                comps_.erase(it);
            else
                it->second = std::move(sum);
        }
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        require_same_chart(a.chart_, b.chart_);
        if (a.degree_ != b.degree_) throw WrongDegree("sum of different degrees");
        Multivector r = a;
        for (const auto& [t, f] : b.comps_) r.add_component(t, f);
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        return a + Q(-1) * b;
    }
    friend Multivector operator*(const Q& c, const Multivector& m) {
        Multivector r(m.chart_, m.degree_);
        if (c == 0) return r;
        for (const auto& [t, f] : m.comps_) r.comps_.emplace(t, c * f);
        return r;
    }
    friend Multivector operator*(const ScalarField& f, const Multivector& m) {
        return wedge(scalar(f), m);
    }

    /// Componentwise coordinate derivative (not a tensor operation by itself;
    /// building block of the bracket).
    Multivector partial_components(int k) const {
        Multivector r(chart_, degree_);
        for (const auto& [t, f] : comps_) r.add_component(t, f.partial(k));
        return r;
    }

    /// Interior-style derivative that removes index k with the sign of its
    /// position; the degree drops by one.
    Multivector slot_derivative(int k) const {
        Multivector r(chart_, degree_ - 1);
        for (const auto& [t, f] : comps_) {
            for (std::size_t pos = 0; pos < t.size(); ++pos) {
                if (t[pos] != k) continue;
                IndexTuple s;
                s.reserve(t.size() - 1);
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != pos) s.push_back(t[i]);
                r.add_component(std::move(s), pos % 2 == 0 ? f : -f);
                break;
            }
        }
        return r;
    }

    friend Multivector wedge(const Multivector& a, const Multivector& b) {
        require_same_chart(a.chart_, b.chart_);
        const int dim = a.chart_->dim();
        const int deg = std::min(a.degree_ + b.degree_, dim);
        Multivector r(a.chart_, deg);
        if (a.degree_ + b.degree_ > dim) return r;  // clipped zero
        IndexTuple merged;
        for (const auto& [ta, fa] : a.comps_) {
            for (const auto& [tb, fb] : b.comps_) {
                const int sign = merge_tuples(ta, tb, merged);
                if (sign == 0) continue;
                ScalarField prod = fa * fb;
                r.add_component(merged, sign == 1 ? prod : -prod);
            }
        }
        return r;
    }

    /// Pointwise evaluation of every stored component.
    std::map<IndexTuple, double> eval_at(const Point& x) const {
        std::map<IndexTuple, double> out;
        for (const auto& [t, f] : comps_) out.emplace(t, f.eval(x));
        return out;
    }

    double max_abs_at(const Point& x) const {
        double m = 0.0;
        for (const auto& [t, f] : comps_) m = std::max(m, std::fabs(f.eval(x)));
        return m;
    }

  private:
    void validate_tuple(const IndexTuple& t) const {
        for (int i : t)
            if (i < 0 || i >= chart_->dim()) throw IndexOutOfRange();
    }

    ChartPtr chart_;
    int degree_;
    std::map<IndexTuple, ScalarField> comps_;
};

/// Graded bracket on multivector fields.  Conventions, verified exactly by the
/// axiom suite and frozen in the convention ledger:
///   [X, f] = X(f);    [X, Y] = Lie bracket;
///   [A, B] = -(-1)^((p-1)(q-1)) [B, A];
///   [A, B ^ C] = [A, B] ^ C + (-1)^((p-1) q) B ^ [A, C];
///   (-1)^((p-1)(r-1)) [[A,B],C] + cyclic = 0.
/// Computed through the odd-coordinate formula
///   [A, B] = sum_k ( (-1)^(p-1) sdk(A) ^ dk(B)  -  dk(A) ^ sdk(B) ),
/// with sdk the slot derivative and dk the componentwise coordinate derivative.
inline Multivector schouten(const Multivector& a, const Multivector& b) {
    require_same_chart(a.chart(), b.chart());
    const int p = a.degree(), q = b.degree();
    if (p == 0 && q == 0) throw DegreeUnderflow();
    const int dim = a.chart()->dim();
    const int deg = std::min(p + q - 1, dim);
    Multivector r = Multivector::zero(a.chart(), deg);
    const Q s1 = (p - 1) % 2 == 0 ? Q(1) : Q(-1);
    for (int k = 0; k < dim; ++k) {
        if (p >= 1) {
            Multivector t1 = wedge(a.slot_derivative(k), b.partial_components(k));
            r = r + s1 * t1;
        }
        if (q >= 1) {
            Multivector t2 = wedge(a.partial_components(k), b.slot_derivative(k));
            r = r + Q(-1) * t2;
        }
    }
    return r;
}

/// Lie derivative along a vector field; equals the bracket with X first.
inline Multivector lie_derivative(const Multivector& x, const Multivector& a) {
    if (x.degree() != 1) throw WrongDegree("Lie derivative needs a vector field");
    return schouten(x, a);
}

/// Substitutes the differentials of fs into the leading slots:
/// the single-step case is (i_df A)^{i2..ip} = sum_k (d_k f) A^{k i2..ip}.
inline Multivector contract_differentials(const Multivector& a,
                                          const std::vector<ScalarField>& fs) {
    if (static_cast<int>(fs.size()) > a.degree()) throw TooManyArguments();
    Multivector cur = a;
    for (const ScalarField& f : fs) {
        require_same_chart(cur.chart(), f.chart());
        Multivector next(cur.chart(), cur.degree() - 1);
        for (const auto& [t, g] : cur.components()) {
            for (std::size_t pos = 0; pos < t.size(); ++pos) {
                IndexTuple s;
                s.reserve(t.size() - 1);
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != pos) s.push_back(t[i]);
                ScalarField term = f.partial(t[pos]) * g;
                next.add_component(std::move(s), pos % 2 == 0 ? term : -term);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace schouten
