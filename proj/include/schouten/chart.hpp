#pragma once

#include "schouten/errors.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace schouten {

/// A single global coordinate chart.  All fields and tensors carry one; two
/// values may be combined only when their charts agree (same ordered names).
/// The optional predicate restricts the usable open domain.
class Chart {
  public:
    using Predicate = std::function<bool(const std::vector<double>&)>;

    explicit Chart(std::vector<std::string> names, Predicate domain = nullptr)
        : names_(std::move(names)), domain_(std::move(domain)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate coordinate name '" + names_[i] + "'");
        if (names_.empty()) throw Error("chart needs at least one coordinate");
    }

    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool in_domain(const std::vector<double>& x) const { return !domain_ || domain_(x); }
    bool has_domain_predicate() const { return static_cast<bool>(domain_); }

    bool same_as(const Chart& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    Predicate domain_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::vector<std::string> names, Chart::Predicate domain = nullptr) {
    return std::make_shared<const Chart>(std::move(names), std::move(domain));
}

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw ChartMismatch();
}

/// A point of a chart; coordinates are stored as doubles.
struct Point {
    ChartPtr chart;
    std::vector<double> coords;

    Point(ChartPtr c, std::vector<double> x) : chart(std::move(c)), coords(std::move(x)) {
        if (static_cast<int>(coords.size()) != chart->dim())
            throw Error("point dimension does not match chart");
    }
};

}  // namespace schouten
