#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pluecker/scalar.hpp"

namespace plk {

/// Sparse multivariate polynomial over an exact field, with integer-indexed
/// variables. Monomials are sorted (variable, exponent) lists.
class Polynomial {
public:
    using Monomial = std::vector<std::pair<int, int>>; // sorted by variable, exponents > 0

    explicit Polynomial(const Field& field = Field()) : field_(field) {}

    static Polynomial constant(const Scalar& c, const Field& field) {
        Polynomial p(field);
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static Polynomial variable(int v, const Field& field) {
        Polynomial p(field);
        p.terms_[{{v, 1}}] = field.one();
        return p;
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (auto [v, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(merge(ma, mb), ca * cb);
        return r;
    }

    Polynomial scaled(const Scalar& c) const {
        Polynomial r(field_);
        if (c.is_zero()) return r;
        for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
        return r;
    }
    Polynomial operator-() const { return scaled(-field_.one()); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    Scalar evaluate(const std::function<Scalar(int)>& value_of) const {
        Scalar acc = field_.zero();
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (auto [v, e] : m) {
                Scalar x = value_of(v);
                for (int i = 0; i < e; ++i) t *= x;
            }
            acc += t;
        }
        return acc;
    }

    std::string str(const std::function<std::string(int)>& name =
                        [](int v) { return "v" + std::to_string(v); }) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            if (!first) out += cs[0] == '-' ? " - " : " + ";
            if (!first && cs[0] == '-') cs = cs.substr(1);
            first = false;
            bool unit = (cs == "1" || cs == "-1") && !m.empty();
            if (!unit) out += cs;
            else if (cs == "-1") out += "-";
            bool star = !unit;
            for (auto [v, e] : m) {
                if (star) out += "*";
                star = true;
                out += name(v);
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                r.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                r.push_back(b[j++]);
            } else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    Field field_;
    std::map<Monomial, Scalar> terms_;
};

} // namespace plk
