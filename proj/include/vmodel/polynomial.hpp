#pragma once

#include "vmodel/scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vmodel {

// Sparse multivariate polynomial with exact coefficients over an ordered
// variable type. A monomial is a list of (variable, exponent) pairs sorted by
// variable with positive exponents; zero coefficients are never stored.
template <class Var>
class SparsePolynomial {
public:
    using Monomial = std::vector<std::pair<Var, int>>;

    // Graded lexicographic: total degree first, then the first variable (in
    // increasing variable order) whose exponents differ decides.
    struct GradedLex {
        bool operator()(const Monomial& a, const Monomial& b) const
        {
            int da = degree(a);
            int db = degree(b);
            if (da != db)
                return da < db;
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() && ib != b.end()) {
                if (ia->first == ib->first) {
                    if (ia->second != ib->second)
                        return ia->second < ib->second;
                    ++ia;
                    ++ib;
                } else if (ia->first < ib->first) {
                    return false; // a has the smaller variable, b lacks it
                } else {
                    return true;
                }
            }
            return ia == a.end() && ib != b.end();
        }
    };

    using Terms = std::map<Monomial, Scalar, GradedLex>;

    SparsePolynomial() = default;

    static SparsePolynomial constant(const Scalar& c)
    {
        SparsePolynomial p;
        p.add_term({}, c);
        return p;
    }

    static SparsePolynomial variable(const Var& v, int exponent = 1)
    {
        SparsePolynomial p;
        p.add_term({{v, exponent}}, Scalar(1));
        return p;
    }

    static int degree(const Monomial& m)
    {
        int d = 0;
        for (const auto& [v, e] : m)
            d += e;
        return d;
    }

    static Monomial multiply(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        r.reserve(a.size() + b.size());
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                r.push_back(*ia++);
            } else if (ia == a.end() || ib->first < ia->first) {
                r.push_back(*ib++);
            } else {
                r.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    // Sorts and merges an unsorted variable list into a monomial.
    static Monomial make_monomial(std::vector<std::pair<Var, int>> factors)
    {
        std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Monomial r;
        for (auto& [v, e] : factors) {
            if (e == 0)
                continue;
            if (!r.empty() && r.back().first == v)
                r.back().second += e;
            else
                r.emplace_back(std::move(v), e);
        }
        return r;
    }

    void add_term(const Monomial& m, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, degree(m));
        return d;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
    {
        SparsePolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(multiply(ma, mb), ca * cb);
        return r;
    }

    friend SparsePolynomial operator*(const Scalar& s, const SparsePolynomial& p)
    {
        SparsePolynomial r;
        for (const auto& [m, c] : p.terms_)
            r.add_term(m, s * c);
        return r;
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

    // Terms from the largest monomial down, "c*v1^e1*v2 + ...", "0" if empty.
    std::string to_string(const std::function<std::string(const Var&)>& name) const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty())
                out += " + ";
            out += it->second.to_string();
            for (const auto& [v, e] : it->first) {
                out += "*" + name(v);
                if (e != 1)
                    out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    Terms terms_;
};

} // namespace vmodel
