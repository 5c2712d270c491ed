#pragma once

#include "newtloc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace newtloc {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree order. Normal form: no trailing zero coefficients (the zero
/// polynomial has an empty coefficient vector). The variable name is carried
/// along for printing only.
class PolyRational {
public:
    PolyRational() = default;
    explicit PolyRational(std::string var) : var_(std::move(var)) {}
    PolyRational(std::vector<Rational> coeffs, std::string var = "delta")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static PolyRational constant(const Rational& value, std::string var = "delta") {
        return PolyRational({value}, std::move(var));
    }
    /// The monomial x^k with the given coefficient.
    static PolyRational monomial(const Rational& coeff, unsigned k, std::string var = "delta") {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = coeff;
        return PolyRational(std::move(c), std::move(var));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    const std::string& variable() const { return var_; }

    /// Coefficient of x^k (zero if beyond the stored degree).
    Rational coeff(unsigned k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }

    PolyRational& operator+=(const PolyRational& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    PolyRational& operator-=(const PolyRational& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend PolyRational operator+(PolyRational a, const PolyRational& b) { return a += b; }
    friend PolyRational operator-(PolyRational a, const PolyRational& b) { return a -= b; }

    friend PolyRational operator*(const PolyRational& a, const PolyRational& b) {
        if (a.is_zero() || b.is_zero()) return PolyRational(a.var_);
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return PolyRational(std::move(c), a.var_);
    }
    PolyRational& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend PolyRational operator*(PolyRational a, const Rational& s) { return a *= s; }
    friend PolyRational operator*(const Rational& s, PolyRational a) { return a *= s; }

    bool operator==(const PolyRational& o) const { return c_ == o.c_; }
    bool operator!=(const PolyRational& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }
    double eval(double x) const {
        double v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
        return v;
    }

    /// "1/2 - 3/8*delta + delta^2" style rendering.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rational a = c_[k];
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            bool unit = (a == 1) && k > 0;
            if (!unit) out += a.str();
            if (k > 0) {
                if (!unit) out += "*";
                out += var_;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
    std::string var_ = "delta";
};

}  // namespace newtloc
