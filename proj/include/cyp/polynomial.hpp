#ifndef CYP_POLYNOMIAL_HPP
#define CYP_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include <cyp/rational.hpp>

namespace cyp
{

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i. Trailing
// zeros are trimmed so the zero polynomial has no coefficients.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Rational &c, int power)
    {
        std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }

    // t - root
    static Polynomial linear_factor(const Rational &root) { return Polynomial({-root, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational> &coeffs() const { return c_; }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.c_.empty() || b.c_.empty()) {
            return {};
        }
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial derivative() const
    {
        std::vector<Rational> out;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            out.push_back(c_[i] * Rational(static_cast<long>(i)));
        }
        return Polynomial(std::move(out));
    }

    Rational operator()(const Rational &t) const
    {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }

    std::string str() const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rational c = c_[i];
            if (c.is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) {
                    c = -c;
                }
            }
            const std::string var = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
            if (var.empty()) {
                out += c.str();
            } else if (c == Rational(1)) {
                out += var;
            } else if (c == Rational(-1)) {
                out += "-" + var;
            } else {
                out += c.str() + "*" + var;
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

} // namespace cyp

#endif
