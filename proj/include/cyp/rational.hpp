#ifndef CYP_RATIONAL_HPP
#define CYP_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace cyp
{

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class so that gmpxx expression
// templates never leak into user code.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    // Parses "p" or "p/q"; throws std::invalid_argument on malformed input
    // or a zero denominator.
    static Rational parse(const std::string &s);

    Rational &operator+=(const Rational &o)
    {
        q_ += o.q_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        q_ *= o.q_;
        return *this;
    }
    // Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Numerator as int64; throws std::overflow_error if it does not fit or the
    // value is not an integer.
    std::int64_t to_int64() const;

    // "p" for integers, "p/q" otherwise.
    std::string str() const { return q_.get_str(); }

    const mpq_class &raw() const { return q_; }

private:
    mpq_class q_;
};

Rational pow(const Rational &base, unsigned exp);

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0,
// as the polynomial n(n-1)...(n-k+1)/k!.
Rational binomial(long n, long k);

inline std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace cyp

#endif
