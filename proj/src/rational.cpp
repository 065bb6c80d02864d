#include <cyp/rational.hpp>

#include <stdexcept>

namespace cyp
{

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string &s)
{
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return Rational(q);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        throw std::overflow_error("rational " + str() + " is not a machine integer");
    }
    return q_.get_num().get_si();
}

Rational pow(const Rational &base, unsigned exp)
{
    Rational out(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) {
            out *= b;
        }
        exp >>= 1u;
        if (exp != 0) {
            b *= b;
        }
    }
    return out;
}

Rational binomial(long n, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    Rational out(1);
    for (long i = 0; i < k; ++i) {
        out *= Rational(n - i);
        out /= Rational(i + 1);
    }
    return out;
}

} // namespace cyp
