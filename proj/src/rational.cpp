#include "qspec/rational.hpp"

#include <ostream>

#include "qspec/errors.hpp"

namespace qspec {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0)
        throw domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty())
        throw parse_error("Rational: empty string");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // exact decimal: digits after the dot become a power-of-ten denominator
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac = s.size() - dot - 1;
        mpq_class q;
        if (q.set_str(digits, 10) != 0)
            throw parse_error("Rational: cannot parse '" + s + "'");
        mpz_class den = 1;
        for (size_t i = 0; i < frac; ++i) den *= 10;
        q /= mpq_class(den);
        q.canonicalize();
        return Rational(q);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw parse_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::factorial(long n) {
    if (n < 0)
        throw domain_error("Rational::factorial of negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace qspec
