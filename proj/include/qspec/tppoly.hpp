#ifndef QSPEC_TPPOLY_HPP
#define QSPEC_TPPOLY_HPP

#include <complex>
#include <vector>

#include "qspec/rational.hpp"

namespace qspec {

/// Univariate polynomial in t_p truncated at order T: powers above T are
/// discarded by every operation. Coefficients are exact rationals.
class TpPoly {
  public:
    explicit TpPoly(int truncation_order);
    static TpPoly constant(int truncation_order, const Rational& value);
    static TpPoly monomial(int truncation_order, int power, const Rational& coeff);

    int truncation_order() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest stored power, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int power) const;
    void add_coeff(int power, const Rational& value);

    TpPoly operator-() const;
    TpPoly& operator+=(const TpPoly& o);
    TpPoly& operator-=(const TpPoly& o);
    friend TpPoly operator+(TpPoly a, const TpPoly& b) { return a += b; }
    friend TpPoly operator-(TpPoly a, const TpPoly& b) { return a -= b; }
    friend TpPoly operator*(const TpPoly& a, const TpPoly& b);
    TpPoly& operator*=(const Rational& s);
    friend TpPoly operator*(TpPoly a, const Rational& s) { return a *= s; }

    friend bool operator==(const TpPoly& a, const TpPoly& b) {
        return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }

    /// Exact substitution of a rational t_p value (degree-0 result keeps T).
    Rational eval_rational(const Rational& tp) const;
    std::complex<double> eval(std::complex<double> tp) const;

    std::string str(const std::string& var = "tp") const;

  private:
    void normalize();
    int trunc_;
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies tp^k; trailing zeros pruned
};

} // namespace qspec

#endif
