#include "qspec/tppoly.hpp"

#include <sstream>

#include "qspec/errors.hpp"

namespace qspec {

TpPoly::TpPoly(int truncation_order) : trunc_(truncation_order) {
    if (truncation_order < 0)
        throw config_error("TpPoly: negative truncation order");
}

TpPoly TpPoly::constant(int truncation_order, const Rational& value) {
    TpPoly p(truncation_order);
    p.add_coeff(0, value);
    return p;
}

TpPoly TpPoly::monomial(int truncation_order, int power, const Rational& coeff) {
    TpPoly p(truncation_order);
    p.add_coeff(power, coeff);
    return p;
}

Rational TpPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[power];
}

void TpPoly::add_coeff(int power, const Rational& value) {
    if (power < 0)
        throw domain_error("TpPoly: negative t_p power");
    if (power > trunc_ || value.is_zero())
        return; // truncation rule
    if (power >= static_cast<int>(coeffs_.size()))
        coeffs_.resize(power + 1, Rational(0));
    coeffs_[power] += value;
    normalize();
}

void TpPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

TpPoly TpPoly::operator-() const {
    TpPoly r(trunc_);
    r.coeffs_ = coeffs_;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TpPoly& TpPoly::operator+=(const TpPoly& o) {
    if (trunc_ != o.trunc_)
        throw config_error("TpPoly: mismatched truncation orders");
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

TpPoly& TpPoly::operator-=(const TpPoly& o) { return *this += -o; }

TpPoly operator*(const TpPoly& a, const TpPoly& b) {
    if (a.trunc_ != b.trunc_)
        throw config_error("TpPoly: mismatched truncation orders");
    TpPoly r(a.trunc_);
    if (a.is_zero() || b.is_zero())
        return r;
    int maxdeg = std::min(a.degree() + b.degree(), a.trunc_);
    r.coeffs_.assign(maxdeg + 1, Rational(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (int j = 0; j <= b.degree() && i + j <= maxdeg; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

TpPoly& TpPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Rational TpPoly::eval_rational(const Rational& tp) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * tp + coeffs_[i];
    return acc;
}

std::complex<double> TpPoly::eval(std::complex<double> tp) const {
    std::complex<double> acc(0.0, 0.0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * tp + coeffs_[i].to_complex();
    return acc;
}

std::string TpPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeffs_[k].str();
        if (k >= 1)
            os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

} // namespace qspec
