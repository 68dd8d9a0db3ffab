#ifndef QSPEC_LAURENT_HPP
#define QSPEC_LAURENT_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qspec/tppoly.hpp"

namespace qspec {

/// Exponent vector of a q-monomial; one signed entry per q-variable.
using ExpVec = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

int total_degree(const ExpVec& e);

/// Multivariate Laurent polynomial in the q-variables with TpPoly
/// coefficients. Terms with identically-zero coefficients are pruned.
/// Immutable in spirit: all operations return new values.
class LaurentPoly {
  public:
    LaurentPoly(std::vector<std::string> vars, int tp_truncation);
    static LaurentPoly zero(const std::vector<std::string>& vars, int tp_truncation) {
        return LaurentPoly(vars, tp_truncation);
    }
    static LaurentPoly monomial(const std::vector<std::string>& vars, int tp_truncation,
                                const ExpVec& exps, const TpPoly& coeff);
    static LaurentPoly constant(const std::vector<std::string>& vars, int tp_truncation,
                                const Rational& value);

    const std::vector<std::string>& vars() const { return vars_; }
    int tp_truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, TpPoly, GradedLex>& terms() const { return terms_; }

    TpPoly coeff(const ExpVec& exps) const;
    void add_term(const ExpVec& exps, const TpPoly& coeff);
    void add_term(const ExpVec& exps, int tp_power, const Rational& value);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        return mul(a, b, std::nullopt);
    }
    LaurentPoly& operator*=(const Rational& s);
    LaurentPoly& operator*=(const TpPoly& s);

    /// Product with terms above the given total q-degree discarded.
    static LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b,
                           std::optional<int> qdegree_cap);

    /// Drops every term whose total q-degree exceeds the cap.
    LaurentPoly truncated(int qdegree_cap) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Numeric specialization; q entries must be nonzero wherever the
    /// corresponding variable occurs with a negative exponent.
    std::complex<double> evaluate(const std::vector<std::complex<double>>& q,
                                  std::complex<double> tp) const;

    /// Exact substitution of t_p; the result has tp_truncation 0.
    LaurentPoly substitute_tp(const Rational& tp) const;

    std::string str() const;

  private:
    void check_compatible(const LaurentPoly& o) const;
    std::vector<std::string> vars_;
    int trunc_;
    std::map<ExpVec, TpPoly, GradedLex> terms_;
};

} // namespace qspec

#endif
