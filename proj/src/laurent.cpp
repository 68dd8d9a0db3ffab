#include "qspec/laurent.hpp"

#include <cmath>
#include <sstream>

#include "qspec/errors.hpp"

namespace qspec {

int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, int tp_truncation)
    : vars_(std::move(vars)), trunc_(tp_truncation) {
    if (trunc_ < 0)
        throw config_error("LaurentPoly: negative t_p truncation");
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, int tp_truncation,
                                  const ExpVec& exps, const TpPoly& coeff) {
    LaurentPoly p(vars, tp_truncation);
    p.add_term(exps, coeff);
    return p;
}

LaurentPoly LaurentPoly::constant(const std::vector<std::string>& vars, int tp_truncation,
                                  const Rational& value) {
    LaurentPoly p(vars, tp_truncation);
    p.add_term(ExpVec(vars.size(), 0), TpPoly::constant(tp_truncation, value));
    return p;
}

TpPoly LaurentPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    if (it == terms_.end())
        return TpPoly(trunc_);
    return it->second;
}

void LaurentPoly::add_term(const ExpVec& exps, const TpPoly& coeff) {
    if (exps.size() != vars_.size())
        throw config_error("LaurentPoly: exponent vector has wrong length");
    if (coeff.truncation_order() != trunc_)
        throw config_error("LaurentPoly: coefficient truncation order mismatch");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void LaurentPoly::add_term(const ExpVec& exps, int tp_power, const Rational& value) {
    add_term(exps, TpPoly::monomial(trunc_, tp_power, value));
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_)
        throw config_error("LaurentPoly: mismatched variable sets");
    if (trunc_ != o.trunc_)
        throw config_error("LaurentPoly: mismatched truncation orders");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_, trunc_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& a, const LaurentPoly& b,
                             std::optional<int> qdegree_cap) {
    a.check_compatible(b);
    LaurentPoly r(a.vars_, a.trunc_);
    const size_t nv = a.vars_.size();
    ExpVec e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            if (qdegree_cap && total_degree(ea) + total_degree(eb) > *qdegree_cap)
                continue;
            for (size_t i = 0; i < nv; ++i)
                e[i] = ea[i] + eb[i];
            TpPoly c = ca * cb;
            if (!c.is_zero())
                r.add_term(e, c);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const TpPoly& s) {
    if (s.truncation_order() != trunc_)
        throw config_error("LaurentPoly: scalar truncation order mismatch");
    std::map<ExpVec, TpPoly, GradedLex> out;
    for (const auto& [e, c] : terms_) {
        TpPoly p = c * s;
        if (!p.is_zero())
            out.emplace(e, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::truncated(int qdegree_cap) const {
    LaurentPoly r(vars_, trunc_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= qdegree_cap)
            r.terms_.emplace(e, c);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

std::complex<double> LaurentPoly::evaluate(const std::vector<std::complex<double>>& q,
                                           std::complex<double> tp) const {
    if (q.size() != vars_.size())
        throw domain_error("LaurentPoly::evaluate: wrong number of q values");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> mono(1.0, 0.0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (q[i] == std::complex<double>(0.0, 0.0)) {
                if (e[i] < 0)
                    throw domain_error("LaurentPoly::evaluate: zero substituted into " + vars_[i] +
                                       " which occurs with negative exponent");
                mono = 0.0;
                break;
            }
            mono *= std::pow(q[i], e[i]);
        }
        acc += mono * c.eval(tp);
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute_tp(const Rational& tp) const {
    LaurentPoly r(vars_, 0);
    for (const auto& [e, c] : terms_) {
        Rational v = c.eval_rational(tp);
        if (!v.is_zero())
            r.add_term(e, TpPoly::constant(0, v));
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << "*" << vars_[i];
            if (e[i] != 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace qspec
