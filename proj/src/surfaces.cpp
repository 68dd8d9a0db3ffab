#include "qspec/surfaces.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qspec/errors.hpp"

namespace qspec {

std::string CurveClass::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < beta.size(); ++i)
        os << (i ? "," : "") << beta[i];
    os << ";";
    for (size_t i = 0; i < alpha.size(); ++i)
        os << (i ? "," : "") << alpha[i];
    os << ")";
    return os.str();
}

RatMatrix invert_exact(const RatMatrix& m) {
    const size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw internal_error("invert_exact: non-square matrix");
        inv[i][i] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw internal_error("invert_exact: singular pairing matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

SurfaceModel SurfaceModel::plane(int r) {
    if (r < 0)
        throw domain_error("SurfaceModel: negative blow-up count");
    SurfaceModel s;
    s.kind_ = SurfaceKind::ProjectivePlane;
    s.m_ = 1;
    s.r_ = r;
    return s;
}

SurfaceModel SurfaceModel::quadric(int r) {
    if (r < 0)
        throw domain_error("SurfaceModel: negative blow-up count");
    SurfaceModel s;
    s.kind_ = SurfaceKind::QuadricP1xP1;
    s.m_ = 2;
    s.r_ = r;
    return s;
}

SurfaceModel SurfaceModel::ruled(int genus, int degree, int r) {
    if (r < 0)
        throw domain_error("SurfaceModel: negative blow-up count");
    if (genus < 1)
        throw domain_error("SurfaceModel: ruled surfaces require genus >= 1 "
                           "(genus 0 is handled by p2 or p1xp1)");
    if (degree == 0 || degree == 2 - 2 * genus)
        throw domain_error("SurfaceModel: ruled degree u must avoid 0 and 2-2g");
    SurfaceModel s;
    s.kind_ = SurfaceKind::Ruled;
    s.m_ = 2;
    s.r_ = r;
    s.genus_ = genus;
    s.degree_u_ = degree;
    return s;
}

SurfaceModel SurfaceModel::nef(NefData data, int r) {
    if (r < 0)
        throw domain_error("SurfaceModel: negative blow-up count");
    const size_t m = data.pairing.size();
    if (m == 0 || data.c1.size() != m)
        throw domain_error("SurfaceModel: nef data needs an m x m pairing and length-m c1");
    for (const auto& row : data.pairing)
        if (row.size() != m)
            throw domain_error("SurfaceModel: nef pairing matrix is not square");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (data.pairing[i][j] != data.pairing[j][i])
                throw domain_error("SurfaceModel: nef pairing matrix is not symmetric");
    invert_exact(data.pairing); // rejects singular input up front
    SurfaceModel s;
    s.kind_ = SurfaceKind::NefAnticanonical;
    s.m_ = static_cast<int>(m);
    s.r_ = r;
    s.nef_ = std::move(data);
    return s;
}

SurfaceModel SurfaceModel::parse(const std::string& descriptor, int r) {
    if (descriptor == "p2")
        return plane(r);
    if (descriptor == "p1xp1")
        return quadric(r);
    if (descriptor.rfind("ruled:", 0) == 0) {
        int g = 0, u = 0;
        bool have_g = false, have_u = false;
        std::stringstream ss(descriptor.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.rfind("g=", 0) == 0) {
                g = std::stoi(tok.substr(2));
                have_g = true;
            } else if (tok.rfind("u=", 0) == 0) {
                u = std::stoi(tok.substr(2));
                have_u = true;
            } else {
                throw parse_error("surface descriptor: unknown ruled field '" + tok + "'");
            }
        }
        if (!have_g || !have_u)
            throw parse_error("surface descriptor: ruled needs g=<int>,u=<int>");
        return ruled(g, u, r);
    }
    if (descriptor.rfind("nef:", 0) == 0) {
        const std::string path = descriptor.substr(4);
        std::ifstream in(path);
        if (!in)
            throw parse_error("surface descriptor: cannot open nef file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw parse_error(std::string("surface descriptor: bad nef JSON: ") + e.what());
        }
        NefData d;
        for (const auto& row : j.at("pairing")) {
            std::vector<Rational> out;
            for (const auto& v : row)
                out.push_back(v.is_string() ? Rational::from_string(v.get<std::string>())
                                            : Rational(v.get<long>()));
            d.pairing.push_back(std::move(out));
        }
        for (const auto& v : j.at("c1"))
            d.c1.push_back(v.is_string() ? Rational::from_string(v.get<std::string>())
                                         : Rational(v.get<long>()));
        return nef(std::move(d), r);
    }
    throw parse_error("surface descriptor: unknown surface '" + descriptor + "'");
}

std::string SurfaceModel::descriptor() const {
    switch (kind_) {
    case SurfaceKind::ProjectivePlane:
        return "p2";
    case SurfaceKind::QuadricP1xP1:
        return "p1xp1";
    case SurfaceKind::Ruled:
        return "ruled:g=" + std::to_string(genus_) + ",u=" + std::to_string(degree_u_);
    case SurfaceKind::NefAnticanonical: {
        std::ostringstream os;
        os << "nef:m=" << m_ << ";P=[";
        for (int i = 0; i < m_; ++i) {
            os << (i ? ";" : "");
            for (int j = 0; j < m_; ++j)
                os << (j ? "," : "") << nef_.pairing[i][j].str();
        }
        os << "];c1=[";
        for (int i = 0; i < m_; ++i)
            os << (i ? "," : "") << nef_.c1[i].str();
        os << "]";
        return os.str();
    }
    }
    throw internal_error("SurfaceModel: bad kind");
}

std::string SurfaceModel::full_descriptor() const {
    return descriptor() + "/r=" + std::to_string(r_);
}

RatMatrix SurfaceModel::divisor_gram() const {
    const int n = m_ + r_;
    RatMatrix g(n, std::vector<Rational>(n, Rational(0)));
    switch (kind_) {
    case SurfaceKind::ProjectivePlane:
        g[0][0] = Rational(1);
        break;
    case SurfaceKind::QuadricP1xP1:
        g[0][1] = g[1][0] = Rational(1);
        break;
    case SurfaceKind::Ruled:
        g[0][1] = g[1][0] = Rational(1);
        g[1][1] = Rational(degree_u_);
        break;
    case SurfaceKind::NefAnticanonical:
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j)
                g[i][j] = nef_.pairing[i][j];
        break;
    }
    for (int e = m_; e < n; ++e)
        g[e][e] = Rational(-1);
    return g;
}

RatMatrix SurfaceModel::pairing() const {
    const int n = dim();
    RatMatrix g(n, std::vector<Rational>(n, Rational(0)));
    g[0][n - 1] = g[n - 1][0] = Rational(1);
    RatMatrix div = divisor_gram();
    for (int i = 0; i < m_ + r_; ++i)
        for (int j = 0; j < m_ + r_; ++j)
            g[1 + i][1 + j] = div[i][j];
    return g;
}

RatMatrix SurfaceModel::pairing_inverse() const { return invert_exact(pairing()); }

std::vector<Rational> SurfaceModel::c1_min() const {
    switch (kind_) {
    case SurfaceKind::ProjectivePlane:
        return {Rational(3)};
    case SurfaceKind::QuadricP1xP1:
        return {Rational(2), Rational(2)};
    case SurfaceKind::Ruled:
        return {Rational(2 - 2 * genus_ - degree_u_), Rational(2)};
    case SurfaceKind::NefAnticanonical:
        return nef_.c1;
    }
    throw internal_error("SurfaceModel: bad kind");
}

std::vector<Rational> SurfaceModel::first_chern() const {
    std::vector<Rational> c = c1_min();
    c.resize(m_ + r_, Rational(-1));
    for (int e = m_; e < m_ + r_; ++e)
        c[e] = Rational(-1);
    return c;
}

Rational SurfaceModel::c1_dot_beta(const std::vector<int>& beta) const {
    if (static_cast<int>(beta.size()) != m_)
        throw domain_error("c1_dot_beta: beta has wrong length");
    // c1^T P_min beta with P_min the minimal-model intersection matrix.
    RatMatrix g = divisor_gram();
    std::vector<Rational> c = c1_min();
    Rational acc(0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            acc += c[i] * g[i][j] * Rational(beta[j]);
    return acc;
}

long SurfaceModel::expected_dim(const CurveClass& c) const {
    Rational deg = c1_dot_beta(c.beta);
    if (!deg.is_integer())
        throw domain_error("expected_dim: non-integer c1 degree");
    long alpha_sum = 0;
    for (int a : c.alpha) alpha_sum += a;
    return deg.numerator().get_si() - alpha_sum - 1;
}

std::vector<std::string> SurfaceModel::qvar_labels() const {
    std::vector<std::string> labels;
    switch (kind_) {
    case SurfaceKind::ProjectivePlane:
        labels = {"qh"};
        break;
    case SurfaceKind::QuadricP1xP1:
    case SurfaceKind::Ruled:
        labels = {"qf", "qc"};
        break;
    case SurfaceKind::NefAnticanonical:
        for (int i = 1; i <= m_; ++i)
            labels.push_back("q" + std::to_string(i));
        break;
    }
    for (int e = 0; e < r_; ++e)
        labels.push_back("q" + std::to_string(m_ + 1 + e));
    return labels;
}

CurveClass normalize_class(CurveClass c) {
    auto& a = c.alpha;
    a.erase(std::remove(a.begin(), a.end(), 0), a.end());
    std::sort(a.begin(), a.end(), std::greater<int>());
    return c;
}

Rational arithmetic_genus(const SurfaceModel& s, const CurveClass& c) {
    if (s.kind() != SurfaceKind::ProjectivePlane)
        throw unsupported_error("arithmetic_genus: only defined on blow-ups of the plane");
    if (c.beta.size() != 1)
        throw domain_error("arithmetic_genus: bad class");
    long d = c.beta[0];
    Rational pa = Rational((d - 1) * (d - 2), 2);
    for (int ai : c.alpha)
        pa -= Rational(static_cast<long>(ai) * (ai - 1), 2);
    return pa;
}

CurveClass quadric_to_plane_basis(const SurfaceModel& s, const CurveClass& c) {
    if (s.kind() != SurfaceKind::QuadricP1xP1)
        throw unsupported_error("quadric_to_plane_basis: surface is not p1xp1");
    if (s.r() < 1)
        throw unsupported_error("quadric_to_plane_basis: needs r >= 1 "
                                "(minimal p1xp1 is handled natively)");
    if (c.beta.size() != 2)
        throw domain_error("quadric_to_plane_basis: bad class");
    std::vector<int> alpha = c.alpha;
    alpha.resize(s.r(), 0);
    const int b = c.beta[0], d = c.beta[1], a1 = alpha[0];
    // fiber -> h - E_Q, base -> h - E_P, E_1 -> h - E_P - E_Q
    CurveClass out;
    out.beta = {b + d - a1};
    out.alpha.reserve(alpha.size() + 1);
    out.alpha.push_back(d - a1); // multiplicity at P
    out.alpha.push_back(b - a1); // multiplicity at Q
    for (size_t i = 1; i < alpha.size(); ++i)
        out.alpha.push_back(alpha[i]);
    return out;
}

} // namespace qspec
