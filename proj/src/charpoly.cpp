#include "qspec/charpoly.hpp"

#include <algorithm>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    const size_t n = a.size();
    PolyMatrix r(n, std::vector<LaurentPoly>(n, LaurentPoly(a[0][0].vars(), a[0][0].tp_truncation())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero())
                    continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

// Faddeev-LeVerrier: coefficients of det(lambda I - M), exact over any
// commutative Q-algebra.
std::vector<LaurentPoly> faddeev_leverrier(const PolyMatrix& M) {
    const size_t n = M.size();
    const auto vars = M[0][0].vars();
    const int T = M[0][0].tp_truncation();
    auto zero = LaurentPoly(vars, T);

    std::vector<LaurentPoly> c(n + 1, zero);
    c[n] = LaurentPoly::constant(vars, T, Rational(1));

    PolyMatrix N(n, std::vector<LaurentPoly>(n, zero));
    for (size_t i = 0; i < n; ++i)
        N[i][i] = LaurentPoly::constant(vars, T, Rational(1));

    for (size_t k = 1; k <= n; ++k) {
        PolyMatrix KN = matmul(M, N);
        LaurentPoly tr(vars, T);
        for (size_t i = 0; i < n; ++i)
            tr += KN[i][i];
        tr *= Rational(-1, static_cast<long>(k));
        c[n - k] = tr;
        if (k < n) {
            N = KN;
            for (size_t i = 0; i < n; ++i)
                N[i][i] += c[n - k];
        }
    }
    return c;
}

} // namespace

CharPoly char_poly(const KMatrix& K) {
    CharPoly out;
    out.coeffs = faddeev_leverrier(K.entries);
    return out;
}

namespace {

// Collapse a multivariate Laurent polynomial along the ray q_i = nu_i q.
LaurentPoly collapse_entry(const LaurentPoly& e, const std::vector<Rational>& nu,
                           const std::optional<Rational>& tp) {
    for (const auto& v : nu)
        if (v.is_zero())
            throw domain_error("substitute_ray: zero ray component");
    const int T = tp ? 0 : e.tp_truncation();
    LaurentPoly out({"q"}, T);
    for (const auto& [exps, coeff] : e.terms()) {
        if (exps.size() != nu.size())
            throw domain_error("substitute_ray: ray length mismatch");
        Rational scale(1);
        int qdeg = 0;
        for (size_t i = 0; i < exps.size(); ++i) {
            qdeg += exps[i];
            for (int k = 0; k < exps[i]; ++k) scale *= nu[i];
            for (int k = 0; k > exps[i]; --k) scale /= nu[i];
        }
        TpPoly c = tp ? TpPoly::constant(0, coeff.eval_rational(*tp) * scale) : coeff * scale;
        if (!c.is_zero())
            out.add_term({qdeg}, c);
    }
    return out;
}

RayPoly assemble_raypoly(const std::vector<LaurentPoly>& lambda_coeffs,
                         const std::vector<Rational>& nu, const std::optional<Rational>& tp,
                         int tp_order) {
    RayPoly out;
    out.ray = nu;
    out.tp_generic = !tp.has_value();
    out.tp_value = tp.value_or(Rational(0));
    out.tp_order = out.tp_generic ? tp_order : 0;
    for (size_t x = 0; x < lambda_coeffs.size(); ++x) {
        for (const auto& [exps, coeff] : lambda_coeffs[x].terms()) {
            if (coeff.is_zero())
                continue;
            auto key = std::make_pair(static_cast<int>(x), exps[0]);
            auto [it, inserted] = out.terms.emplace(key, coeff);
            if (!inserted)
                it->second += coeff;
        }
        // prune exact cancellations
        for (auto it = out.terms.begin(); it != out.terms.end();) {
            if (it->second.is_zero())
                it = out.terms.erase(it);
            else
                ++it;
        }
    }
    return out;
}

} // namespace

RayPoly substitute_ray(const CharPoly& c, const std::vector<Rational>& nu,
                       const std::optional<Rational>& tp) {
    if (c.coeffs.empty())
        throw domain_error("substitute_ray: empty polynomial");
    std::vector<LaurentPoly> collapsed;
    collapsed.reserve(c.coeffs.size());
    for (const auto& coeff : c.coeffs)
        collapsed.push_back(collapse_entry(coeff, nu, tp));
    return assemble_raypoly(collapsed, nu, tp, c.coeffs[0].tp_truncation());
}

RayPoly ray_char_poly(const KMatrix& K, const std::vector<Rational>& nu,
                      const std::optional<Rational>& tp) {
    const size_t n = K.entries.size();
    PolyMatrix M(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            M[i].push_back(collapse_entry(K.entries[i][j], nu, tp));
    return assemble_raypoly(faddeev_leverrier(M), nu, tp, K.tp_order);
}

std::vector<std::pair<int, int>> lower_hull(const std::set<std::pair<int, int>>& pts) {
    // lowest point per x, then a monotone chain keeping only salient
    // vertices (slopes strictly increasing)
    std::map<int, int> miny;
    for (const auto& [x, y] : pts) {
        auto [it, inserted] = miny.emplace(x, y);
        if (!inserted)
            it->second = std::min(it->second, y);
    }
    std::vector<std::pair<int, int>> hull;
    for (const auto& [x, y] : miny) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            long cross = static_cast<long>(b.first - a.first) * (y - a.second) -
                         static_cast<long>(b.second - a.second) * (x - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back({x, y});
    }
    // drop trailing vertices that are not on the lower boundary: walk from
    // the right and keep only while slopes keep increasing left to right
    // (the chain above already guarantees this; nothing more to do)
    return hull;
}

NewtonDiagram newton_polygon(const RayPoly& p, int complete_qdegree) {
    if (p.terms.empty())
        throw domain_error("newton_polygon: empty polynomial");
    NewtonDiagram d;
    d.complete_qdegree = complete_qdegree;
    for (const auto& [key, coeff] : p.terms)
        if (!coeff.is_zero())
            d.pairs.insert(key);
    d.hull = lower_hull(d.pairs);
    return d;
}

std::vector<std::pair<int, int>> NewtonDiagram::unknown_region() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& pr : pairs)
        if (pr.second > complete_qdegree)
            out.push_back(pr);
    return out;
}

PolygonLawReport verify_blowup_polygon(const NewtonDiagram& minimal, const NewtonDiagram& blown,
                                       int r) {
    PolygonLawReport rep;
    rep.actual_hull = blown.hull;
    if (r == 0) {
        rep.expected_hull = minimal.hull;
        rep.pass = (blown.hull == minimal.hull);
        rep.message = rep.pass ? "r=0: diagrams agree" : "r=0: diagrams differ";
        return rep;
    }
    std::vector<std::pair<int, int>> expected;
    expected.reserve(minimal.hull.size() + 1);
    for (const auto& [x, y] : minimal.hull)
        expected.push_back({x, y - r});
    if (expected.empty()) {
        rep.message = "minimal hull empty";
        return rep;
    }
    auto last = expected.back();
    expected.push_back({last.first + r, last.second + r});
    rep.expected_hull = expected;
    rep.pass = (blown.hull == expected);
    rep.message = rep.pass ? "blow-up law holds" : "hull mismatch";
    return rep;
}

} // namespace qspec
