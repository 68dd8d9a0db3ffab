#include "qspec/dubrovin.hpp"

#include "qspec/errors.hpp"

namespace qspec {

namespace {

ExpVec exponents_of(const SurfaceModel& s, const CurveClass& c) {
    ExpVec x(c.beta.begin(), c.beta.end());
    x.resize(s.m() + s.r(), 0);
    for (size_t i = 0; i < c.alpha.size(); ++i)
        x[s.m() + i] = c.alpha[i];
    return x;
}

// Derivative pick-off: exponent of the monomial for divisor directions,
// 1 for the point direction, 0 for the unit.
Rational delta_pick(const SurfaceModel& s, const ExpVec& x, BasisIndex b) {
    const int p = s.dim() - 1;
    if (b.idx == 0)
        return Rational(0);
    if (b.idx == p)
        return Rational(1);
    return Rational(x[b.idx - 1]);
}

// Covariant pick-off: (P x)_l with P the display Gram of the divisors.
std::vector<Rational> gamma_picks(const RatMatrix& gram, const ExpVec& x) {
    const size_t n = gram.size();
    std::vector<Rational> g(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (x[j] != 0)
                g[i] += gram[i][j] * Rational(x[j]);
    return g;
}

} // namespace

LaurentPoly potential_third_derivative(GWTable& table, BasisIndex i, BasisIndex j, BasisIndex k,
                                       int degree_cap, int tp_order) {
    const SurfaceModel& s = table.surface();
    const int p = s.dim() - 1;
    const int eps = (i.idx == p) + (j.idx == p) + (k.idx == p);
    LaurentPoly out(s.qvar_labels(), tp_order);
    if (i.idx == 0 || j.idx == 0 || k.idx == 0)
        return out; // no t_0 dependence in the quantum part
    for (const auto& term : table.support_classes(degree_cap)) {
        const long n = s.expected_dim(term.cls);
        if (n - eps < 0)
            continue;
        ExpVec x = exponents_of(s, term.cls);
        Rational coeff = term.value * delta_pick(s, x, i) * delta_pick(s, x, j) *
                         delta_pick(s, x, k) / Rational::factorial(n - eps);
        if (coeff.is_zero())
            continue;
        out.add_term(x, static_cast<int>(n) - eps, coeff);
    }
    return out;
}

std::vector<LaurentPoly> quantum_product(GWTable& table, BasisIndex i, BasisIndex j,
                                         int degree_cap, int tp_order) {
    const SurfaceModel& s = table.surface();
    const int dim = s.dim();
    const int p = dim - 1;
    const auto vars = s.qvar_labels();
    std::vector<LaurentPoly> out(dim, LaurentPoly(vars, tp_order));

    // classical cup product
    if (i.idx == 0) {
        out[j.idx] += LaurentPoly::constant(vars, tp_order, Rational(1));
        return out; // T_0 is the identity for the quantum product
    }
    if (j.idx == 0) {
        out[i.idx] += LaurentPoly::constant(vars, tp_order, Rational(1));
        return out;
    }
    if (i.idx != p && j.idx != p) {
        RatMatrix cup = invert_exact(s.divisor_gram());
        Rational c = cup[i.idx - 1][j.idx - 1];
        if (!c.is_zero())
            out[p] += LaurentPoly::constant(vars, tp_order, c);
    }

    // quantum corrections
    const int eps0 = (i.idx == p) + (j.idx == p);
    const RatMatrix gram = s.divisor_gram();
    for (const auto& term : table.support_classes(degree_cap)) {
        const long n = s.expected_dim(term.cls);
        ExpVec x = exponents_of(s, term.cls);
        Rational base = term.value * delta_pick(s, x, i) * delta_pick(s, x, j);
        if (base.is_zero())
            continue;
        if (n - eps0 >= 0) {
            std::vector<Rational> gam = gamma_picks(gram, x);
            Rational scale = base / Rational::factorial(n - eps0);
            for (int l = 1; l <= s.m() + s.r(); ++l) {
                Rational c = scale * gam[l - 1];
                if (!c.is_zero())
                    out[l].add_term(x, static_cast<int>(n) - eps0, c);
            }
        }
        if (n - eps0 - 1 >= 0) { // unit component, raised through g^{p0}
            Rational c = base / Rational::factorial(n - eps0 - 1);
            out[0].add_term(x, static_cast<int>(n) - eps0 - 1, c);
        }
    }
    return out;
}

KMatrix k_matrix(GWTable& table, int degree_cap, int tp_order) {
    const SurfaceModel& s = table.surface();
    const int dim = s.dim();
    const int p = dim - 1;
    const auto vars = s.qvar_labels();

    KMatrix K;
    K.surface = s;
    K.degree_cap = degree_cap;
    K.tp_order = tp_order;
    K.qvars = vars;
    K.entries.assign(dim, std::vector<LaurentPoly>(dim, LaurentPoly(vars, tp_order)));

    if (s.kind() == SurfaceKind::NefAnticanonical) {
        // closed form: lower triangular with the exceptional poles on the diagonal
        K.exceptional_pole_sign = +1;
        for (int e = s.m() + 1; e <= s.m() + s.r(); ++e) {
            ExpVec x(s.m() + s.r(), 0);
            x[e - 1] = -1;
            K.entries[e][e].add_term(x, 0, Rational(1));
        }
    } else {
        K.exceptional_pole_sign = -1;
        // Euler coordinates for the assembly: P_min c_min on the minimal
        // slots, -1 on the exceptional slots, -2 t_p on the point slot.
        RatMatrix gram = s.divisor_gram();
        std::vector<Rational> cmin = s.c1_min();
        std::vector<Rational> w(s.m() + s.r(), Rational(0));
        for (int i = 0; i < s.m(); ++i)
            for (int jj = 0; jj < s.m(); ++jj)
                w[i] += gram[i][jj] * cmin[jj];
        for (int e = s.m(); e < s.m() + s.r(); ++e)
            w[e] = Rational(-1);

        for (int j = 0; j < dim; ++j) {
            for (int a = 1; a <= s.m() + s.r(); ++a) {
                if (w[a - 1].is_zero())
                    continue;
                auto col = quantum_product(table, BasisIndex{a}, BasisIndex{j}, degree_cap, tp_order);
                for (int i = 0; i < dim; ++i) {
                    col[i] *= w[a - 1];
                    K.entries[i][j] += col[i];
                }
            }
            auto colp = quantum_product(table, BasisIndex{p}, BasisIndex{j}, degree_cap, tp_order);
            TpPoly minus2tp = TpPoly::monomial(tp_order, 1, Rational(-2));
            for (int i = 0; i < dim; ++i) {
                colp[i] *= minus2tp;
                K.entries[i][j] += colp[i];
            }
        }
    }

    // trivial column and row, set exactly
    auto constant_entry = [&](const Rational& v) {
        LaurentPoly e(vars, tp_order);
        if (!v.is_zero())
            e.add_term(ExpVec(vars.size(), 0), 0, v);
        return e;
    };
    std::vector<Rational> chern = s.first_chern();
    K.entries[0][0] = constant_entry(Rational(0));
    for (int a = 1; a <= s.m() + s.r(); ++a)
        K.entries[a][0] = constant_entry(chern[a - 1]);
    {
        LaurentPoly twotp(vars, tp_order);
        twotp.add_term(ExpVec(vars.size(), 0), 1, Rational(2));
        K.entries[p][0] = twotp;
    }
    RatMatrix gram = s.divisor_gram();
    std::vector<Rational> cmin = s.c1_min();
    for (int jcol = 1; jcol <= s.m(); ++jcol) {
        Rational v(0);
        for (int a = 0; a < s.m(); ++a)
            v += gram[jcol - 1][a] * cmin[a];
        K.entries[p][jcol] = constant_entry(v);
    }
    for (int e = s.m() + 1; e <= s.m() + s.r(); ++e)
        K.entries[p][e] = constant_entry(Rational(-1));
    K.entries[p][p] = constant_entry(Rational(0));
    return K;
}

std::vector<Rational> grading_diagonal(const SurfaceModel& s) {
    std::vector<Rational> g(s.dim(), Rational(0));
    g.front() = Rational(-1);
    g.back() = Rational(1);
    return g;
}

} // namespace qspec
