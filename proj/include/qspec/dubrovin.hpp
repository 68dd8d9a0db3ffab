#ifndef QSPEC_DUBROVIN_HPP
#define QSPEC_DUBROVIN_HPP

#include <vector>

#include "qspec/gw.hpp"
#include "qspec/laurent.hpp"

namespace qspec {

/// Quantum multiplication by the Euler field at t_0 = 0, as an exact matrix
/// of Laurent polynomials over the basis (T_0, divisors, T_p). Entries are
/// complete up to total q-degree `degree_cap`; t_p-powers are truncated at
/// `tp_order`.
struct KMatrix {
    SurfaceModel surface;
    int degree_cap;
    int tp_order;
    std::vector<std::string> qvars;
    std::vector<std::vector<LaurentPoly>> entries;
    /// Sign of the q_e^{-1} monomial on the exceptional diagonal:
    /// -1 for the assembled surfaces, +1 for the nef closed form.
    int exceptional_pole_sign;
};

/// Third derivative F_ijk of the quantum part of the GW potential in the
/// directions of basis elements i, j, k.
LaurentPoly potential_third_derivative(GWTable& table, BasisIndex i, BasisIndex j, BasisIndex k,
                                       int degree_cap, int tp_order);

/// Coordinates of T_i * T_j over the basis (T_0, divisors, T_p).
std::vector<LaurentPoly> quantum_product(GWTable& table, BasisIndex i, BasisIndex j,
                                         int degree_cap, int tp_order);

KMatrix k_matrix(GWTable& table, int degree_cap, int tp_order);

/// Diagonal of the grading operator: (d-2)/2 on the degree-d block.
std::vector<Rational> grading_diagonal(const SurfaceModel& s);

} // namespace qspec

#endif
