#ifndef QSPEC_CHARPOLY_HPP
#define QSPEC_CHARPOLY_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qspec/dubrovin.hpp"

namespace qspec {

/// det(lambda I - K) with Laurent-polynomial coefficients; coeffs[k]
/// multiplies lambda^k, the leading coefficient is the constant 1.
struct CharPoly {
    std::vector<LaurentPoly> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

CharPoly char_poly(const KMatrix& K);

/// Characteristic polynomial along a ray q_i = nu_i q, collapsed to the
/// single variable q. Coefficients are TpPoly (generic t_p mode) or
/// constants (specialized mode, truncation order 0).
struct RayPoly {
    std::map<std::pair<int, int>, TpPoly> terms; // (lambda power, q power) -> coeff
    std::vector<Rational> ray;
    bool tp_generic = true;
    Rational tp_value;
    int tp_order = 0;
};

RayPoly substitute_ray(const CharPoly& c, const std::vector<Rational>& nu,
                       const std::optional<Rational>& tp);

/// Pipeline shortcut: substitute the ray into the matrix entries first and
/// take the determinant of the collapsed matrix (same result, much faster).
RayPoly ray_char_poly(const KMatrix& K, const std::vector<Rational>& nu,
                      const std::optional<Rational>& tp);

struct NewtonDiagram {
    std::set<std::pair<int, int>> pairs;          // (x, y) = (lambda power, q power)
    std::vector<std::pair<int, int>> hull;        // salient vertices, x ascending
    int complete_qdegree = 0;                     // pairs with y above this are provisional
    std::vector<std::pair<int, int>> unknown_region() const;
};

NewtonDiagram newton_polygon(const RayPoly& p, int complete_qdegree);

struct PolygonLawReport {
    bool pass = false;
    std::vector<std::pair<int, int>> expected_hull;
    std::vector<std::pair<int, int>> actual_hull;
    std::string message;
};

/// Theorem check: the blown-up hull must equal the minimal-model hull
/// translated by (0,-r) and extended on the right by a slope-1 segment of
/// horizontal length r.
PolygonLawReport verify_blowup_polygon(const NewtonDiagram& minimal, const NewtonDiagram& blown,
                                       int r);

/// Lower convex hull (salient vertices) of a set of lattice points.
std::vector<std::pair<int, int>> lower_hull(const std::set<std::pair<int, int>>& pts);

} // namespace qspec

#endif
