#ifndef QSPEC_SURFACES_HPP
#define QSPEC_SURFACES_HPP

#include <string>
#include <vector>

#include "qspec/rational.hpp"

namespace qspec {

enum class SurfaceKind { ProjectivePlane, QuadricP1xP1, Ruled, NefAnticanonical };

/// Data for a minimal surface whose anticanonical class is nef when negated:
/// the divisor intersection matrix and the first Chern class coefficients.
struct NefData {
    std::vector<std::vector<Rational>> pairing; // m x m, symmetric, invertible
    std::vector<Rational> c1;                   // length m
};

/// Effective class (beta, alpha): beta in minimal-model divisor coordinates,
/// alpha the exceptional multiplicities (class = beta - sum a_i E_i).
struct CurveClass {
    std::vector<int> beta;
    std::vector<int> alpha;

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.beta == b.beta && a.alpha == b.alpha;
    }
    friend bool operator<(const CurveClass& a, const CurveClass& b) {
        if (a.beta != b.beta)
            return a.beta < b.beta;
        return a.alpha < b.alpha;
    }
    std::string str() const;
};

using RatMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse via Gauss-Jordan; throws internal_error if singular.
RatMatrix invert_exact(const RatMatrix& m);

/// Basis index for the cohomology basis, ordered 0 < divisors < p.
struct BasisIndex {
    int idx; // 0 = unit, 1..m+r = divisors, m+r+1 = point class
    static BasisIndex unit() { return {0}; }
    static BasisIndex divisor(int k) { return {k}; } // 1-based divisor slot
    static BasisIndex point(int dim) { return {dim - 1}; }
};

class SurfaceModel {
  public:
    static SurfaceModel plane(int r);
    static SurfaceModel quadric(int r);
    static SurfaceModel ruled(int genus, int degree, int r);
    static SurfaceModel nef(NefData data, int r);
    /// Descriptor grammar: `p2`, `p1xp1`, `ruled:g=<int>,u=<int>`,
    /// `nef:<path-to-json>`; blow-up count given separately.
    static SurfaceModel parse(const std::string& descriptor, int r);

    SurfaceKind kind() const { return kind_; }
    int r() const { return r_; }
    int m() const { return m_; }
    int dim() const { return m_ + r_ + 2; }
    int genus() const { return genus_; }
    int degree_u() const { return degree_u_; }
    const NefData& nef_data() const { return nef_; }

    std::string descriptor() const;
    std::string full_descriptor() const; // descriptor plus blow-up count

    /// Divisor-block intersection matrix in display coordinates
    /// (minimal block, then -1 on each exceptional slot).
    RatMatrix divisor_gram() const;
    /// Full (m+r+2)^2 pairing over the basis (T_0, divisors, T_p).
    RatMatrix pairing() const;
    RatMatrix pairing_inverse() const;

    std::vector<Rational> c1_min() const;      // length m
    std::vector<Rational> first_chern() const; // length m+r, -1 on exceptional slots

    /// Exact intersection of c1(X_min) with beta.
    Rational c1_dot_beta(const std::vector<int>& beta) const;
    /// Expected dimension n_{beta,alpha} = c1.beta - |alpha| - 1.
    long expected_dim(const CurveClass& c) const;

    std::vector<std::string> qvar_labels() const;

  private:
    SurfaceModel() = default;
    SurfaceKind kind_ = SurfaceKind::ProjectivePlane;
    int m_ = 1;
    int r_ = 0;
    int genus_ = 0;
    int degree_u_ = 0;
    NefData nef_;
};

/// Canonical S_r representative: zero entries removed, remaining entries
/// sorted in descending order.
CurveClass normalize_class(CurveClass c);

/// (d-1)(d-2)/2 - sum a_i(a_i-1)/2 on blow-ups of the plane.
Rational arithmetic_genus(const SurfaceModel& s, const CurveClass& c);

/// Homology basis change identifying Bl_r(P1xP1), r >= 1, with Bl_{r+1}(P2):
/// fiber -> h - E_Q, base -> h - E_P, first exceptional -> h - E_P - E_Q.
CurveClass quadric_to_plane_basis(const SurfaceModel& s, const CurveClass& c);

} // namespace qspec

#endif
