#ifndef QSPEC_GW_HPP
#define QSPEC_GW_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qspec/surfaces.hpp"

namespace qspec {

/// Class together with its invariant, alpha zero-padded to length r and in
/// an explicit slot assignment (not the canonical S_r representative).
struct SupportTerm {
    CurveClass cls;
    Rational value;
};

/// Memoized genus-0 Gromov-Witten table for one surface model.
///
/// Values are computed by the vanishing/seed rules, the stability peel,
/// relation R(i) for exceptional multiplicities and relation (Rm) for
/// pure-degree classes; ruled (g >= 1) and nef surfaces have finite closed
/// tables. Blow-ups of P1xP1 are routed through the identification with
/// blow-ups of the plane.
class GWTable {
  public:
    GWTable(SurfaceModel surface, int degree_cap);

    const SurfaceModel& surface() const { return surface_; }
    int degree_cap() const { return degree_cap_; }
    size_t entry_count() const { return memo_.size(); }

    /// Exact invariant N_{beta,alpha}. Throws capacity_error beyond the
    /// degree cap and domain_error on malformed classes.
    Rational invariant(const CurveClass& c);

    /// Direct evaluation through relation (Rm) with the standard divisor
    /// pair; requires n >= 3. Used by the WDVV cross-check.
    Rational invariant_via_rm(const CurveClass& c);

    /// Canonical representatives with n >= 0 within the cap, plus the size
    /// of their S_r-orbit.
    std::vector<std::pair<CurveClass, long>> enumerate_classes(int cap) const;

    /// Every slot-explicit class with a nonzero invariant and q-degree
    /// bookkeeping within `cap`; input to the operator builders. Cached.
    const std::vector<SupportTerm>& support_classes(int cap);

    void save_cache(const std::string& path) const;
    static GWTable load_cache(const std::string& path, const SurfaceModel& expected);

  private:
    long degree_of(const CurveClass& c) const;
    Rational compute(const CurveClass& canonical);
    Rational closed_table_ruled(const CurveClass& canonical) const;
    Rational closed_table_nef(const CurveClass& canonical) const;
    Rational relation_ri(const CurveClass& canonical);
    Rational relation_rm(const CurveClass& canonical);

    SurfaceModel surface_;
    int degree_cap_;
    std::map<CurveClass, Rational> memo_;
    std::map<int, std::vector<SupportTerm>> support_cache_;
    std::unique_ptr<GWTable> plane_delegate_; // quadric blow-ups only
};

} // namespace qspec

#endif
