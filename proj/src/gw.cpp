#include "qspec/gw.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "qspec/errors.hpp"

namespace qspec {

namespace {

bool is_plane_family(SurfaceKind k) {
    return k == SurfaceKind::ProjectivePlane || k == SurfaceKind::QuadricP1xP1;
}

long alpha_sum(const std::vector<int>& a) {
    long s = 0;
    for (int x : a) s += x;
    return s;
}

// Number of distinct arrangements of `alpha` (zero-padded) over r slots.
long orbit_size(const std::vector<int>& alpha, int r) {
    std::map<int, int> counts;
    for (int a : alpha) ++counts[a];
    counts[0] += r - static_cast<int>(alpha.size());
    Rational result = Rational::factorial(r);
    for (const auto& [v, c] : counts) {
        (void)v;
        result /= Rational::factorial(c);
    }
    return result.numerator().get_si();
}

// Componentwise integer splits part1 + part2 = alpha with 0 <= part1 <= alpha.
void alpha_splits(const std::vector<int>& alpha,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&)>& sink) {
    std::vector<int> p1(alpha.size(), 0), p2(alpha.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == alpha.size()) {
            sink(p1, p2);
            return;
        }
        for (int b = 0; b <= alpha[pos]; ++b) {
            p1[pos] = b;
            p2[pos] = alpha[pos] - b;
            rec(pos + 1);
        }
    };
    rec(0);
}

} // namespace

GWTable::GWTable(SurfaceModel surface, int degree_cap)
    : surface_(std::move(surface)), degree_cap_(degree_cap) {
    if (degree_cap_ < 1)
        throw config_error("GWTable: degree cap must be >= 1");
}

long GWTable::degree_of(const CurveClass& c) const {
    switch (surface_.kind()) {
    case SurfaceKind::ProjectivePlane:
        return c.beta[0];
    case SurfaceKind::QuadricP1xP1:
    case SurfaceKind::Ruled:
        return static_cast<long>(c.beta[0]) + c.beta[1];
    case SurfaceKind::NefAnticanonical: {
        long s = 0;
        for (int b : c.beta) s += std::abs(b);
        return s;
    }
    }
    throw internal_error("GWTable: bad kind");
}

Rational GWTable::invariant(const CurveClass& c) {
    if (static_cast<int>(c.beta.size()) != surface_.m())
        throw domain_error("gw_invariant: beta has length " + std::to_string(c.beta.size()) +
                           ", expected " + std::to_string(surface_.m()));
    if (static_cast<int>(c.alpha.size()) > surface_.r())
        throw domain_error("gw_invariant: alpha has more entries than blown-up points");
    CurveClass canonical = normalize_class(c);
    if (degree_of(canonical) > degree_cap_)
        throw capacity_error("gw_invariant: class " + canonical.str() +
                             " exceeds degree cap D=" + std::to_string(degree_cap_) +
                             "; raise D to compute it");
    auto it = memo_.find(canonical);
    if (it != memo_.end())
        return it->second;
    Rational value = compute(canonical);
    memo_.emplace(std::move(canonical), value);
    return value;
}

Rational GWTable::compute(const CurveClass& canonical) {
    switch (surface_.kind()) {
    case SurfaceKind::Ruled:
        return closed_table_ruled(canonical);
    case SurfaceKind::NefAnticanonical:
        return closed_table_nef(canonical);
    default:
        break;
    }

    const auto& beta = canonical.beta;
    const auto& alpha = canonical.alpha;
    const bool beta_zero = std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; });

    if (beta_zero)
        return (alpha.size() == 1 && alpha[0] == -1) ? Rational(1) : Rational(0);
    for (int b : beta)
        if (b < 0)
            return Rational(0); // outside the effective cone
    for (int a : alpha)
        if (a < 0)
            return Rational(0); // Thm-style vanishing: effective beta, negative a_i
    if (surface_.expected_dim(canonical) < 0)
        return Rational(0);

    if (surface_.kind() == SurfaceKind::ProjectivePlane) {
        if (arithmetic_genus(surface_, canonical) < Rational(0))
            return Rational(0);
        if (beta[0] == 1 && alpha.empty())
            return Rational(1); // N_h
        if (!alpha.empty() && alpha.back() == 1) {
            // stability peel: n_{beta,alpha'} = n_{beta,alpha} + 1 > 0
            CurveClass peeled = canonical;
            peeled.alpha.pop_back();
            return invariant(peeled);
        }
        if (!alpha.empty())
            return relation_ri(canonical);
        return relation_rm(canonical);
    }

    // P1xP1 family
    if (surface_.r() >= 1) {
        if (!plane_delegate_)
            plane_delegate_ = std::make_unique<GWTable>(SurfaceModel::plane(surface_.r() + 1),
                                                        2 * degree_cap_ + 2);
        return plane_delegate_->invariant(quadric_to_plane_basis(surface_, canonical));
    }
    if ((beta[0] == 1 && beta[1] == 0) || (beta[0] == 0 && beta[1] == 1))
        return Rational(1); // N_f = N_c = 1
    return relation_rm(canonical);
}

Rational GWTable::closed_table_ruled(const CurveClass& canonical) const {
    const int b = canonical.beta[0], d = canonical.beta[1];
    const auto& alpha = canonical.alpha;
    if (b == 0 && d == 0)
        return (alpha.size() == 1 && alpha[0] == -1) ? Rational(1) : Rational(0);
    if (d != 0 || b < 0)
        return Rational(0); // no section-direction classes in positive genus
    if (b == 1 && alpha.empty())
        return Rational(1); // the fiber through a point
    if (b == 1 && alpha.size() == 1 && alpha[0] == 1)
        return Rational(1); // N_{f,1} = N_f
    if (b == 2 && alpha.size() == 1 && alpha[0] == 2)
        return Rational(surface_.degree_u(), 8); // N_{2f,2} = u/8
    return Rational(0);
}

Rational GWTable::closed_table_nef(const CurveClass& canonical) const {
    const bool beta_zero =
        std::all_of(canonical.beta.begin(), canonical.beta.end(), [](int b) { return b == 0; });
    if (beta_zero && canonical.alpha.size() == 1 && canonical.alpha[0] == -1)
        return Rational(1);
    return Rational(0);
}

Rational GWTable::relation_ri(const CurveClass& canonical) {
    // d^2 a N_{d,alpha} = (d^2-(a-1)^2) N_{d,alpha-[i]} + sum over splits
    const long d = canonical.beta[0];
    const long a = canonical.alpha[0]; // largest multiplicity, >= 2 here
    const long n_full = surface_.expected_dim(canonical);

    std::vector<int> lowered = canonical.alpha;
    lowered[0] -= 1;

    CurveClass low{{static_cast<int>(d)}, lowered};
    Rational rhs = Rational(d * d - (a - 1) * (a - 1)) * invariant(low);

    Rational sum(0);
    alpha_splits(lowered, [&](const std::vector<int>& p1, const std::vector<int>& p2) {
        for (long d1 = 1; d1 <= d - 1; ++d1) {
            const long d2 = d - d1;
            CurveClass c1{{static_cast<int>(d1)}, p1};
            CurveClass c2{{static_cast<int>(d2)}, p2};
            if (surface_.expected_dim(c1) < 0 || surface_.expected_dim(c2) < 0)
                continue;
            Rational v1 = invariant(c1);
            if (v1.is_zero())
                continue;
            Rational v2 = invariant(c2);
            if (v2.is_zero())
                continue;
            long dot = 0;
            for (size_t k = 0; k < p1.size(); ++k) dot += static_cast<long>(p1[k]) * p2[k];
            const long bi = p1[0], ci = p2[0];
            sum += v1 * v2 * Rational(d1 * d2 - dot) *
                   Rational(d1 * d2 * bi * ci - d1 * d1 * ci * ci) *
                   Rational::binomial(n_full, surface_.expected_dim(c1));
        }
    });
    return (rhs + sum) / Rational(d * d * a);
}

Rational GWTable::relation_rm(const CurveClass& canonical) {
    const long n = surface_.expected_dim(canonical);
    if (n < 3)
        throw domain_error("relation (Rm) needs n >= 3 for class " + canonical.str());

    const bool quadric = surface_.kind() == SurfaceKind::QuadricP1xP1;
    // divisor pair: (h,h) on the plane, (f,c) on the quadric; g_ij = 1 both.
    auto gamma_i = [&](const std::vector<int>& beta) {
        return quadric ? static_cast<long>(beta[1]) : static_cast<long>(beta[0]);
    };
    auto gamma_j = [&](const std::vector<int>& beta) {
        return quadric ? static_cast<long>(beta[0]) : static_cast<long>(beta[0]);
    };
    // minimal-block intersection form in display coordinates
    auto beta_pair = [&](const std::vector<int>& b1, const std::vector<int>& b2) -> long {
        if (!quadric)
            return static_cast<long>(b1[0]) * b2[0];
        return static_cast<long>(b1[0]) * b2[1] + static_cast<long>(b1[1]) * b2[0];
    };

    std::vector<std::vector<int>> beta_parts;
    if (quadric) {
        for (int b1 = 0; b1 <= canonical.beta[0]; ++b1)
            for (int d1 = 0; d1 <= canonical.beta[1]; ++d1)
                beta_parts.push_back({b1, d1});
    } else {
        for (int d1 = 0; d1 <= canonical.beta[0]; ++d1)
            beta_parts.push_back({d1});
    }

    Rational total(0);
    alpha_splits(canonical.alpha, [&](const std::vector<int>& p1, const std::vector<int>& p2) {
        for (const auto& b1 : beta_parts) {
            std::vector<int> b2(b1.size());
            bool zero1 = true, zero2 = true;
            for (size_t k = 0; k < b1.size(); ++k) {
                b2[k] = canonical.beta[k] - b1[k];
                zero1 = zero1 && b1[k] == 0;
                zero2 = zero2 && b2[k] == 0;
            }
            if (zero1 || zero2)
                continue; // both degree components strictly positive
            CurveClass c1{b1, p1}, c2{b2, p2};
            const long n1 = surface_.expected_dim(c1), n2 = surface_.expected_dim(c2);
            if (n1 < 0 || n2 < 0)
                continue;
            Rational v1 = invariant(c1);
            if (v1.is_zero())
                continue;
            Rational v2 = invariant(c2);
            if (v2.is_zero())
                continue;
            long dot = 0;
            for (size_t k = 0; k < p1.size(); ++k) dot += static_cast<long>(p1[k]) * p2[k];
            Rational pairing = Rational(beta_pair(b1, b2) - dot);
            Rational bracket = Rational(gamma_i(b1) * gamma_j(b2)) * Rational::binomial(n - 3, n1 - 1) -
                               Rational(gamma_i(b1) * gamma_j(b1)) * Rational::binomial(n - 3, n1);
            total += v1 * v2 * pairing * bracket;
        }
    });
    return total;
}

Rational GWTable::invariant_via_rm(const CurveClass& c) {
    if (!is_plane_family(surface_.kind()))
        throw unsupported_error("invariant_via_rm: only on the plane or quadric family");
    CurveClass canonical = normalize_class(c);
    return relation_rm(canonical);
}

std::vector<std::pair<CurveClass, long>> GWTable::enumerate_classes(int cap) const {
    if (cap < 1)
        throw domain_error("enumerate_classes: cap must be >= 1");
    const int r = surface_.r();
    std::vector<std::pair<CurveClass, long>> out;

    auto add_seed = [&]() {
        if (r >= 1) {
            CurveClass seed{std::vector<int>(surface_.m(), 0), {-1}};
            out.emplace_back(seed, r);
        }
    };

    // descending alpha tuples with entries in [1..maxval], length <= r
    auto descending_alphas = [&](int maxval, const std::function<void(const std::vector<int>&)>& sink) {
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int lo) {
            sink(cur);
            if (static_cast<int>(cur.size()) == r)
                return;
            for (int v = std::min(maxval, lo); v >= 1; --v) {
                cur.push_back(v);
                rec(v);
                cur.pop_back();
            }
        };
        rec(maxval);
    };

    switch (surface_.kind()) {
    case SurfaceKind::ProjectivePlane: {
        add_seed();
        for (int d = 1; d <= cap; ++d) {
            descending_alphas(d, [&](const std::vector<int>& alpha) {
                CurveClass c{{d}, alpha};
                if (surface_.expected_dim(c) >= 0)
                    out.emplace_back(c, orbit_size(alpha, r));
            });
        }
        break;
    }
    case SurfaceKind::QuadricP1xP1: {
        add_seed();
        for (int b = 0; b <= cap; ++b) {
            for (int d = 0; b + d <= cap; ++d) {
                if (b == 0 && d == 0)
                    continue;
                descending_alphas(std::max(b, d), [&](const std::vector<int>& alpha) {
                    CurveClass c{{b, d}, alpha};
                    if (surface_.expected_dim(c) >= 0)
                        out.emplace_back(c, orbit_size(alpha, r));
                });
            }
        }
        break;
    }
    case SurfaceKind::Ruled: {
        add_seed();
        out.emplace_back(CurveClass{{1, 0}, {}}, 1);
        if (r >= 1) {
            out.emplace_back(CurveClass{{1, 0}, {1}}, r);
            if (cap >= 2)
                out.emplace_back(CurveClass{{2, 0}, {2}}, r);
        }
        break;
    }
    case SurfaceKind::NefAnticanonical:
        add_seed();
        break;
    }
    return out;
}

const std::vector<SupportTerm>& GWTable::support_classes(int cap) {
    auto hit = support_cache_.find(cap);
    if (hit != support_cache_.end())
        return hit->second;
    std::vector<std::pair<CurveClass, long>> reps = enumerate_classes(cap);
    const int r = surface_.r();
    std::vector<SupportTerm> out;
    for (auto& [rep, mult] : reps) {
        (void)mult;
        Rational value = invariant(rep);
        if (value.is_zero())
            continue;
        std::vector<int> padded = rep.alpha;
        padded.resize(r, 0);
        std::sort(padded.begin(), padded.end());
        // walk the distinct permutations of the padded multiset
        do {
            out.push_back(SupportTerm{CurveClass{rep.beta, padded}, value});
        } while (std::next_permutation(padded.begin(), padded.end()));
    }
    return support_cache_.emplace(cap, std::move(out)).first->second;
}

void GWTable::save_cache(const std::string& path) const {
    std::ofstream outf(path, std::ios::trunc);
    if (!outf)
        throw domain_error("save_cache: cannot open '" + path + "' for writing");
    nlohmann::ordered_json header;
    header["surface"] = surface_.full_descriptor();
    header["D"] = degree_cap_;
    header["format"] = 1;
    outf << header.dump() << "\n";
    for (const auto& [cls, value] : memo_) {
        nlohmann::ordered_json rec;
        rec["class"]["beta"] = cls.beta;
        rec["class"]["alpha"] = cls.alpha;
        rec["value"] = value.str();
        outf << rec.dump() << "\n";
    }
}

GWTable GWTable::load_cache(const std::string& path, const SurfaceModel& expected) {
    std::ifstream in(path);
    if (!in)
        throw cache_invalid_error("load_cache: cannot open '" + path + "'");
    std::string line;
    long lineno = 0;

    auto parse_line = [&](const std::string& text) {
        try {
            return nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw cache_invalid_error("load_cache: corrupted line " + std::to_string(lineno) +
                                      " in '" + path + "': " + e.what());
        }
    };

    if (!std::getline(in, line))
        throw cache_invalid_error("load_cache: empty cache file '" + path + "'");
    ++lineno;
    nlohmann::json header = parse_line(line);
    if (!header.contains("format") || header["format"] != 1)
        throw cache_invalid_error("load_cache: unsupported cache format in '" + path + "'");
    if (!header.contains("surface") || header["surface"] != expected.full_descriptor())
        throw cache_invalid_error("load_cache: cache surface '" +
                                  header.value("surface", std::string("?")) +
                                  "' does not match requested '" + expected.full_descriptor() + "'");
    GWTable table(expected, header.value("D", 1));
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        nlohmann::json rec = parse_line(line);
        try {
            CurveClass cls;
            cls.beta = rec.at("class").at("beta").get<std::vector<int>>();
            cls.alpha = rec.at("class").at("alpha").get<std::vector<int>>();
            Rational value = Rational::from_string(rec.at("value").get<std::string>());
            table.memo_[cls] = value;
        } catch (const cache_invalid_error&) {
            throw;
        } catch (const std::exception& e) {
            throw cache_invalid_error("load_cache: corrupted line " + std::to_string(lineno) +
                                      " in '" + path + "': " + e.what());
        }
    }
    return table;
}

} // namespace qspec
