#ifndef QSPEC_TESTS_WDVV_ORACLE_HPP
#define QSPEC_TESTS_WDVV_ORACLE_HPP

// Brute-force evaluator of the WDVV recursions for blow-ups of the
// projective plane, kept deliberately independent of the library engine:
// raw GMP rationals, its own normalization, its own decomposition
// enumeration. Used as the oracle the engine is tested against.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace wdvv_oracle {

using Key = std::pair<long, std::vector<int>>;

inline long binom_l(long n, long k, mpz_class* out) {
    if (k < 0 || n < 0 || k > n) {
        *out = 0;
        return 0;
    }
    mpz_bin_uiui(out->get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return 1;
}

class PlaneOracle {
  public:
    // N_{d, alpha} on a blow-up of the plane; alpha in any order.
    mpq_class invariant(long d, std::vector<int> alpha) {
        alpha.erase(std::remove(alpha.begin(), alpha.end(), 0), alpha.end());
        std::sort(alpha.begin(), alpha.end(), std::greater<int>());
        return eval(d, alpha);
    }

  private:
    static long expdim(long d, const std::vector<int>& a) {
        long s = 0;
        for (int x : a) s += x;
        return 3 * d - s - 1;
    }

    mpq_class eval(long d, const std::vector<int>& alpha) {
        if (d < 0)
            return 0;
        if (d == 0)
            return (alpha.size() == 1 && alpha[0] == -1) ? 1 : 0;
        for (int a : alpha)
            if (a < 0)
                return 0;
        if (expdim(d, alpha) < 0)
            return 0;
        Key key{d, alpha};
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        mpq_class value;
        if (d == 1 && alpha.empty()) {
            value = 1; // one line through two points
        } else if (!alpha.empty() && alpha.back() == 1) {
            // stability: N_{d,(alpha',1)} = N_{d,alpha'} when n_{d,alpha'} > 0
            std::vector<int> peeled(alpha.begin(), alpha.end() - 1);
            value = expdim(d, peeled) > 0 ? eval(d, peeled) : mpq_class(0);
        } else if (!alpha.empty()) {
            value = relation_ri(d, alpha);
        } else {
            value = relation_rm(d, alpha);
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

    // Componentwise splits beta + gamma = alpha with nonnegative parts.
    static void splits(const std::vector<int>& alpha, size_t pos, std::vector<int>& beta,
                       std::vector<int>& gamma, std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
        if (pos == alpha.size()) {
            out.emplace_back(beta, gamma);
            return;
        }
        for (int b = 0; b <= alpha[pos]; ++b) {
            beta.push_back(b);
            gamma.push_back(alpha[pos] - b);
            splits(alpha, pos + 1, beta, gamma, out);
            beta.pop_back();
            gamma.pop_back();
        }
    }

    mpq_class relation_rm(long d, const std::vector<int>& alpha) {
        // valid for n >= 3 with the pair (h, h), g_hh = 1
        const long n = expdim(d, alpha);
        mpq_class total = 0;
        std::vector<std::pair<std::vector<int>, std::vector<int>>> parts;
        std::vector<int> b, g;
        splits(alpha, 0, b, g, parts);
        for (long d1 = 1; d1 <= d - 1; ++d1) {
            const long d2 = d - d1;
            for (const auto& [beta, gamma] : parts) {
                const long n1 = expdim(d1, beta), n2 = expdim(d2, gamma);
                if (n1 < 0 || n2 < 0)
                    continue;
                std::vector<int> bn = beta, gn = gamma;
                bn.erase(std::remove(bn.begin(), bn.end(), 0), bn.end());
                std::sort(bn.begin(), bn.end(), std::greater<int>());
                gn.erase(std::remove(gn.begin(), gn.end(), 0), gn.end());
                std::sort(gn.begin(), gn.end(), std::greater<int>());
                mpq_class n1v = eval(d1, bn);
                if (n1v == 0)
                    continue;
                mpq_class n2v = eval(d2, gn);
                if (n2v == 0)
                    continue;
                long dotaa = 0;
                for (size_t k = 0; k < beta.size(); ++k) dotaa += long(beta[k]) * gamma[k];
                mpz_class c1, c2;
                binom_l(n - 3, n1 - 1, &c1);
                binom_l(n - 3, n1, &c2);
                mpq_class bracket = mpq_class(d1 * d2) * mpq_class(c1) -
                                    mpq_class(d1 * d1) * mpq_class(c2);
                total += n1v * n2v * mpq_class(d1 * d2 - dotaa) * bracket;
            }
        }
        return total;
    }

    mpq_class relation_ri(long d, const std::vector<int>& alpha) {
        // R(i) on the largest multiplicity (slot 0 after descending sort)
        const long a = alpha[0];
        std::vector<int> lowered = alpha;
        lowered[0] -= 1;
        std::vector<int> low_norm = lowered;
        low_norm.erase(std::remove(low_norm.begin(), low_norm.end(), 0), low_norm.end());
        std::sort(low_norm.begin(), low_norm.end(), std::greater<int>());

        const long n_full = expdim(d, alpha);
        mpq_class rhs = mpq_class(d * d - (a - 1) * (a - 1)) * eval(d, low_norm);

        std::vector<std::pair<std::vector<int>, std::vector<int>>> parts;
        std::vector<int> b, g;
        splits(lowered, 0, b, g, parts);
        for (long d1 = 1; d1 <= d - 1; ++d1) {
            const long d2 = d - d1;
            for (const auto& [beta, gamma] : parts) {
                const long n1 = expdim(d1, beta), n2 = expdim(d2, gamma);
                if (n1 < 0 || n2 < 0)
                    continue;
                std::vector<int> bn = beta, gn = gamma;
                bn.erase(std::remove(bn.begin(), bn.end(), 0), bn.end());
                std::sort(bn.begin(), bn.end(), std::greater<int>());
                gn.erase(std::remove(gn.begin(), gn.end(), 0), gn.end());
                std::sort(gn.begin(), gn.end(), std::greater<int>());
                mpq_class v1 = eval(d1, bn);
                if (v1 == 0)
                    continue;
                mpq_class v2 = eval(d2, gn);
                if (v2 == 0)
                    continue;
                long dotaa = 0;
                for (size_t k = 0; k < beta.size(); ++k) dotaa += long(beta[k]) * gamma[k];
                const long bi = beta[0], ci = gamma[0];
                mpz_class cb;
                binom_l(n_full, n1, &cb);
                rhs += v1 * v2 * mpq_class(d1 * d2 - dotaa) *
                       mpq_class(d1 * d2 * bi * ci - d1 * d1 * ci * ci) * mpq_class(cb);
            }
        }
        return rhs / mpq_class(d * d * a);
    }

    std::map<Key, mpq_class> memo_;
};

} // namespace wdvv_oracle

#endif
