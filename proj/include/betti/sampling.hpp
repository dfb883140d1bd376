#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/index_set.hpp"
#include "betti/numeric.hpp"

namespace betti {

// A point of the coefficient cube [0,1]^C(r,n-1): one value per (n-1)-subset
// of [1,r], stored in lexicographic subset order.
struct CoefficientVector {
    int r = 0;
    int n = 0;
    std::optional<std::uint64_t> seed;  // recorded when the vector was sampled
    std::vector<double> values;
};

struct DeviationEstimate {
    int r = 0, n = 0, p = 0, q = 0;
    double epsilon = 0.0;
    long long samples = 0;
    std::uint64_t master_seed = 0;
    double hit_fraction = 0.0;    // fraction of samples with |ratio - 1| > epsilon
    double standard_error = 0.0;  // sqrt(h(1-h)/N)
    double analytic_ratio_std = 0.0;

    std::string to_json() const;
};

// One i.i.d. uniform [0,1) coefficient per index set, drawn from a SplitMix64
// stream seeded with rng_seed, in lexicographic subset order.
CoefficientVector sample_uniform(int r, int n, std::uint64_t rng_seed,
                                 std::optional<long long> cap = std::nullopt);

// Default r beyond which table entries switch from exact rationals to
// log-gamma floats.
inline constexpr int kDefaultExactCutoff = 40;

// k_{p,q}(x) = sum_I x_I k_{p,q}(pi(r,I)). For r <= exact_cutoff every term is
// accumulated as an exact rational (doubles embed exactly) and converted at
// the end; beyond the cutoff entries are evaluated via log-gamma and
// accumulated in doubles in lexicographic order.
BettiTable table_from_coefficients(const CoefficientVector& coeffs,
                                   int exact_cutoff = kDefaultExactCutoff,
                                   std::optional<long long> cap = std::nullopt);

// Exact-rational coefficient variant (exact-mode result). Used wherever exact
// linearity matters: decomposition round trips, oracle enumerations.
BettiTable table_from_exact_coefficients(int r, int n, const std::vector<Rat>& coefficients,
                                         std::optional<long long> cap = std::nullopt);

// Exact expected entry of the random table:
//   e_{p,q} = C(r-n,p) * 1/2 * [S_{q-1}(p+q-1) / ((p+q-1)...(p+1))]
//                           * [S_{n-q}(r-p-q) / ((r-p-q)...(r-p-n+1))]
// with S_b the elementary symmetric sums; no subset enumeration.
Rat expected_entry(int r, int n, int p, int q);

BettiTable expected_table(int r, int n);

// mu(r,p) = 2^-n p^{q-1} (r-p-n)^{n-q} / ((q-1)!(n-q)!), the polynomial factor
// of the asymptotic mean C(r-n,p) * mu.
Rat asymptotic_mean_factor(int r, int p, int q, int n);

// e_{p,q} / (C(r-n,p) * mu), computed with the binomial cancelled so it stays
// exact and cheap at any r.
Rat expected_ratio(int r, int n, int p, int q);

// k_{p,q}(x) / (C(r-n,p) * mu). The binomial cancels against the entry's own
// C(r-n,p) factor, so the evaluation is stable at any r.
double normalized_entry(const CoefficientVector& coeffs, int p, int q);

// Exact standard deviation of normalized_entry under uniform sampling:
// sqrt(sum_I c_I^2 / 12) / mu, where c_I is the coefficient of X_I in the
// entry divided by C(r-n,p). The subset sum factorizes into elementary
// symmetric sums of squares, so no enumeration is needed.
double analytic_ratio_std(int r, int n, int p, int q);

DeviationEstimate estimate_deviation_probability(int r, int n, int p, int q, double epsilon,
                                                 long long samples, std::uint64_t master_seed,
                                                 int threads = 1,
                                                 std::optional<long long> cap = std::nullopt);

// Entrywise mean of `samples` random tables; per-sample substreams are
// derived from the master seed, so results are reproducible and (for a fixed
// thread count) bit-identical.
BettiTable mean_table(int r, int n, long long samples, std::uint64_t master_seed, int threads = 1,
                      int exact_cutoff = kDefaultExactCutoff,
                      std::optional<long long> cap = std::nullopt);

}  // namespace betti
