#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace betti {

// Column sequence tracking r/2 + a*sqrt(r)/2 together with the rows to test.
struct GaussianSequenceSpec {
    double a = 0.0;
    std::vector<int> r_values;  // increasing
    int n = 2;
    int q = 1;
};

// Where gaussian_experiment takes its entries from: the exact expected table,
// or the mean of `samples` random tables per r.
struct ExperimentSource {
    enum class Kind { expected, sampled } kind = Kind::expected;
    std::uint64_t seed = 0;
    long long samples = 1;

    static ExperimentSource expected() { return {}; }
    static ExperimentSource sampled(std::uint64_t seed, long long samples) {
        return {Kind::sampled, seed, samples};
    }
};

struct ExperimentPoint {
    int r = 0;
    int p = 0;
    double value = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
};

struct ExperimentReport {
    std::string name;
    double a = 0.0;
    int n = 2;
    int q = 1;
    std::string source;  // "expected" or "sampled(seed,N)"
    double tolerance = 0.0;
    std::vector<ExperimentPoint> points;
    bool passed = false;  // final point within tolerance (absolute distance)

    std::string to_json() const;
};

// round(r/2 + a*sqrt(r)/2), ties away from zero.
int gaussian_column(int r, double a);

// ((q-1)! (n-q)! sqrt(2 pi r)) / (2^{r+2-3n} r^{n-1}); log-space inside.
double log_stirling_normalizer(int r, int n, int q);
double stirling_normalizer(int r, int n, int q);

// sqrt(2 pi r)/2^{r+1} * C(r,p), via log-gamma.
double binomial_gaussian_ratio(long long r, long long p);

// For each r in the spec: value = F(r) * k_{p_r,q}, with k from the expected
// table or averaged over sampled tables, against the target exp(-a^2/2).
ExperimentReport gaussian_experiment(const GaussianSequenceSpec& spec,
                                     const ExperimentSource& source, double tolerance = 0.05,
                                     std::optional<long long> cap = std::nullopt);

}  // namespace betti
