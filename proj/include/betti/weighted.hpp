#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betti/asymptotics.hpp"
#include "betti/numeric.hpp"
#include "betti/sampling.hpp"

namespace betti {

// Weight h : [0,1] -> [0,1] rescaling each coefficient's sampling interval.
// Presets: constant c, sin2(shift) = sin^2(2 pi (t - shift)), and a tabulated
// function with linear interpolation between strictly increasing nodes.
class WeightFunction {
public:
    static WeightFunction constant(const Rat& value);
    static WeightFunction sin2(double shift);
    static WeightFunction table(std::vector<std::pair<double, double>> nodes);
    // Two-column CSV t,h(t); t strictly increasing from 0 to 1.
    static WeightFunction table_from_csv(const std::string& text);

    double operator()(double t) const;

    // Constant presets carry an exact rational value.
    bool is_exact() const { return kind_ == Kind::constant; }
    const Rat& exact_value() const;

    // True when h is one of the smooth presets (constant or sin2).
    bool is_smooth_preset() const { return kind_ != Kind::table; }

    // Largest value on a grid of the given half of [0,1]; used for the
    // nonvanishing hypothesis of the Gaussian limit.
    double grid_max(double from, double to, int grid = 10'000) const;

    std::string describe() const;

private:
    enum class Kind { constant, sin2, table };
    Kind kind_ = Kind::constant;
    Rat constant_value_ = Rat(1);
    double shift_ = 0.0;
    std::vector<std::pair<double, double>> nodes_;

    void validate_range() const;
};

// n=2 weighted sample: coefficient i (1 <= i <= r) uniform on [0, h(i/r)].
CoefficientVector weighted_sample(int r, const WeightFunction& h, std::uint64_t seed);

// H(r,p) = Integral_{(p+1)/r}^{1} h(t) (t - (p+1)/r) dt / (2 (1 - (p+1)/r)),
// by adaptive composite Simpson refined to 1e-10 relative.
double weighted_mean_integral(int r, int p, const WeightFunction& h);

// e_{p,1}(B^h_r) = C(r-2,p) * sum_{i=p+2}^{r} h(i/r) (i-p-1) / (2 (r-p-1)),
// binomial taken in log space so any r is fine.
double weighted_expected_linear_entry(int r, int p, const WeightFunction& h);

// Same sum with exact arithmetic; requires an exact (constant) weight.
Rat weighted_expected_linear_entry_exact(int r, int p, const WeightFunction& h);

// Mirrored q=2 row: e_{p,2}(B^h_r) = C(r-2,p) sum_{i=1}^{p+1} h(i/r)(p+2-i) / (2(p+1)).
double weighted_expected_second_entry(int r, int p, const WeightFunction& h);
Rat weighted_expected_second_entry_exact(int r, int p, const WeightFunction& h);

// Weighted Gaussian-limit experiment for the q=1 row. Normalizer
//   F_1(r) = sqrt(2 pi r) / (2^{r-1} r H(r, floor(r/2)))
// (the proof-derived choice: the Stirling central-binomial factor times the
// Riemann-limit mean scale). Refuses with a hypothesis violation when h
// vanishes identically on [1/2, 1].
ExperimentReport weighted_gaussian_experiment(const WeightFunction& h,
                                              const std::vector<int>& r_values, double a,
                                              std::uint64_t seed, long long samples,
                                              double tolerance = 0.05);

}  // namespace betti
