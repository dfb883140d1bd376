#include "betti/asymptotics.hpp"

#include <cmath>

#include <json.hpp>

#include "betti/errors.hpp"
#include "betti/index_set.hpp"
#include "betti/logspace.hpp"
#include "betti/rng.hpp"
#include "betti/sampling.hpp"

namespace betti {

int gaussian_column(int r, double a) {
    if (r < 1) throw parameter_error("gaussian_column needs r >= 1");
    const double x = r / 2.0 + a * std::sqrt(static_cast<double>(r)) / 2.0;
    const double rounded = std::round(x);  // ties away from zero
    if (rounded < 0.0 || rounded > static_cast<double>(r))
        throw parameter_error("gaussian column " + std::to_string(rounded) +
                              " falls outside [0, r] for r=" + std::to_string(r) +
                              ", a=" + std::to_string(a));
    return static_cast<int>(rounded);
}

double log_stirling_normalizer(int r, int n, int q) {
    if (n < 2 || q < 1 || q > n) throw parameter_error("normalizer needs n >= 2, 1 <= q <= n");
    return log_factorial(q - 1) + log_factorial(n - q) +
           0.5 * std::log(two_pi * static_cast<double>(r)) -
           static_cast<double>(r + 2 - 3 * n) * std::log(2.0) -
           static_cast<double>(n - 1) * std::log(static_cast<double>(r));
}

double stirling_normalizer(int r, int n, int q) { return std::exp(log_stirling_normalizer(r, n, q)); }

double binomial_gaussian_ratio(long long r, long long p) {
    if (p < 0 || p > r) throw parameter_error("binomial_gaussian_ratio needs 0 <= p <= r");
    const double log_value = 0.5 * std::log(two_pi * static_cast<double>(r)) -
                             static_cast<double>(r + 1) * std::log(2.0) + log_binomial(r, p);
    return std::exp(log_value);
}

ExperimentReport gaussian_experiment(const GaussianSequenceSpec& spec,
                                     const ExperimentSource& source, double tolerance,
                                     std::optional<long long> cap) {
    if (spec.r_values.empty()) throw parameter_error("gaussian experiment needs r values");
    ExperimentReport report;
    report.name = "gaussian_profile";
    report.a = spec.a;
    report.n = spec.n;
    report.q = spec.q;
    report.tolerance = tolerance;
    report.source = source.kind == ExperimentSource::Kind::expected
                        ? "expected"
                        : "sampled(seed=" + std::to_string(source.seed) +
                              ",N=" + std::to_string(source.samples) + ")";
    const double target = std::exp(-spec.a * spec.a / 2.0);

    for (const int r : spec.r_values) {
        validate_table_shape(r, spec.n);
        const int p = gaussian_column(r, spec.a);
        if (p > r - spec.n)
            throw parameter_error("gaussian column p=" + std::to_string(p) +
                                  " exceeds r-n for r=" + std::to_string(r));
        const Rat mu = asymptotic_mean_factor(r, p, spec.q, spec.n);
        if (mu == 0) throw parameter_error("gaussian experiment hit mu = 0");
        // F(r) * k = exp(log F + log C(r-n,p) + log mu) * (k / (C(r-n,p) mu)):
        // the middle factors are astronomically large/small, the bracket is O(1).
        const double log_scale = log_stirling_normalizer(r, spec.n, spec.q) +
                                 log_binomial(r - spec.n, p) + std::log(to_double(mu));
        double bracket = 0.0;
        if (source.kind == ExperimentSource::Kind::expected) {
            bracket = to_double(expected_ratio(r, spec.n, p, spec.q));
        } else {
            if (source.samples < 1) throw parameter_error("sampled source needs N >= 1");
            double sum = 0.0;
            for (long long s = 0; s < source.samples; ++s) {
                const CoefficientVector x = sample_uniform(
                    r, spec.n, substream_seed(source.seed, static_cast<std::uint64_t>(s)), cap);
                sum += normalized_entry(x, p, spec.q);
            }
            bracket = sum / static_cast<double>(source.samples);
        }
        ExperimentPoint point;
        point.r = r;
        point.p = p;
        point.value = std::exp(log_scale) * bracket;
        point.target = target;
        point.abs_error = std::abs(point.value - target);
        report.points.push_back(point);
    }
    report.passed = report.points.back().abs_error <= tolerance;
    return report;
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["spec"] = {{"name", name}, {"a", a}, {"n", n}, {"q", q}, {"source", source},
                   {"tolerance", tolerance}};
    auto& per_r = doc["per_r"] = nlohmann::ordered_json::array();
    for (const auto& point : points)
        per_r.push_back({{"r", point.r},
                         {"p_r", point.p},
                         {"value", point.value},
                         {"target", point.target},
                         {"abs_error", point.abs_error}});
    doc["passed"] = passed;
    return doc.dump(2);
}

}  // namespace betti
