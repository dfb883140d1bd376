#include "betti/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "betti/errors.hpp"
#include "betti/logspace.hpp"
#include "betti/rng.hpp"

namespace betti {

WeightFunction WeightFunction::constant(const Rat& value) {
    WeightFunction h;
    h.kind_ = Kind::constant;
    h.constant_value_ = value;
    if (value < 0 || value > 1) throw parameter_error("constant weight must lie in [0,1]");
    return h;
}

WeightFunction WeightFunction::sin2(double shift) {
    WeightFunction h;
    h.kind_ = Kind::sin2;
    h.shift_ = shift;
    h.validate_range();
    return h;
}

WeightFunction WeightFunction::table(std::vector<std::pair<double, double>> nodes) {
    WeightFunction h;
    h.kind_ = Kind::table;
    h.nodes_ = std::move(nodes);
    if (h.nodes_.size() < 2) throw parameter_error("tabulated weight needs at least two nodes");
    if (h.nodes_.front().first != 0.0 || h.nodes_.back().first != 1.0)
        throw parameter_error("tabulated weight must cover t = 0 to t = 1");
    for (std::size_t i = 0; i < h.nodes_.size(); ++i) {
        if (i > 0 && h.nodes_[i].first <= h.nodes_[i - 1].first)
            throw parameter_error("tabulated weight nodes must strictly increase in t");
        if (h.nodes_[i].second < 0.0 || h.nodes_[i].second > 1.0)
            throw parameter_error("tabulated weight values must lie in [0,1]");
    }
    return h;
}

WeightFunction WeightFunction::table_from_csv(const std::string& text) {
    std::vector<std::pair<double, double>> nodes;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parameter_error("weight CSV rows must be 't,h': '" + line + "'");
        try {
            nodes.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw parameter_error("malformed weight CSV row: '" + line + "'");
        }
    }
    return table(std::move(nodes));
}

double WeightFunction::operator()(double t) const {
    switch (kind_) {
        case Kind::constant:
            return to_double(constant_value_);
        case Kind::sin2: {
            const double s = std::sin(two_pi * (t - shift_));
            return s * s;
        }
        case Kind::table: {
            if (t <= nodes_.front().first) return nodes_.front().second;
            if (t >= nodes_.back().first) return nodes_.back().second;
            auto upper = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                                          [](double v, const auto& node) { return v < node.first; });
            const auto& [t1, h1] = *upper;
            const auto& [t0, h0] = *(upper - 1);
            return h0 + (h1 - h0) * (t - t0) / (t1 - t0);
        }
    }
    return 0.0;
}

const Rat& WeightFunction::exact_value() const {
    if (!is_exact()) throw mode_error("weight is not an exact constant");
    return constant_value_;
}

double WeightFunction::grid_max(double from, double to, int grid) const {
    double best = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double t = from + (to - from) * i / grid;
        best = std::max(best, (*this)(t));
    }
    return best;
}

void WeightFunction::validate_range() const {
    for (int i = 0; i <= 10'000; ++i) {
        const double v = (*this)(i / 10'000.0);
        if (v < 0.0 || v > 1.0)
            throw parameter_error("weight leaves [0,1] at t=" + std::to_string(i / 10'000.0));
    }
}

std::string WeightFunction::describe() const {
    switch (kind_) {
        case Kind::constant:
            return "const:" + fraction_string(constant_value_);
        case Kind::sin2:
            return "sin2:" + std::to_string(shift_);
        case Kind::table:
            return "table[" + std::to_string(nodes_.size()) + " nodes]";
    }
    return "";
}

CoefficientVector weighted_sample(int r, const WeightFunction& h, std::uint64_t seed) {
    validate_table_shape(r, 2);
    CoefficientVector out;
    out.r = r;
    out.n = 2;
    out.seed = seed;
    out.values.reserve(static_cast<std::size_t>(r));
    SplitMix64 stream(seed);
    for (int i = 1; i <= r; ++i)
        out.values.push_back(h(static_cast<double>(i) / r) * stream.next_unit());
    return out;
}

namespace {

double simpson(const WeightFunction& h, double c, double lo, double hi, int panels) {
    const double step = (hi - lo) / panels;
    auto f = [&](double t) { return h(t) * (t - c); };
    double sum = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) sum += f(lo + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * step / 3.0;
}

}  // namespace

double weighted_mean_integral(int r, int p, const WeightFunction& h) {
    if (p + 1 >= r)
        throw parameter_error("H(r,p) needs p+1 < r, got p=" + std::to_string(p) +
                              ", r=" + std::to_string(r));
    const double c = static_cast<double>(p + 1) / r;
    double coarse = simpson(h, c, c, 1.0, 64);
    for (int panels = 128; panels <= (1 << 22); panels *= 2) {
        const double fine = simpson(h, c, c, 1.0, panels);
        const double richardson = fine + (fine - coarse) / 15.0;
        if (std::abs(fine - coarse) <= 1e-10 * std::max(std::abs(fine), 1e-300))
            return richardson / (2.0 * (1.0 - c));
        coarse = fine;
    }
    return coarse / (2.0 * (1.0 - c));
}

double weighted_expected_linear_entry(int r, int p, const WeightFunction& h) {
    validate_table_shape(r, 2);
    if (p < 0 || p > r - 2) throw parameter_error("q=1 entry needs 0 <= p <= r-2");
    double sum = 0.0;
    for (int i = p + 2; i <= r; ++i) sum += h(static_cast<double>(i) / r) * (i - p - 1);
    if (sum == 0.0) return 0.0;
    return std::exp(log_binomial(r - 2, p) + std::log(sum / (2.0 * (r - p - 1))));
}

Rat weighted_expected_linear_entry_exact(int r, int p, const WeightFunction& h) {
    validate_table_shape(r, 2);
    if (p < 0 || p > r - 2) throw parameter_error("q=1 entry needs 0 <= p <= r-2");
    const Rat& value = h.exact_value();
    Int sum = 0;
    for (int i = p + 2; i <= r; ++i) sum += (i - p - 1);
    return Rat(binomial(r - 2, p)) * value * Rat(sum, 2 * (r - p - 1));
}

double weighted_expected_second_entry(int r, int p, const WeightFunction& h) {
    validate_table_shape(r, 2);
    if (p < 0 || p > r - 2) throw parameter_error("q=2 entry needs 0 <= p <= r-2");
    double sum = 0.0;
    for (int i = 1; i <= p + 1; ++i) sum += h(static_cast<double>(i) / r) * (p + 2 - i);
    if (sum == 0.0) return 0.0;
    return std::exp(log_binomial(r - 2, p) + std::log(sum / (2.0 * (p + 1))));
}

Rat weighted_expected_second_entry_exact(int r, int p, const WeightFunction& h) {
    validate_table_shape(r, 2);
    if (p < 0 || p > r - 2) throw parameter_error("q=2 entry needs 0 <= p <= r-2");
    const Rat& value = h.exact_value();
    Int sum = 0;
    for (int i = 1; i <= p + 1; ++i) sum += (p + 2 - i);
    return Rat(binomial(r - 2, p)) * value * Rat(sum, 2 * (p + 1));
}

ExperimentReport weighted_gaussian_experiment(const WeightFunction& h,
                                              const std::vector<int>& r_values, double a,
                                              std::uint64_t seed, long long samples,
                                              double tolerance) {
    if (r_values.empty()) throw parameter_error("weighted experiment needs r values");
    if (samples < 1) throw parameter_error("weighted experiment needs N >= 1");
    if (h.grid_max(0.5, 1.0) <= 0.0)
        throw hypothesis_error(
            "weight vanishes identically on [1/2, 1]; the q=1 Gaussian limit does not apply");

    ExperimentReport report;
    report.name = "weighted_gaussian_profile";
    report.a = a;
    report.n = 2;
    report.q = 1;
    report.tolerance = tolerance;
    report.source =
        "sampled(seed=" + std::to_string(seed) + ",N=" + std::to_string(samples) + ")";
    const double target = std::exp(-a * a / 2.0);

    for (const int r : r_values) {
        validate_table_shape(r, 2);
        const int p = gaussian_column(r, a);
        if (p > r - 2) throw parameter_error("gaussian column exceeds r-2");
        const double mean_scale = r * weighted_mean_integral(r, r / 2, h);
        if (mean_scale <= 0.0)
            throw hypothesis_error("H(r, r/2) vanishes at r=" + std::to_string(r) +
                                   "; normalizer undefined");
        // F_1(r) * k = exp(log F_1 + log C(r-2,p)) * sum_i c_i (i-p-1)_+/(r-p-1)
        const double log_scale = 0.5 * std::log(two_pi * static_cast<double>(r)) -
                                 static_cast<double>(r - 1) * std::log(2.0) -
                                 std::log(mean_scale) + log_binomial(r - 2, p);
        const double scale = std::exp(log_scale);
        double sum = 0.0;
        for (long long s = 0; s < samples; ++s) {
            SplitMix64 stream(substream_seed(seed, static_cast<std::uint64_t>(s)));
            double entry = 0.0;
            for (int i = 1; i <= r; ++i) {
                const double c = h(static_cast<double>(i) / r) * stream.next_unit();
                if (i >= p + 2) entry += c * (i - p - 1);
            }
            sum += scale * entry / (r - p - 1);
        }
        ExperimentPoint point;
        point.r = r;
        point.p = p;
        point.value = sum / static_cast<double>(samples);
        point.target = target;
        point.abs_error = std::abs(point.value - target);
        report.points.push_back(point);
    }
    report.passed = report.points.back().abs_error <= tolerance;
    return report;
}

}  // namespace betti
