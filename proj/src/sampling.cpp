#include "betti/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <json.hpp>

#include "betti/errors.hpp"
#include "betti/logspace.hpp"
#include "betti/pure_diagram.hpp"
#include "betti/rng.hpp"

namespace betti {

namespace {

void validate_entry_position(int r, int n, int p, int q) {
    validate_table_shape(r, n);
    if (p < 0 || p > r - n || q < 1 || q > n)
        throw parameter_error("entry position (p=" + std::to_string(p) +
                              ", q=" + std::to_string(q) + ") out of range for r=" +
                              std::to_string(r) + ", n=" + std::to_string(n));
}

// Denominator (p+q-1)...(p+1) * (r-p-q)...(r-p-n+1) common to every subset
// coefficient of entry (p,q).
Int coefficient_denominator(int r, int n, int p, int q) {
    Int den = 1;
    for (int t = p + 1; t <= p + q - 1; ++t) den *= t;
    for (int t = r - p - n + 1; t <= r - p - q; ++t) den *= t;
    return den;
}

// Coefficient of X_I in k_{p,q}(x)/C(r-n,p), as a double given 1/denominator.
double subset_coefficient(const std::vector<int>& elements, int n, int p, int q,
                          double inv_denominator) {
    double prod = 1.0;
    for (int a = 1; a <= q - 1; ++a) {
        const int factor = p + q - elements[a - 1];
        if (factor <= 0) return 0.0;
        prod *= factor;
    }
    for (int a = q; a <= n - 1; ++a) {
        const int factor = elements[a - 1] - p - q;
        if (factor <= 0) return 0.0;
        prod *= factor;
    }
    return prod * inv_denominator;
}

// Runs fn(chunk_begin, chunk_end) over [0, total) split across up to
// `threads` workers. Chunk boundaries depend only on the thread count, so a
// given thread count always reproduces the same partition.
template <typename Fn>
void run_chunked(long long total, int threads, Fn fn) {
    threads = std::max(1, threads);
    const long long chunk = (total + threads - 1) / std::max<long long>(1, threads);
    if (threads == 1 || chunk >= total) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> workers;
    int index = 0;
    for (long long begin = 0; begin < total; begin += chunk, ++index)
        workers.emplace_back(fn, index, begin, std::min(total, begin + chunk));
    for (auto& w : workers) w.join();
}

}  // namespace

CoefficientVector sample_uniform(int r, int n, std::uint64_t rng_seed,
                                 std::optional<long long> cap) {
    validate_table_shape(r, n);
    check_subset_capacity(r, n, cap);
    const long long count = index_set_count(r, n).convert_to<long long>();
    CoefficientVector out;
    out.r = r;
    out.n = n;
    out.seed = rng_seed;
    out.values.reserve(static_cast<std::size_t>(count));
    SplitMix64 stream(rng_seed);
    for (long long k = 0; k < count; ++k) out.values.push_back(stream.next_unit());
    return out;
}

BettiTable table_from_exact_coefficients(int r, int n, const std::vector<Rat>& coefficients,
                                         std::optional<long long> cap) {
    validate_table_shape(r, n);
    check_subset_capacity(r, n, cap);
    if (Int(coefficients.size()) != index_set_count(r, n))
        throw parameter_error("coefficient count " + std::to_string(coefficients.size()) +
                              " does not match C(r, n-1)");
    BettiTable acc(r, n, TableMode::exact);
    std::size_t rank = 0;
    for_each_index_set(r, n, [&](const std::vector<int>& elements) {
        const Rat& x = coefficients[rank++];
        if (x != 0) acc.add_scaled(x, pure_diagram(r, n, IndexSet(r, n, elements)).table);
    });
    return acc;
}

BettiTable table_from_coefficients(const CoefficientVector& coeffs, int exact_cutoff,
                                   std::optional<long long> cap) {
    const int r = coeffs.r;
    const int n = coeffs.n;
    validate_table_shape(r, n);
    check_subset_capacity(r, n, cap);
    if (Int(coeffs.values.size()) != index_set_count(r, n))
        throw parameter_error("coefficient vector size does not match C(r, n-1)");

    if (r <= exact_cutoff) {
        std::vector<Rat> exact(coeffs.values.size());
        for (std::size_t i = 0; i < coeffs.values.size(); ++i) exact[i] = Rat(coeffs.values[i]);
        return table_from_exact_coefficients(r, n, exact, cap).to_real();
    }

    BettiTable acc(r, n, TableMode::real);
    std::vector<double> cells(static_cast<std::size_t>(r - n + 1) * n, 0.0);
    const double log_front = log_factorial(r - n);
    std::size_t rank = 0;
    for_each_index_set(r, n, [&](const std::vector<int>& elements) {
        const double x = coeffs.values[rank++];
        const IndexSet index_set(r, n, elements);
        const DegreeSequence degrees = degree_sequence_of(index_set);
        for (int p = 0; p <= r - n; ++p) {
            const int q = degrees.degrees[p] - p;
            double log_entry = log_front - log_factorial(p + q - 1) - log_factorial(r - p - q);
            for (int a = 1; a <= q - 1; ++a)
                log_entry += std::log(static_cast<double>(p + q - elements[a - 1]));
            for (int a = q; a <= n - 1; ++a)
                log_entry += std::log(static_cast<double>(elements[a - 1] - p - q));
            cells[static_cast<std::size_t>(p) * n + (q - 1)] += x * std::exp(log_entry);
        }
    });
    for (int p = 0; p <= r - n; ++p)
        for (int q = 1; q <= n; ++q)
            acc.set(p, q, cells[static_cast<std::size_t>(p) * n + (q - 1)]);
    return acc;
}

Rat expected_entry(int r, int n, int p, int q) {
    validate_entry_position(r, n, p, q);
    const Int num = elementary_symmetric_sum(p + q - 1, q - 1) *
                    elementary_symmetric_sum(r - p - q, n - q);
    return Rat(binomial(r - n, p), 2) * Rat(num, coefficient_denominator(r, n, p, q));
}

BettiTable expected_table(int r, int n) {
    validate_table_shape(r, n);
    BettiTable out(r, n, TableMode::exact);
    for (int p = 0; p <= r - n; ++p)
        for (int q = 1; q <= n; ++q) out.set(p, q, expected_entry(r, n, p, q));
    return out;
}

Rat asymptotic_mean_factor(int r, int p, int q, int n) {
    validate_entry_position(r, n, p, q);
    const Int num = ipow(Int(p), static_cast<unsigned>(q - 1)) *
                    ipow(Int(r - p - n), static_cast<unsigned>(n - q));
    return Rat(num, ipow(Int(2), static_cast<unsigned>(n)) * factorial(q - 1) * factorial(n - q));
}

Rat expected_ratio(int r, int n, int p, int q) {
    const Rat mu = asymptotic_mean_factor(r, p, q, n);
    if (mu == 0)
        throw parameter_error("asymptotic mean factor vanishes at (p=" + std::to_string(p) +
                              ", q=" + std::to_string(q) + "); ratio undefined");
    const Int num = elementary_symmetric_sum(p + q - 1, q - 1) *
                    elementary_symmetric_sum(r - p - q, n - q);
    return Rat(num, 2 * coefficient_denominator(r, n, p, q)) / mu;
}

double normalized_entry(const CoefficientVector& coeffs, int p, int q) {
    const int r = coeffs.r;
    const int n = coeffs.n;
    validate_entry_position(r, n, p, q);
    const Rat mu = asymptotic_mean_factor(r, p, q, n);
    if (mu == 0)
        throw parameter_error("degenerate normalizer: mu(r=" + std::to_string(r) +
                              ", p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                              ") = 0");
    if (Int(coeffs.values.size()) != index_set_count(r, n))
        throw parameter_error("coefficient vector size does not match C(r, n-1)");
    const double inv_den = 1.0 / to_double(Rat(coefficient_denominator(r, n, p, q)));
    double sum = 0.0;
    std::size_t rank = 0;
    for_each_index_set(r, n, [&](const std::vector<int>& elements) {
        const double c = subset_coefficient(elements, n, p, q, inv_den);
        if (c != 0.0) sum += c * coeffs.values[rank];
        ++rank;
    });
    return sum / to_double(mu);
}

double analytic_ratio_std(int r, int n, int p, int q) {
    validate_entry_position(r, n, p, q);
    const Rat mu = asymptotic_mean_factor(r, p, q, n);
    if (mu == 0)
        throw parameter_error("degenerate normalizer: mu = 0 at (p=" + std::to_string(p) +
                              ", q=" + std::to_string(q) + ")");
    const Int den = coefficient_denominator(r, n, p, q);
    const Rat sum_sq(elementary_symmetric_square_sum(p + q - 1, q - 1) *
                         elementary_symmetric_square_sum(r - p - q, n - q),
                     den * den);
    return std::sqrt(to_double(sum_sq) / 12.0) / to_double(mu);
}

DeviationEstimate estimate_deviation_probability(int r, int n, int p, int q, double epsilon,
                                                 long long samples, std::uint64_t master_seed,
                                                 int threads, std::optional<long long> cap) {
    validate_entry_position(r, n, p, q);
    if (samples < 1) throw parameter_error("deviation estimate needs at least one sample");
    check_subset_capacity(r, n, cap);
    const Rat mu = asymptotic_mean_factor(r, p, q, n);
    if (mu == 0) throw parameter_error("degenerate normalizer: mu = 0");
    const double mu_d = to_double(mu);
    const long long count = index_set_count(r, n).convert_to<long long>();

    // Coefficients of the entry are sample-independent; precompute once.
    std::vector<double> coeff(static_cast<std::size_t>(count));
    const double inv_den = 1.0 / to_double(Rat(coefficient_denominator(r, n, p, q)));
    std::size_t rank = 0;
    for_each_index_set(r, n, [&](const std::vector<int>& elements) {
        coeff[rank++] = subset_coefficient(elements, n, p, q, inv_den);
    });

    std::vector<long long> hits_per_chunk(static_cast<std::size_t>(threads) + 1, 0);
    run_chunked(samples, threads, [&](int chunk, long long begin, long long end) {
        long long hits = 0;
        for (long long s = begin; s < end; ++s) {
            SplitMix64 stream(substream_seed(master_seed, static_cast<std::uint64_t>(s)));
            double sum = 0.0;
            for (long long k = 0; k < count; ++k) {
                const double u = stream.next_unit();
                if (coeff[static_cast<std::size_t>(k)] != 0.0)
                    sum += coeff[static_cast<std::size_t>(k)] * u;
            }
            if (std::abs(sum / mu_d - 1.0) > epsilon) ++hits;
        }
        hits_per_chunk[static_cast<std::size_t>(chunk)] = hits;
    });
    long long hits = 0;
    for (long long h : hits_per_chunk) hits += h;

    DeviationEstimate est;
    est.r = r;
    est.n = n;
    est.p = p;
    est.q = q;
    est.epsilon = epsilon;
    est.samples = samples;
    est.master_seed = master_seed;
    est.hit_fraction = static_cast<double>(hits) / static_cast<double>(samples);
    est.standard_error =
        std::sqrt(est.hit_fraction * (1.0 - est.hit_fraction) / static_cast<double>(samples));
    est.analytic_ratio_std = analytic_ratio_std(r, n, p, q);
    return est;
}

BettiTable mean_table(int r, int n, long long samples, std::uint64_t master_seed, int threads,
                      int exact_cutoff, std::optional<long long> cap) {
    validate_table_shape(r, n);
    if (samples < 1) throw parameter_error("mean table needs at least one sample");
    check_subset_capacity(r, n, cap);
    const std::size_t cells = static_cast<std::size_t>(r - n + 1) * n;
    std::vector<std::vector<double>> partial(static_cast<std::size_t>(threads) + 1,
                                             std::vector<double>(cells, 0.0));
    run_chunked(samples, threads, [&](int chunk, long long begin, long long end) {
        auto& acc = partial[static_cast<std::size_t>(chunk)];
        for (long long s = begin; s < end; ++s) {
            const CoefficientVector x =
                sample_uniform(r, n, substream_seed(master_seed, static_cast<std::uint64_t>(s)), cap);
            const BettiTable t = table_from_coefficients(x, exact_cutoff, cap);
            std::size_t i = 0;
            for (int p = 0; p <= r - n; ++p)
                for (int q = 1; q <= n; ++q) acc[i++] += t.at(p, q);
        }
    });
    BettiTable out(r, n, TableMode::real);
    std::vector<double> total(cells, 0.0);
    for (const auto& acc : partial)
        for (std::size_t i = 0; i < cells; ++i) total[i] += acc[i];
    std::size_t i = 0;
    for (int p = 0; p <= r - n; ++p)
        for (int q = 1; q <= n; ++q) out.set(p, q, total[i++] / static_cast<double>(samples));
    return out;
}

std::string DeviationEstimate::to_json() const {
    nlohmann::ordered_json doc;
    doc["r"] = r;
    doc["n"] = n;
    doc["p"] = p;
    doc["q"] = q;
    doc["epsilon"] = epsilon;
    doc["samples"] = samples;
    doc["master_seed"] = master_seed;
    doc["hit_fraction"] = hit_fraction;
    doc["standard_error"] = standard_error;
    doc["analytic_ratio_std"] = analytic_ratio_std;
    return doc.dump(2);
}

}  // namespace betti
