#include "betti/curves.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "betti/errors.hpp"
#include "betti/logspace.hpp"
#include "betti/qmatrix.hpp"

namespace betti {

CurveEmbedding::CurveEmbedding(int genus_, int degree_, bool enforce_degree_guard)
    : genus(genus_), degree(degree_) {
    if (genus < 0) throw parameter_error("genus must be nonnegative");
    if (enforce_degree_guard && degree < 2 * genus + 3)
        throw parameter_error("degree " + std::to_string(degree) + " below the guard 2g+3 = " +
                              std::to_string(2 * genus + 3) +
                              " (pass warn-only to evaluate anyway)");
    if (degree - genus < 1) throw parameter_error("embedding needs d - g >= 1");
}

namespace {

Rat curve_bracket(const CurveEmbedding& e, int p) {
    const int d = e.degree;
    const int g = e.genus;
    return Rat(-static_cast<long long>(p) * d, d - g) + (d + 1 - g) - Rat(d + 1 - g, p + 1);
}

}  // namespace

Rat curve_linear_syzygies(const CurveEmbedding& embedding, int p) {
    if (p < 1 || p > embedding.strand_limit())
        throw parameter_error("p=" + std::to_string(p) + " outside the closed-form regime [1, " +
                              std::to_string(embedding.strand_limit()) +
                              "]; the entry there is not determined by the formula");
    return Rat(binomial(embedding.r(), p)) * curve_bracket(embedding, p);
}

Rat curve_linear_syzygy_bound(const CurveEmbedding& embedding, int p) {
    if (p < 0) throw parameter_error("bound needs p >= 0");
    const int h0 = embedding.degree + 1 - embedding.genus;
    return Rat(binomial(h0, p) * h0);
}

double curve_normalized_syzygies(const CurveEmbedding& embedding, int p) {
    const Rat k = curve_linear_syzygies(embedding, p);
    if (k == 0) return 0.0;
    const int r = embedding.r();
    const double log_value = -static_cast<double>(r) * std::log(2.0) +
                             0.5 * std::log(two_pi / static_cast<double>(r)) +
                             log_binomial(r, p) + std::log(to_double(curve_bracket(embedding, p)));
    return std::exp(log_value);
}

std::vector<std::pair<int, Rat>> curve_linear_strand_profile(const CurveEmbedding& embedding) {
    std::vector<std::pair<int, Rat>> profile;
    for (int p = 1; p <= embedding.strand_limit(); ++p)
        profile.emplace_back(p, curve_linear_syzygies(embedding, p));
    return profile;
}

namespace {

// Basis bookkeeping for the Koszul oracle. A basis vector of
// Wedge^k V (x) S_D is (subset mask over monomial indices 0..d, j in 0..D);
// its weight (total y-exponent) is sum(mask) + j, and the differential
// preserves weight, so ranks are computed block by block.
struct GradedBasis {
    // weight -> list of (mask, j); position in the list is the local index.
    std::map<int, std::vector<std::pair<std::uint32_t, int>>> buckets;
    std::map<int, std::map<std::uint64_t, int>> index;  // weight -> key -> local index

    static std::uint64_t key(std::uint32_t mask, int j) {
        return (static_cast<std::uint64_t>(mask) << 16) | static_cast<std::uint32_t>(j);
    }

    void add(std::uint32_t mask, int weight_of_mask, int j) {
        const int w = weight_of_mask + j;
        auto& bucket = buckets[w];
        index[w][key(mask, j)] = static_cast<int>(bucket.size());
        bucket.emplace_back(mask, j);
    }
};

int mask_weight(std::uint32_t mask) {
    int w = 0;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) w += i;
    return w;
}

void enumerate_wedge(int d, int k, int top_degree, GradedBasis& out) {
    for (std::uint32_t mask = 0; mask < (1u << (d + 1)); ++mask) {
        if (std::popcount(mask) != k) continue;
        const int wm = mask_weight(mask);
        for (int j = 0; j <= top_degree; ++j) out.add(mask, wm, j);
    }
}

// Koszul differential on one basis vector: (S, j) -> sum over i in S of
// (-1)^{pos(i)-1} (S - i, j + i). Adds the entries of that column into `block`.
void add_differential_column(const GradedBasis& target, std::uint32_t mask, int j, int column,
                             QMatrix& block) {
    const int w = mask_weight(mask) + j;
    int position = 0;
    for (int i = 0; i <= 15; ++i) {
        if (!(mask & (1u << i))) continue;
        ++position;
        const std::uint32_t reduced = mask & ~(1u << i);
        const auto& row_index = target.index.at(w).at(GradedBasis::key(reduced, j + i));
        block.at(static_cast<std::size_t>(row_index), static_cast<std::size_t>(column)) +=
            (position % 2 == 1) ? 1 : -1;
    }
}

}  // namespace

long long koszul_linear_strand_dim(int d, int p) {
    if (d > 8) throw capacity_error("Koszul oracle capped at d <= 8, got d=" + std::to_string(d));
    if (d < 2 || p < 1 || p > d - 1)
        throw parameter_error("Koszul oracle needs 2 <= d <= 8 and 1 <= p <= d-1");

    GradedBasis top, mid, bottom;
    enumerate_wedge(d, p + 1, 0, top);       // Wedge^{p+1} V (x) S_0
    enumerate_wedge(d, p, d, mid);           // Wedge^p V (x) S_d
    enumerate_wedge(d, p - 1, 2 * d, bottom);  // Wedge^{p-1} V (x) S_2d

    long long kernel_out = 0;
    long long rank_in = 0;
    for (const auto& [w, columns] : mid.buckets) {
        const auto bottom_bucket = bottom.buckets.find(w);
        const std::size_t rows = bottom_bucket == bottom.buckets.end()
                                     ? 0
                                     : bottom_bucket->second.size();
        if (rows == 0) {
            kernel_out += static_cast<long long>(columns.size());
        } else {
            QMatrix block(rows, columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c)
                add_differential_column(bottom, columns[c].first, columns[c].second,
                                        static_cast<int>(c), block);
            kernel_out += static_cast<long long>(columns.size()) -
                          static_cast<long long>(block.rank());
        }
    }
    for (const auto& [w, columns] : top.buckets) {
        const auto mid_bucket = mid.buckets.find(w);
        if (mid_bucket == mid.buckets.end()) continue;
        QMatrix block(mid_bucket->second.size(), columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            add_differential_column(mid, columns[c].first, columns[c].second,
                                    static_cast<int>(c), block);
        rank_in += static_cast<long long>(block.rank());
    }
    return kernel_out - rank_in;
}

}  // namespace betti
