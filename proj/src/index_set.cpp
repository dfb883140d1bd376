#include "betti/index_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "betti/errors.hpp"

namespace betti {

void validate_table_shape(int r, int n) {
    if (n < 2 || n > r - 1)
        throw parameter_error("table shape requires 2 <= n <= r-1, got n=" + std::to_string(n) +
                              ", r=" + std::to_string(r));
}

IndexSet::IndexSet(int r_, int n_, std::vector<int> elements_)
    : r(r_), n(n_), elements(std::move(elements_)) {
    validate_table_shape(r, n);
    if (static_cast<int>(elements.size()) != n - 1)
        throw parameter_error("index set needs exactly n-1 elements, got " +
                              std::to_string(elements.size()) + " for n=" + std::to_string(n));
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (elements[k] < 1 || elements[k] > r)
            throw parameter_error("index set element " + std::to_string(elements[k]) +
                                  " outside [1, " + std::to_string(r) + "]");
        if (k > 0 && elements[k] <= elements[k - 1])
            throw parameter_error("index set elements must strictly increase");
    }
}

IndexSet IndexSet::reflected() const {
    std::vector<int> mirrored;
    mirrored.reserve(elements.size());
    for (auto it = elements.rbegin(); it != elements.rend(); ++it) mirrored.push_back(r + 1 - *it);
    return IndexSet(r, n, std::move(mirrored));
}

DegreeSequence degree_sequence_of(const IndexSet& index_set) {
    DegreeSequence seq;
    seq.degrees.reserve(index_set.r - index_set.n + 1);
    std::size_t skip = 0;
    for (int v = 1; v <= index_set.r; ++v) {
        if (skip < index_set.elements.size() && index_set.elements[skip] == v) {
            ++skip;
            continue;
        }
        seq.degrees.push_back(v);
    }
    return seq;
}

Int index_set_count(int r, int n) { return binomial(r, n - 1); }

long long subset_cap() {
    static const long long cap = [] {
        if (const char* env = std::getenv("BETTI_SUBSET_CAP")) {
            char* end = nullptr;
            const long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 10'000'000LL;
    }();
    return cap;
}

void check_subset_capacity(int r, int n, std::optional<long long> cap) {
    const long long limit = cap.value_or(subset_cap());
    if (index_set_count(r, n) > limit)
        throw capacity_error("C(" + std::to_string(r) + ", " + std::to_string(n - 1) + ") = " +
                             index_set_count(r, n).str() + " index sets exceeds cap " +
                             std::to_string(limit));
}

void for_each_index_set(int r, int n,
                        const std::function<void(const std::vector<int>&)>& visit) {
    validate_table_shape(r, n);
    const int k = n - 1;
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = i + 1;
    while (true) {
        visit(current);
        // lexicographic successor
        int pos = k - 1;
        while (pos >= 0 && current[pos] == r - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int i = pos + 1; i < k; ++i) current[i] = current[i - 1] + 1;
    }
}

}  // namespace betti
