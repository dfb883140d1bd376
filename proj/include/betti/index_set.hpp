#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "betti/numeric.hpp"

namespace betti {

// The (n-1)-element subset I = (i_1 < ... < i_{n-1}) of {1,...,r} labelling a
// pure diagram. Its complement in {1,...,r} is the degree sequence.
struct IndexSet {
    int r = 0;
    int n = 0;
    std::vector<int> elements;  // strictly increasing, values in [1, r]

    IndexSet(int r_, int n_, std::vector<int> elements_);

    // Reflection i -> r+1-i, which mirrors the degree sequence.
    IndexSet reflected() const;

    bool operator==(const IndexSet& other) const = default;
};

struct DegreeSequence {
    std::vector<int> degrees;  // d_0 < d_1 < ... < d_{r-n}

    bool operator==(const DegreeSequence& other) const = default;
};

// Sorted complement of I in {1,...,r}.
DegreeSequence degree_sequence_of(const IndexSet& index_set);

// Number of (n-1)-subsets of [r], i.e. the dimension of the coefficient cube.
Int index_set_count(int r, int n);

// Enumeration cap for all subset loops. Default 10^7; the BETTI_SUBSET_CAP
// environment variable overrides it process-wide.
long long subset_cap();

// Throws capacity_error when C(r, n-1) exceeds the cap (explicit or global).
void check_subset_capacity(int r, int n, std::optional<long long> cap = std::nullopt);

// Visits every (n-1)-subset of [1,r] in lexicographic order. The callback
// receives the elements of the current subset; its rank is the call index.
void for_each_index_set(int r, int n, const std::function<void(const std::vector<int>&)>& visit);

// 2 <= n <= r-1 is required everywhere a table shape is introduced.
void validate_table_shape(int r, int n);

}  // namespace betti
