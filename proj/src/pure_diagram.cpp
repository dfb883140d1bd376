#include "betti/pure_diagram.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

#include "betti/errors.hpp"

namespace betti {

Rat pure_entry_from_index_products(const IndexSet& index_set, int p, int q) {
    const int r = index_set.r;
    const int n = index_set.n;
    Int numerator = factorial(r - n);
    for (int a = 1; a <= q - 1; ++a) {
        const int factor = p + q - index_set.elements[a - 1];
        if (factor <= 0) return Rat(0);
        numerator *= factor;
    }
    for (int a = q; a <= n - 1; ++a) {
        const int factor = index_set.elements[a - 1] - p - q;
        if (factor <= 0) return Rat(0);
        numerator *= factor;
    }
    return Rat(numerator, factorial(p + q - 1) * factorial(r - p - q));
}

Rat pure_entry_from_degree_gaps(int r, int n, const DegreeSequence& degrees, int p) {
    Int denominator = 1;
    const int d_p = degrees.degrees[p];
    for (int l = 0; l <= r - n; ++l) {
        if (l == p) continue;
        denominator *= std::abs(degrees.degrees[l] - d_p);
    }
    return Rat(factorial(r - n), denominator);
}

PureDiagram pure_diagram(int r, int n, const IndexSet& index_set) {
    validate_table_shape(r, n);
    if (index_set.r != r || index_set.n != n)
        throw parameter_error("index set labelled (r=" + std::to_string(index_set.r) +
                              ", n=" + std::to_string(index_set.n) + ") used with (r=" +
                              std::to_string(r) + ", n=" + std::to_string(n) + ")");
    DegreeSequence degrees = degree_sequence_of(index_set);
    BettiTable table(r, n, TableMode::exact);
    for (int p = 0; p <= r - n; ++p) {
        const int q = degrees.degrees[p] - p;  // the only row that can be nonzero
        Rat entry = pure_entry_from_index_products(index_set, p, q);
        assert(entry == pure_entry_from_degree_gaps(r, n, degrees, p));
        table.set(p, q, std::move(entry));
    }
    return PureDiagram{index_set, std::move(degrees), std::move(table)};
}

PureDiagram pure_diagram(int r, int n, const std::vector<int>& index_elements) {
    return pure_diagram(r, n, IndexSet(r, n, index_elements));
}

namespace {

// Shared DP for e_b over the first a values of a sequence term(1..a).
template <typename Term>
Int elementary_symmetric_dp(int a, int b, Term term) {
    if (b < 0 || a < b)
        throw parameter_error("elementary symmetric sum needs a >= b >= 0, got a=" +
                              std::to_string(a) + ", b=" + std::to_string(b));
    std::vector<Int> e(b + 1, Int(0));
    e[0] = 1;
    for (int x = 1; x <= a; ++x) {
        const Int t = term(x);
        for (int k = std::min(b, x); k >= 1; --k) e[k] += t * e[k - 1];
    }
    return e[b];
}

}  // namespace

Int elementary_symmetric_sum(int a, int b) {
    return elementary_symmetric_dp(a, b, [](int x) { return Int(x); });
}

Int elementary_symmetric_square_sum(int a, int b) {
    return elementary_symmetric_dp(a, b, [](int x) { return Int(x) * x; });
}

namespace {

Rat hilbert_value(const BettiTable& table, int j) {
    const int r = table.r();
    const int n = table.n();
    const int m = r - n;
    Rat sum(0);
    for (int p = 0; p <= r - n; ++p) {
        for (int q = 1; q <= n; ++q) {
            const Rat& entry = table.exact_at(p, q);
            if (entry == 0) continue;
            const Int coeff = binomial(static_cast<long long>(m) - 1 + j - (p + q), m - 1);
            if (coeff == 0) continue;
            if (p % 2 == 0)
                sum += entry * coeff;
            else
                sum -= entry * coeff;
        }
    }
    return sum;
}

}  // namespace

std::vector<Rat> hilbert_function(const BettiTable& table) {
    if (!table.is_exact()) throw mode_error("Hilbert function requires an exact-mode table");
    const int r = table.r();
    std::vector<Rat> values;
    values.reserve(r);
    for (int j = 1; j <= r; ++j) values.push_back(hilbert_value(table, j));
    while (!values.empty() && values.back() == 0) values.pop_back();
    return values;
}

Rat multiplicity(const BettiTable& table) {
    const std::vector<Rat> hf = hilbert_function(table);
    const int r = table.r();
    const int m = r - table.n();
    // Beyond j = r every binomial is in polynomial range, so HF(j) agrees with
    // a degree-(m-1) polynomial there; m vanishing values pin it to zero.
    for (int j = r + 1; j <= r + m; ++j)
        if (hilbert_value(table, j) != 0)
            throw parameter_error("Hilbert function does not vanish past degree r=" +
                                  std::to_string(r) + "; table is outside the finite-length cone");
    Rat total(0);
    for (const Rat& v : hf) total += v;
    return total;
}

bool herzog_kuhl_check(const BettiTable& table) {
    if (!table.is_exact()) throw mode_error("Herzog-Kuhl check requires an exact-mode table");
    const int r = table.r();
    const int n = table.n();
    for (int j = 0; j <= r - n - 1; ++j) {
        Rat sum(0);
        for (int p = 0; p <= r - n; ++p)
            for (int q = 1; q <= n; ++q) {
                const Rat& entry = table.exact_at(p, q);
                if (entry == 0) continue;
                const Int power = ipow(Int(p + q), static_cast<unsigned>(j));
                if (p % 2 == 0)
                    sum += entry * power;
                else
                    sum -= entry * power;
            }
        if (sum != 0) return false;
    }
    return true;
}

}  // namespace betti
