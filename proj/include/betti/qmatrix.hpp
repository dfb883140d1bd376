#pragma once

#include <optional>
#include <vector>

#include "betti/numeric.hpp"

namespace betti {

// Dense matrix over the rationals with just enough linear algebra for exact
// rank and exact solving. No tolerances anywhere.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const;

    // Unique exact solution of A x = b. Empty when the system is inconsistent;
    // throws if the solution is not unique (rank-deficient columns).
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

}  // namespace betti
