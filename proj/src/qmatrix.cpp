#include "betti/qmatrix.hpp"

#include <utility>

#include "betti/errors.hpp"

namespace betti {

namespace {

// In-place row echelon reduction of an augmented or plain matrix held as
// row-major vector<Rat>. Returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<Rat>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a[pivot * cols + j], a[row * cols + j]);
        const Rat inv = Rat(1) / a[row * cols + col];
        for (std::size_t j = col; j < cols; ++j) a[row * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i * cols + col] == 0) continue;
            const Rat factor = a[i * cols + col];
            for (std::size_t j = col; j < cols; ++j) a[i * cols + j] -= factor * a[row * cols + j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
    std::vector<Rat> work = data_;
    return row_reduce(work, rows_, cols_).size();
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& rhs) const {
    if (rhs.size() != rows_) throw parameter_error("solve: rhs length mismatch");
    const std::size_t wide = cols_ + 1;
    std::vector<Rat> work(rows_ * wide);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) work[i * wide + j] = data_[i * cols_ + j];
        work[i * wide + cols_] = rhs[i];
    }
    const std::vector<std::size_t> pivots = row_reduce(work, rows_, wide);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
    if (pivots.size() < cols_)
        throw parameter_error("solve: matrix columns are linearly dependent; solution not unique");
    std::vector<Rat> solution(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) solution[pivots[i]] = work[i * wide + cols_];
    return solution;
}

}  // namespace betti
