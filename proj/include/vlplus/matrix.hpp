#pragma once

#include "vlplus/rational.hpp"

#include <cstddef>
#include <vector>

namespace vlplus {

/// Dense rational matrix, row-major.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    static MatQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const MatQ& a, const MatQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend MatQ operator*(const MatQ& a, const MatQ& b);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws on non-square input.
Rat determinant(const MatQ& m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Rat> x;  // populated only for Unique
};

/// Solve M x = b exactly. Throws on dimension mismatch.
SolveResult linear_solve(const MatQ& m, const std::vector<Rat>& b);

}  // namespace vlplus
