#include "vlplus/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace vlplus {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("MatQ: dimension mismatch");
    MatQ out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Rat& ail = a.at(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += ail * b.at(l, j);
        }
    return out;
}

std::string MatQ::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Scale each row to integers; returns the product of the scaling factors so
// callers can undo it on the determinant.
Rat clear_denominators(const MatQ& m, std::vector<std::vector<Int>>& out) {
    Rat scale = 1;
    out.assign(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int d = denominator(m.at(i, j));
            l = lcm(l, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat v = m.at(i, j) * l;
            out[i][j] = numerator(v);
        }
        scale *= l;
    }
    return scale;
}

}  // namespace

Rat determinant(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> a;
    Rat scale = clear_denominators(m, a);

    int sign = 1;
    Int prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < n && a[r][p] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                Int t = a[p][p] * a[i][j] - a[i][p] * a[p][j];
                a[i][j] = t / prev;  // exact by the Bareiss identity
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    return Rat(sign * a[n - 1][n - 1]) / scale;
}

SolveResult linear_solve(const MatQ& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("linear_solve: dimension mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();

    // Fraction-free forward elimination on the augmented integer matrix.
    MatQ aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    std::vector<std::vector<Int>> a;
    clear_denominators(aug, a);

    std::vector<std::size_t> pivot_col;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t r = row;
        while (r < rows && a[r][col] == 0) ++r;
        if (r == rows) continue;
        std::swap(a[row], a[r]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j <= cols; ++j) {
                Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (a[i][cols] != 0) return {SolveStatus::Inconsistent, {}};
    if (pivot_col.size() < cols) return {SolveStatus::Underdetermined, {}};

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
        const std::size_t col = pivot_col[i];
        Rat acc = Rat(a[i][cols]);
        for (std::size_t j = col + 1; j < cols; ++j) acc -= Rat(a[i][j]) * x[j];
        x[col] = acc / Rat(a[i][col]);
    }
    return {SolveStatus::Unique, std::move(x)};
}

}  // namespace vlplus
