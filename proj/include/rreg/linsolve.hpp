#pragma once

// Exact Gaussian elimination over any field type with +, -, *, / and a
// zero test (Rational here). No pivoting heuristics: any nonzero pivot is
// as good as another when arithmetic is exact.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rreg {

class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Field>
using Matrix = std::vector<std::vector<Field>>;

/// Solves a x = b for square a. Throws SingularSystem.
template <class Field>
std::vector<Field> solve_exact(Matrix<Field> a, std::vector<Field> b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_exact: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_exact: matrix is not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Field(0))
            ++pivot;
        if (pivot == n)
            throw SingularSystem("singular system at column " + std::to_string(col));
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == Field(0))
                continue;
            const Field factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Field> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Field acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k)
            acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Coefficients c with sum_j c_j x_k^j = v_k for distinct nodes x_k.
template <class Field>
std::vector<Field> interpolate_exact(const std::vector<Field>& nodes, const std::vector<Field>& values) {
    const std::size_t n = nodes.size();
    Matrix<Field> a(n, std::vector<Field>(n));
    for (std::size_t k = 0; k < n; ++k) {
        Field power(1);
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] = power;
            power *= nodes[k];
        }
    }
    return solve_exact(std::move(a), values);
}

} // namespace rreg
