#pragma once

#include "cubenori/int_matrix.hpp"

#include <cstddef>
#include <optional>

namespace cubenori {

/**
 * Smith normal form U * M * V = S.
 *
 * S is diagonal with non-negative entries d_0 | d_1 | ... ; U and V are
 * unimodular and their inverses are tracked alongside, so callers can move
 * between the original and the diagonal coordinates without a second
 * reduction.
 *
 * Pivoting is deterministic: at every step the active submatrix is scanned
 * for the nonzero entry of minimal absolute value, ties going to the lowest
 * (row, column) in row-major order.
 */
struct SmithForm
{
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    IntMatrix U_inverse;
    IntMatrix V_inverse;
    std::size_t rank = 0;

    /// Diagonal entries d_0..d_{min(rows,cols)-1}, zeros included.
    IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
IntMatrix integer_kernel(const IntMatrix& m);

/**
 * The sublattice of Z^n spanned by the columns of a generator matrix, with
 * exact membership and coefficient recovery.
 */
class LatticeSolver
{
public:
    explicit LatticeSolver(const IntMatrix& generators);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t generator_count() const noexcept { return generator_count_; }
    std::size_t rank() const noexcept { return form_.rank; }

    bool contains(const IntVector& v) const;
    /// Some c with generators * c = v, or nullopt when v is not in the lattice.
    std::optional<IntVector> solve(const IntVector& v) const;
    /// True when the lattice is all of Z^n.
    bool is_full() const;

private:
    std::size_t ambient_;
    std::size_t generator_count_;
    SmithForm form_;
};

/// Some integer solution x of a x = b, if one exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b);

} // namespace cubenori
