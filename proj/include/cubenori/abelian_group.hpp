#pragma once

#include "cubenori/int_matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cubenori {

/**
 * Finitely generated abelian group Z^g / colspan(R).
 *
 * Construction computes the Smith form of R once. From it we keep the
 * "normal coordinates": the presentation coordinates transformed by U,
 * with the trivial (d = 1) summands dropped. Torsion coordinates come first
 * in divisibility order, free coordinates last. Two groups are isomorphic
 * exactly when their normal shapes agree.
 */
class FgAbGroup
{
public:
    /// The trivial group with no generators.
    FgAbGroup();
    explicit FgAbGroup(IntMatrix relations);

    static FgAbGroup free(std::size_t rank);
    static FgAbGroup cyclic(const Integer& order);
    /// Z/d_1 + ... + Z/d_k, where d = 0 means a free summand.
    static FgAbGroup from_orders(const IntVector& orders);

    std::size_t generator_count() const noexcept { return relations_.rows(); }
    const IntMatrix& relations() const noexcept { return relations_; }

    std::size_t free_rank() const;
    /// Torsion coefficients d > 1 in divisibility order.
    IntVector torsion() const;
    /// Orders of the normal summands: torsion coefficients, then zeros for Z.
    IntVector normal_orders() const;
    std::size_t normal_dimension() const;
    /// Invariant factors d_1 | d_2 | ... of the presentation, zeros included.
    IntVector invariant_factors() const;

    bool is_trivial() const;
    bool is_free() const;
    bool is_finite() const;
    /// Group order; only meaningful when is_finite().
    Integer order() const;

    /// Whether v (presentation coordinates) is zero in the group.
    bool is_zero(const IntVector& v) const;
    bool equal_elements(const IntVector& a, const IntVector& b) const;

    /// Normal coordinates of v, torsion entries reduced into [0, d).
    IntVector to_normal(const IntVector& v) const;
    /// A presentation vector representing the given normal coordinates.
    IntVector from_normal(const IntVector& normal) const;
    /// Matrix of to_normal before reduction (normal_dimension x generators).
    const IntMatrix& normal_projection() const;
    /// Matrix of from_normal (generators x normal_dimension).
    const IntMatrix& normal_lift() const;

    bool isomorphic_to(const FgAbGroup& other) const;
    /// Same generator count and identical relation matrix.
    bool same_presentation(const FgAbGroup& other) const;

    /// Human-readable form, e.g. "Z^2 + Z/2", or "0".
    std::string describe() const;

private:
    struct Normal
    {
        IntMatrix projection;
        IntMatrix lift;
        IntVector orders;
        IntVector invariant_factors;
    };

    IntMatrix relations_;
    std::shared_ptr<const Normal> normal_;
};

/// Direct sum A + B with generators of A first.
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/**
 * Homomorphism given by an integer matrix on the chosen generators.
 * The constructor rejects matrices that do not respect the relations.
 */
class GroupHom
{
public:
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupHom identity(const FgAbGroup& g);
    static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const noexcept { return source_; }
    const FgAbGroup& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }

    IntVector apply(const IntVector& v) const { return matrix_ * v; }

    bool is_zero() const;
    /// Equality as maps: the difference sends every generator to zero.
    bool equals(const GroupHom& other) const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Generators of the kernel as a subgroup of the source (columns).
    IntMatrix kernel_generators() const;
    /// Some x with f(x) = y in the target group, when y lies in the image.
    std::optional<IntVector> preimage(const IntVector& y) const;
    /// Two-sided inverse; throws NotInvertible unless an isomorphism.
    GroupHom inverse() const;

    GroupHom scaled(const Integer& k) const;
    GroupHom operator-() const { return scaled(-1); }
    GroupHom operator+(const GroupHom& other) const;
    GroupHom operator-(const GroupHom& other) const;

    /// Matrix in normal coordinates of source and target.
    IntMatrix normal_matrix() const;

private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

/// Composition f o g; throws CompositionMismatch when target(g) != source(f).
GroupHom compose(const GroupHom& f, const GroupHom& g);

/// Block map A + B -> C + D.
GroupHom direct_sum(const GroupHom& f, const GroupHom& g);
/// (f, g) : A -> B + C.
GroupHom pairing(const GroupHom& f, const GroupHom& g);
/// [f g] : A + B -> C.
GroupHom copairing(const GroupHom& f, const GroupHom& g);

/**
 * Exactness of A --g--> B --f--> C at B: image(g) == kernel(f).
 * Requires target(g) and source(f) to be the same presentation.
 */
bool is_exact_at(const GroupHom& f, const GroupHom& g);

} // namespace cubenori
