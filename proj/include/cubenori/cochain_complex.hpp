#pragma once

#include "cubenori/abelian_group.hpp"
#include "cubenori/int_matrix.hpp"
#include "cubenori/smith.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cubenori {

/**
 * Bounded cochain complex of free modules over Z, or over Z/m when a
 * modulus is set. Degrees outside [lo, hi] are zero. d^n maps C^n to
 * C^{n+1} and is stored as a rank(n+1) x rank(n) matrix.
 */
class CochainComplex
{
public:
    CochainComplex() = default;
    /// Throws std::invalid_argument on shape errors and IllDefinedMorphism
    /// when some d^{n+1} d^n is nonzero.
    CochainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials,
                   Integer modulus = 0);

    static CochainComplex zero();
    /// Single term Z^rank placed in the given degree.
    static CochainComplex concentrated(int degree, std::size_t rank, Integer modulus = 0);

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    const Integer& modulus() const noexcept { return modulus_; }

    std::size_t rank(int n) const;
    /// d^n : C^n -> C^{n+1}; a correctly shaped zero matrix outside the support.
    IntMatrix differential(int n) const;

    /// Same terms with degrees raised by shift; differentials negated when asked.
    CochainComplex shifted(int shift, bool negate) const;

private:
    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> differentials_; // d^{lo} .. d^{hi-1}
    Integer modulus_ = 0;
};

/**
 * H^n of a complex together with the data needed to name classes:
 * generator j of the group is the cocycle in column j of cocycles(), and
 * coordinates() maps any cocycle to presentation coordinates.
 */
class Cohomology
{
public:
    Cohomology(FgAbGroup group, IntMatrix cocycles, std::shared_ptr<const LatticeSolver> basis,
               IntMatrix coordinate_map);

    const FgAbGroup& group() const noexcept { return group_; }
    const IntMatrix& cocycles() const noexcept { return cocycles_; }
    IntVector cocycle(std::size_t generator) const { return cocycles_.column(generator); }
    std::size_t cochain_rank() const noexcept { return cocycles_.rows(); }

    /// Presentation coordinates of the class of a cocycle.
    IntVector coordinates(const IntVector& cocycle) const;
    /// Cocycle representing the element with the given coordinates.
    IntVector representative(const IntVector& coordinates) const;

private:
    FgAbGroup group_;
    IntMatrix cocycles_;
    std::shared_ptr<const LatticeSolver> basis_;
    IntMatrix coordinate_map_;
};

Cohomology cohomology_at(const CochainComplex& c, int n);

/// Degreewise maps f^n : C^n -> D^n.
class ChainMap
{
public:
    /// Throws NotAChainMap when a square fails to commute or shapes disagree.
    ChainMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components,
             int lo);

    static ChainMap identity(const CochainComplex& c);
    static ChainMap zero(const CochainComplex& source, const CochainComplex& target);

    const CochainComplex& source() const noexcept { return source_; }
    const CochainComplex& target() const noexcept { return target_; }
    IntMatrix component(int n) const;

    ChainMap scaled(const Integer& k) const;

private:
    CochainComplex source_;
    CochainComplex target_;
    int lo_ = 0;
    std::vector<IntMatrix> components_;
};

/// f o g.
ChainMap compose(const ChainMap& f, const ChainMap& g);

GroupHom induced_hom_on_cohomology(const ChainMap& f, int n);
/// Same, reusing precomputed cohomology of source and target.
GroupHom induced_hom_on_cohomology(const ChainMap& f, int n, const Cohomology& source,
                                   const Cohomology& target);

/**
 * Mapping fiber of f : C -> D, with F^n = D^{n-1} + C^n (D part first) and
 * d(e, c) = (f(c) - d e, d c). The long exact sequence is
 *   H^n(F) -> H^n(C) -> H^n(D) -> H^{n+1}(F) -> ...
 */
CochainComplex mapping_fiber(const ChainMap& f);

/// The three chain maps of the fiber sequence of f.
struct FiberSequence
{
    CochainComplex fiber;
    ChainMap projection;   ///< F -> C
    ChainMap map;          ///< C -> D (the original f)
    CochainComplex shifted_target; ///< D[-1]: degree n term D^{n-1}, same matrices
    ChainMap inclusion;    ///< D[-1] -> F, e |-> (-1)^n (e, 0) in degree n
};

FiberSequence fiber_sequence(const ChainMap& f);

} // namespace cubenori
