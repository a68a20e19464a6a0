#pragma once

#include "cubenori/abelian_group.hpp"
#include "cubenori/cochain_complex.hpp"
#include "cubenori/cubes.hpp"
#include "cubenori/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace cubenori {

/**
 * Integer cochains on the cubes of X that are not in Y.
 *
 * Degree n has one basis vector per n-cube of X outside Y, in the order of
 * CubicalComplex::cubes(n). The coboundary is the transpose of the cubical
 * boundary restricted to this basis, where
 *
 *     boundary(Q) = sum over free coordinates m = 0, 1, ... of
 *                   (-1)^m (upper face - lower face).
 *
 * Every sign in the library (cross products, connecting maps) is measured
 * against this convention.
 */
class RelativeCochainComplex
{
public:
    explicit RelativeCochainComplex(SubcomplexPair pair);

    const SubcomplexPair& pair() const noexcept { return pair_; }
    const std::vector<Cube>& basis(int n) const;
    std::optional<std::size_t> index_of(const Cube& c) const;

    /// Complex over Z, or over Z/m when modulus is nonzero.
    CochainComplex complex(const Integer& modulus = 0) const;

private:
    SubcomplexPair pair_;
    std::vector<std::vector<Cube>> basis_;
    std::vector<IntMatrix> coboundaries_;
};

/**
 * H^n(X, Y) for every degree of a pair, computed once. Degrees outside
 * [0, dim X] give the trivial group.
 */
class PairCohomology
{
public:
    explicit PairCohomology(SubcomplexPair pair, Integer modulus = 0);

    const SubcomplexPair& pair() const noexcept { return cochains_->pair(); }
    const RelativeCochainComplex& cochains() const noexcept { return *cochains_; }
    const CochainComplex& complex() const noexcept { return complex_; }
    const Integer& modulus() const noexcept { return complex_.modulus(); }

    const Cohomology& at(int n) const;
    const FgAbGroup& group(int n) const { return at(n).group(); }

private:
    std::shared_ptr<const RelativeCochainComplex> cochains_;
    CochainComplex complex_;
    std::vector<Cohomology> degrees_;
    Cohomology trivial_;
};

/// A single cohomology group together with its cocycle representatives.
struct CohomologyValue
{
    SubcomplexPair pair;
    int degree = 0;
    FgAbGroup group;
    IntMatrix representatives;
};

CohomologyValue relative_cohomology(const SubcomplexPair& p, int n);

/// Cochain map C*(X', Y') -> C*(X, Y) induced by a pair map (X, Y) -> (X', Y').
ChainMap cochain_map(const PairMap& f, const Integer& modulus = 0);
/// Same, reusing the cochain complexes of both pairs.
ChainMap cochain_map(const PairMap& f, const PairCohomology& from, const PairCohomology& to);

/// f^* : H^n(X', Y') -> H^n(X, Y).
GroupHom pullback(const PairMap& f, int n);
/// Same, with from = H(X', Y') and to = H(X, Y) precomputed.
GroupHom pullback(const PairMap& f, int n, const PairCohomology& from, const PairCohomology& to);

/// Connecting map H^n(Y, Z) -> H^{n+1}(X, Y) of a triple Z in Y in X.
GroupHom connecting(const Triple& t, int n);
/// Same, with inner = H(Y, Z) and outer = H(X, Y) precomputed.
GroupHom connecting(const Triple& t, int n, const PairCohomology& inner, const PairCohomology& outer);

/// Cohomology of the three pairs of a triple plus the maps between them.
class TripleSequence
{
public:
    explicit TripleSequence(const Triple& t, Integer modulus = 0);

    const Triple& triple() const noexcept { return triple_; }
    const PairCohomology& outer() const noexcept { return outer_; }  ///< H(X, Y)
    const PairCohomology& whole() const noexcept { return whole_; }  ///< H(X, Z)
    const PairCohomology& inner() const noexcept { return inner_; }  ///< H(Y, Z)

    GroupHom to_whole(int n) const;   ///< H^n(X, Y) -> H^n(X, Z)
    GroupHom to_inner(int n) const;   ///< H^n(X, Z) -> H^n(Y, Z)
    GroupHom connecting(int n) const; ///< H^n(Y, Z) -> H^{n+1}(X, Y)

private:
    Triple triple_;
    PairCohomology outer_;
    PairCohomology whole_;
    PairCohomology inner_;
};

/// Exactness at the three positions of every degree in [lo, hi].
Report check_les_of_triple(const Triple& t, int lo, int hi);
/// Default window [-1, dim X + 1].
Report check_les_of_triple(const Triple& t);

/// Restriction H^n(X, Z) -> H^n(Y, Y n Z) for a cover X = Y + Z.
GroupHom excision_map(const Cover& c, int n);

/**
 * Mayer-Vietoris sequence of a cover built from restrictions, their
 * difference, and the connecting map through inverse excision. Throws
 * ExcisionFailed when some excision map is not invertible.
 */
Report mayer_vietoris_check(const Cover& c, int lo, int hi);
Report mayer_vietoris_check(const Cover& c);

/// H^n(X, Y; Z/m) with m >= 2.
Cohomology coefficient_reduction(const SubcomplexPair& p, int n, const Integer& modulus);

/// Restriction C*(X) -> C*(Y) of absolute cochains.
ChainMap restriction_map(const SubcomplexPair& p);

/// JSON summary {degree: invariant description} over [lo, hi].
nlohmann::json describe_groups(const PairCohomology& h, int lo, int hi);

} // namespace cubenori
