#pragma once

#include "cubenori/cellular.hpp"
#include "cubenori/cohomology.hpp"

#include <vector>

namespace cubenori {

/**
 * A (x) B presented on generator pairs. Generator (i, j) has index
 * i * |gens(B)| + j; relations are R_A (x) 1 together with 1 (x) R_B.
 */
struct TensorOfGroups
{
    FgAbGroup left;
    FgAbGroup right;
    FgAbGroup product;

    std::size_t index(std::size_t i, std::size_t j) const { return i * right.generator_count() + j; }
};

TensorOfGroups tensor_group(const FgAbGroup& a, const FgAbGroup& b);
/// f (x) g on the tensor presentations.
GroupHom tensor_hom(const GroupHom& f, const GroupHom& g);
/// A (x) B -> B (x) A, a (x) b |-> b (x) a.
GroupHom tensor_swap(const FgAbGroup& a, const FgAbGroup& b);

/**
 * Sign conventions.
 *
 * For cochains a on (X, Y) of degree n and b on (X', Y') of degree n' the
 * concatenation product is (a x b)(P x Q) = a(P) b(Q). With the boundary
 * convention of RelativeCochainComplex it satisfies
 *
 *     d(a x b) = da x b + (-1)^n a x db,     swap^*(b x a) = (-1)^{nn'} a x b.
 *
 * The external product is kappa(a (x) b) = (-1)^{nn'} (a x b). With this
 * choice the first-slot boundary square commutes up to (-1)^{n'}, the
 * second-slot square commutes on the nose, and the swap square commutes up
 * to (-1)^{nn'}. The cup product is the pullback of kappa along the cubical
 * (Serre) diagonal
 *
 *     [k, k+1] |-> [k] x [k, k+1] + [k, k+1] x [k+1],
 *
 * extended over coordinates with Koszul signs.
 */
int external_sign(int n, int m);

/// kappa_{n,n'} : H^n(X, Y) (x) H^{n'}(X', Y') -> H^{n+n'}(pair_product).
struct ExternalProduct
{
    SubcomplexPair left;
    SubcomplexPair right;
    int left_degree = 0;
    int right_degree = 0;
    TensorOfGroups source;
    GroupHom map;
};

ExternalProduct cross_product(const SubcomplexPair& p, const SubcomplexPair& q, int n, int m);
/// Same with the three cohomologies precomputed (all with the same modulus).
ExternalProduct cross_product(const PairCohomology& hp, const PairCohomology& hq, const PairCohomology& hpq,
                              int n, int m);

/// Cochain-level product kappa on representatives, in the basis of pair_product.
IntVector cross_cochain(const RelativeCochainComplex& p, const RelativeCochainComplex& q,
                        const RelativeCochainComplex& pq, int n, const IntVector& a, int m,
                        const IntVector& b);

/// Cup product H^n(X, Y) (x) H^m(X, Z) -> H^{n+m}(X, Y + Z). Throws NotASubcomplex.
GroupHom cup_product(const CubicalComplex& x, const CubicalComplex& y, const CubicalComplex& z, int n, int m);
/// Cochain-level cup of representatives, in the basis of (X, Y + Z).
IntVector cup_cochain(const RelativeCochainComplex& xy, const RelativeCochainComplex& xz,
                      const RelativeCochainComplex& target, int n, const IntVector& a, int m,
                      const IntVector& b);

/// Associativity, the swap constraint and naturality in both slots.
Report check_ax0_ax1(const std::vector<SubcomplexPair>& pairs, const std::vector<PairMap>& maps,
                     int max_degree = 3);
/// First-slot boundary square for Z in Y in X against (X', Y'), sign (-1)^{n'}.
Report check_ax2(const Triple& t, const SubcomplexPair& q, int n, int m);
/// Second-slot boundary square for (X', Y') against Z in Y in X, sign +1.
/// The report also records whether the square commutes up to (-1)^{n'}.
Report check_ax3(const SubcomplexPair& q, const Triple& t, int m, int n);
/// Unit law through epsilon : H^0(pt) = Z for each pair.
Report check_ax4(const std::vector<SubcomplexPair>& pairs);

/// epsilon : H^0(pt, empty) -> Z, the value of a class on the point.
GroupHom unit_iso();

/**
 * Kunneth formula for two good pairs: kappa is an isomorphism in the
 * certified degrees, the swap square commutes with sign (-1)^{nn'}, and the
 * comparison sum in the total degree has a single nonzero summand.
 * Throws NotGood unless both pairs are good.
 */
Report check_kunneth(const SubcomplexPair& p, const SubcomplexPair& q);

/// Certificate for pair_product(p, q) in degree n + n'; throws NotGood.
GoodPairCertificate tensor_good_pair(const SubcomplexPair& p, const SubcomplexPair& q);

/**
 * For a surjection s : A -> B and any F: F (x) s is onto and the sequence
 * F (x) ker s -> F (x) A -> F (x) B is exact; flat F also makes the first map
 * injective.
 */
Report check_flatness(const FgAbGroup& f, const GroupHom& s);

} // namespace cubenori
