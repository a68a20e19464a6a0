#pragma once

#include "cubenori/cohomology.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cubenori {

/// Evidence that H^m(X, Y) vanishes for m != degree and H^degree(X, Y) is free.
struct GoodPairCertificate
{
    SubcomplexPair pair;
    int degree = 0;
    FgAbGroup group;
    /// (m, description of H^m) over the window [-1, dim X + 1].
    std::vector<std::pair<int, std::string>> witness;
};

/// Either a certificate or the reason the pair is not good.
struct GoodPairVerdict
{
    std::optional<GoodPairCertificate> certificate;
    std::string refusal;
    int offending_degree = 0;

    bool good() const noexcept { return certificate.has_value(); }
};

/// A pair with zero cohomology is reported good in degree 0.
GoodPairVerdict certify_good_pair(const SubcomplexPair& p);
GoodPairVerdict certify_good_pair(const PairCohomology& h);

/// Nested subcomplexes empty = X_{-1} in X_0 in ... in X_d = X.
class Filtration
{
public:
    Filtration() = default;
    /// levels[p] = X_p for p = 0..d. Throws NotASubcomplex unless the levels
    /// are nested and the last one is the space itself.
    Filtration(CubicalComplex space, std::vector<CubicalComplex> levels);

    const CubicalComplex& space() const noexcept { return space_; }
    /// Dimensional type d; -1 for the empty space.
    int type() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    /// X_p, with X_p empty for p < 0 and X_p = X for p > d.
    const CubicalComplex& level(int p) const;
    /// (X_p, X_{p-1}).
    SubcomplexPair step(int p) const;

    bool contains(const Filtration& other) const;

private:
    CubicalComplex space_;
    std::vector<CubicalComplex> levels_;
    CubicalComplex empty_;
};

/// X_p = p-skeleton, type dim X.
Filtration skeleton_filtration(const CubicalComplex& x);
/// Levelwise union.
Filtration join(const Filtration& a, const Filtration& b);

/// Each step (X_p, X_{p-1}) has cohomology concentrated in degree p and free.
bool is_good(const Filtration& f);

/**
 * E_1 page of the coniveau spectral sequence: E_1^{p,q} = H^{p+q}(X_p, X_{p-1}),
 * with d_1 the composite H^n(X_p, X_{p-1}) -> H^n(X_p) -> H^{n+1}(X_{p+1}, X_p).
 */
class ConiveauPage
{
public:
    explicit ConiveauPage(Filtration f);

    const Filtration& filtration() const noexcept { return filtration_; }
    int type() const noexcept { return filtration_.type(); }

    /// H(X_p, X_{p-1}) for 0 <= p <= d.
    const PairCohomology& column(int p) const;
    const FgAbGroup& entry(int p, int q) const;
    GroupHom d1(int p, int q) const;

    /// Entries vanish off the row q = 0.
    bool degenerate() const;
    Report check_d1_squared() const;

private:
    Filtration filtration_;
    std::vector<PairCohomology> columns_;
    std::vector<PairCohomology> levels_;
    FgAbGroup trivial_;
};

/**
 * The row q = 0 of the E_1 page of a good filtration as a cochain complex.
 * Degree p is H^p(X_p, X_{p-1}) in its normal (free) coordinates.
 */
class FiltrationComplex
{
public:
    /// Throws NotGood unless the filtration is good.
    explicit FiltrationComplex(Filtration f);

    const ConiveauPage& page() const noexcept { return *page_; }
    const Filtration& filtration() const noexcept { return page_->filtration(); }
    const CochainComplex& complex() const noexcept { return complex_; }

    /// Presentation coordinates in H^p(X_p, X_{p-1}) of a degree-p cochain.
    IntVector to_entry(int p, const IntVector& cochain) const;

private:
    std::shared_ptr<const ConiveauPage> page_;
    CochainComplex complex_;
};

CochainComplex filtration_complex(const Filtration& f);

/**
 * H^n(filtration complex) -> H^n(X). A cocycle x in H^n(X_n, X_{n-1}) is
 * lifted along the injective restriction H^n(X, X_{n-1}) -> H^n(X_n, X_{n-1})
 * and pushed to H^n(X). Throws NotGood when the filtration is not good or a
 * lift does not exist.
 */
GroupHom comparison_iso(const FiltrationComplex& c, int n);
/// Same, reusing the cohomology of X.
GroupHom comparison_iso(const FiltrationComplex& c, int n, const PairCohomology& hx);

/**
 * Cochain map from the filtration complex of psi (on the target of f) to the
 * one of phi (on the source), induced by the pair maps
 * (phi_p, phi_{p-1}) -> (psi_p, psi_{p-1}). Throws NotARefinement unless
 * f(phi_p) lies in psi_p for every p.
 */
ChainMap filtered_pullback(const CubicalMap& f, const FiltrationComplex& phi, const FiltrationComplex& psi);
/// Refinement phi in psi of filtrations of the same space.
ChainMap refinement_map(const FiltrationComplex& phi, const FiltrationComplex& psi);

/**
 * Fiber of the restriction from the filtration complex of psi (on X) to the
 * one of phi (on Y). Throws IncompatibleFiltrations unless phi_p is inside
 * psi_p for every p.
 */
CochainComplex pair_filtration_complex(const SubcomplexPair& p, const FiltrationComplex& psi,
                                       const FiltrationComplex& phi);

/// A map whose direct images have to be absorbed by a target filtration.
struct CellularMap
{
    std::string name;
    CubicalMap map;
};

/**
 * Conditions of cellularity for a complex: (i) the skeleton filtration is a
 * good filtration of type dim X, (ii) every two good candidates are contained
 * in a good filtration, (iii) for each map out of X there is a good filtration
 * of the target containing the direct image of the skeleton filtration.
 */
Report check_cellularity(const CubicalComplex& x, const std::vector<Filtration>& candidates,
                         const std::vector<CellularMap>& maps = {});

/// Filtration of the target containing the image of phi, or nullopt.
std::optional<Filtration> image_witness(const CubicalMap& f, const Filtration& phi);
/// Good filtration containing both, or nullopt.
std::optional<Filtration> join_witness(const Filtration& a, const Filtration& b);

} // namespace cubenori
