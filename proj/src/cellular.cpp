#include "cubenori/cellular.hpp"

#include "cubenori/errors.hpp"

#include <algorithm>

namespace cubenori {

GoodPairVerdict certify_good_pair(const SubcomplexPair& p)
{
    return certify_good_pair(PairCohomology(p));
}

GoodPairVerdict certify_good_pair(const PairCohomology& h)
{
    GoodPairVerdict verdict;
    std::vector<std::pair<int, std::string>> witness;
    std::vector<int> nonzero;
    const int top = h.pair().total().dimension() + 1;
    for (int m = -1; m <= top; ++m) {
        witness.emplace_back(m, h.group(m).describe());
        if (!h.group(m).is_trivial())
            nonzero.push_back(m);
    }
    if (nonzero.size() > 1) {
        verdict.offending_degree = nonzero[1];
        verdict.refusal = "nonzero in degrees " + std::to_string(nonzero[0]) + " and " + std::to_string(nonzero[1]);
        return verdict;
    }
    const int degree = nonzero.empty() ? 0 : nonzero[0];
    if (!h.group(degree).is_free()) {
        verdict.offending_degree = degree;
        verdict.refusal = "H^" + std::to_string(degree) + " = " + h.group(degree).describe() + " has torsion";
        return verdict;
    }
    verdict.certificate = GoodPairCertificate{h.pair(), degree, h.group(degree), std::move(witness)};
    return verdict;
}

// ---------------------------------------------------------------------------

Filtration::Filtration(CubicalComplex space, std::vector<CubicalComplex> levels)
    : space_(std::move(space)), levels_(std::move(levels)), empty_(CubicalComplex::empty(space_.ambient()))
{
    for (std::size_t p = 0; p < levels_.size(); ++p) {
        if (levels_[p].is_empty())
            levels_[p] = empty_;
        if (!levels_[p].is_subcomplex_of(space_))
            throw NotASubcomplex("filtration level " + std::to_string(p) + " is not inside the space");
        if (p > 0 && !levels_[p - 1].is_subcomplex_of(levels_[p]))
            throw NotASubcomplex("filtration levels " + std::to_string(p - 1) + " and " + std::to_string(p) +
                                 " are not nested");
    }
    if (levels_.empty() ? !space_.is_empty() : !(levels_.back() == space_))
        throw NotASubcomplex("top filtration level must be the whole space");
}

const CubicalComplex& Filtration::level(int p) const
{
    if (p < 0)
        return empty_;
    if (p > type())
        return space_;
    return levels_[static_cast<std::size_t>(p)];
}

SubcomplexPair Filtration::step(int p) const
{
    return SubcomplexPair(level(p), level(p - 1));
}

bool Filtration::contains(const Filtration& other) const
{
    const int top = std::max(type(), other.type());
    for (int p = 0; p <= top; ++p)
        if (!other.level(p).is_subcomplex_of(level(p)))
            return false;
    return true;
}

Filtration skeleton_filtration(const CubicalComplex& x)
{
    std::vector<CubicalComplex> levels;
    for (int p = 0; p <= x.dimension(); ++p)
        levels.push_back(skeleton(x, p));
    return Filtration(x, std::move(levels));
}

Filtration join(const Filtration& a, const Filtration& b)
{
    if (!(a.space() == b.space()))
        throw NotASubcomplex("joining filtrations of different spaces");
    std::vector<CubicalComplex> levels;
    for (int p = 0; p <= std::max(a.type(), b.type()); ++p)
        levels.push_back(join(a.level(p), b.level(p), a.space()));
    return Filtration(a.space(), std::move(levels));
}

bool is_good(const Filtration& f)
{
    for (int p = 0; p <= f.type(); ++p) {
        const GoodPairVerdict v = certify_good_pair(f.step(p));
        if (!v.good())
            return false;
        if (v.certificate->degree != p && !v.certificate->group.is_trivial())
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

ConiveauPage::ConiveauPage(Filtration f) : filtration_(std::move(f))
{
    for (int p = 0; p <= filtration_.type(); ++p) {
        columns_.emplace_back(filtration_.step(p));
        levels_.emplace_back(SubcomplexPair::absolute(filtration_.level(p)));
    }
}

const PairCohomology& ConiveauPage::column(int p) const
{
    if (p < 0 || p > type())
        throw std::out_of_range("coniveau column " + std::to_string(p) + " outside the filtration");
    return columns_[static_cast<std::size_t>(p)];
}

const FgAbGroup& ConiveauPage::entry(int p, int q) const
{
    if (p < 0 || p > type())
        return trivial_;
    return column(p).group(p + q);
}

GroupHom ConiveauPage::d1(int p, int q) const
{
    if (p < 0 || p >= type())
        return GroupHom::zero(entry(p, q), entry(p + 1, q));
    const int n = p + q;
    const auto& level = levels_[static_cast<std::size_t>(p)];
    const GroupHom forget = pullback(PairMap::inclusion(level.pair(), column(p).pair()), n, column(p), level);
    const Triple t(filtration_.level(p + 1), filtration_.level(p), CubicalComplex());
    const GroupHom delta = connecting(t, n, level, column(p + 1));
    return compose(delta, forget);
}

bool ConiveauPage::degenerate() const
{
    const int top = filtration_.space().dimension() + 1;
    for (int p = 0; p <= type(); ++p)
        for (int n = -1; n <= top; ++n)
            if (n != p && !entry(p, n - p).is_trivial())
                return false;
    return true;
}

Report ConiveauPage::check_d1_squared() const
{
    Report report("d1_squared");
    const int top = filtration_.space().dimension() + 1;
    for (int p = -1; p <= type(); ++p)
        for (int n = -1; n <= top; ++n) {
            const int q = n - p;
            report.add("E1^{" + std::to_string(p) + "," + std::to_string(q) + "}",
                       compose(d1(p + 1, q), d1(p, q)).is_zero());
        }
    return report;
}

// ---------------------------------------------------------------------------

FiltrationComplex::FiltrationComplex(Filtration f)
{
    if (!is_good(f))
        throw NotGood("filtration has a step that is not good in its own degree");
    page_ = std::make_shared<const ConiveauPage>(std::move(f));
    const int d = page_->type();
    if (d < 0) {
        complex_ = CochainComplex::zero();
        return;
    }
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int p = 0; p <= d; ++p)
        ranks.push_back(page_->entry(p, 0).normal_dimension());
    for (int p = 0; p < d; ++p)
        diffs.push_back(page_->d1(p, 0).normal_matrix());
    complex_ = CochainComplex(0, std::move(ranks), std::move(diffs));
}

IntVector FiltrationComplex::to_entry(int p, const IntVector& cochain) const
{
    return page_->entry(p, 0).from_normal(cochain);
}

CochainComplex filtration_complex(const Filtration& f)
{
    return FiltrationComplex(f).complex();
}

GroupHom comparison_iso(const FiltrationComplex& c, int n)
{
    return comparison_iso(c, n, PairCohomology(SubcomplexPair::absolute(c.filtration().space())));
}

GroupHom comparison_iso(const FiltrationComplex& c, int n, const PairCohomology& hx)
{
    const Cohomology h = cohomology_at(c.complex(), n);
    const FgAbGroup& target = hx.group(n);
    if (n < 0 || n > c.filtration().type())
        return GroupHom::zero(h.group(), target);

    const Filtration& f = c.filtration();
    const SubcomplexPair rel(f.space(), f.level(n - 1));
    const PairCohomology h_rel(rel);
    const PairCohomology& column = c.page().column(n);
    const GroupHom restrict = pullback(PairMap::inclusion(column.pair(), rel), n, h_rel, column);
    const GroupHom forget = pullback(PairMap::inclusion(hx.pair(), rel), n, h_rel, hx);

    IntMatrix m(target.generator_count(), h.group().generator_count());
    for (std::size_t j = 0; j < h.group().generator_count(); ++j) {
        const IntVector entry = c.to_entry(n, h.cocycle(j));
        const auto lift = restrict.preimage(entry);
        if (!lift)
            throw NotGood("class in degree " + std::to_string(n) + " does not extend over the space");
        const IntVector image = forget.apply(*lift);
        for (std::size_t i = 0; i < image.size(); ++i)
            m(i, j) = image[i];
    }
    return GroupHom(h.group(), target, std::move(m));
}

ChainMap filtered_pullback(const CubicalMap& f, const FiltrationComplex& phi, const FiltrationComplex& psi)
{
    const Filtration& a = phi.filtration();
    const Filtration& b = psi.filtration();
    if (!(f.source() == a.space()) || !(f.target() == b.space()))
        throw NotARefinement("map does not run between the filtered spaces");
    const int top = std::max(a.type(), b.type());
    for (int p = 0; p <= top; ++p)
        if (!direct_image(f, a.level(p)).is_subcomplex_of(b.level(p)))
            throw NotARefinement("image of level " + std::to_string(p) + " leaves the target level");

    std::vector<IntMatrix> parts;
    for (int p = 0; p <= a.type(); ++p) {
        const std::size_t rows = phi.complex().rank(p);
        const std::size_t cols = psi.complex().rank(p);
        if (p > b.type()) {
            parts.emplace_back(rows, cols);
            continue;
        }
        const CubicalMap restricted(a.level(p), b.level(p), f.rules());
        const PairMap pm(a.step(p), b.step(p), restricted);
        parts.push_back(pullback(pm, p, psi.page().column(p), phi.page().column(p)).normal_matrix());
    }
    return ChainMap(psi.complex(), phi.complex(), std::move(parts), 0);
}

ChainMap refinement_map(const FiltrationComplex& phi, const FiltrationComplex& psi)
{
    return filtered_pullback(CubicalMap::identity(phi.filtration().space()), phi, psi);
}

CochainComplex pair_filtration_complex(const SubcomplexPair& p, const FiltrationComplex& psi,
                                       const FiltrationComplex& phi)
{
    const Filtration& on_x = psi.filtration();
    const Filtration& on_y = phi.filtration();
    if (!(on_x.space() == p.total()) || !(on_y.space() == p.sub()))
        throw IncompatibleFiltrations("filtrations are not on the pair's spaces");
    if (!on_x.contains(on_y))
        throw IncompatibleFiltrations("a level of the subcomplex filtration leaves the matching level");
    return mapping_fiber(filtered_pullback(CubicalMap::inclusion(p.sub(), p.total()), phi, psi));
}

// ---------------------------------------------------------------------------

std::optional<Filtration> join_witness(const Filtration& a, const Filtration& b)
{
    Filtration j = join(a, b);
    if (is_good(j))
        return j;
    std::vector<CubicalComplex> levels;
    for (int p = 0; p <= j.type(); ++p)
        levels.push_back(join(j.level(p), skeleton(j.space(), p), j.space()));
    Filtration widened(j.space(), std::move(levels));
    if (is_good(widened))
        return widened;
    return std::nullopt;
}

std::optional<Filtration> image_witness(const CubicalMap& f, const Filtration& phi)
{
    const CubicalComplex& target = f.target();
    const int top = std::max(phi.type(), target.dimension());
    std::vector<CubicalComplex> levels;
    for (int p = 0; p <= top; ++p)
        levels.push_back(join(direct_image(f, phi.level(p)), skeleton(target, p), target));
    Filtration psi(target, std::move(levels));
    if (is_good(psi))
        return psi;
    return std::nullopt;
}

Report check_cellularity(const CubicalComplex& x, const std::vector<Filtration>& candidates,
                         const std::vector<CellularMap>& maps)
{
    Report report("cellularity");
    const Filtration skel = skeleton_filtration(x);
    report.add("i/skeleton", skel.type() == x.dimension() && is_good(skel),
               {{"type", skel.type()}, {"dimension", x.dimension()}});

    std::vector<Filtration> good = {skel};
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!(candidates[k].space() == x))
            throw NotASubcomplex("candidate filtration " + std::to_string(k) + " is on another space");
        if (is_good(candidates[k]))
            good.push_back(candidates[k]);
    }
    for (std::size_t a = 0; a < good.size(); ++a)
        for (std::size_t b = a; b < good.size(); ++b) {
            const auto w = join_witness(good[a], good[b]);
            const bool ok = w && w->contains(good[a]) && w->contains(good[b]);
            report.add("ii/" + std::to_string(a) + "+" + std::to_string(b), ok,
                       {{"type", w ? w->type() : -2}});
        }
    for (const auto& m : maps) {
        if (!(m.map.source() == x))
            continue;
        const auto w = image_witness(m.map, skel);
        bool ok = w.has_value();
        if (ok)
            for (int p = 0; p <= skel.type(); ++p)
                ok = ok && direct_image(m.map, skel.level(p)).is_subcomplex_of(w->level(p));
        report.add("iii/" + m.name, ok);
    }
    return report;
}

} // namespace cubenori
