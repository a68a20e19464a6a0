#include "cubenori/cohomology.hpp"

#include "cubenori/errors.hpp"

#include <algorithm>

namespace cubenori {

namespace {

const std::vector<Cube>& no_cubes()
{
    static const std::vector<Cube> none;
    return none;
}

nlohmann::json group_json(const FgAbGroup& g)
{
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& d : g.normal_orders())
        orders.push_back(d.get_str());
    return {{"group", g.describe()}, {"orders", orders}};
}

} // namespace

RelativeCochainComplex::RelativeCochainComplex(SubcomplexPair pair) : pair_(std::move(pair))
{
    const int top = pair_.total().dimension();
    for (int n = 0; n <= top; ++n)
        basis_.push_back(pair_.relative_cubes(n));
    for (int n = 0; n < top; ++n) {
        const auto& rows = basis_[static_cast<std::size_t>(n + 1)];
        const auto& cols = basis_[static_cast<std::size_t>(n)];
        IntMatrix d(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [face, sign] : rows[r].boundary())
                if (auto c = index_of(face))
                    d(r, *c) += sign;
        coboundaries_.push_back(std::move(d));
    }
}

const std::vector<Cube>& RelativeCochainComplex::basis(int n) const
{
    if (n < 0 || n >= static_cast<int>(basis_.size()))
        return no_cubes();
    return basis_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> RelativeCochainComplex::index_of(const Cube& c) const
{
    const auto& b = basis(c.dimension());
    const auto it = std::lower_bound(b.begin(), b.end(), c);
    if (it == b.end() || !(*it == c))
        return std::nullopt;
    return static_cast<std::size_t>(it - b.begin());
}

CochainComplex RelativeCochainComplex::complex(const Integer& modulus) const
{
    std::vector<std::size_t> ranks;
    for (const auto& b : basis_)
        ranks.push_back(b.size());
    std::vector<IntMatrix> d = coboundaries_;
    if (sgn(modulus) != 0)
        for (auto& m : d)
            m = m.reduced_mod(modulus);
    return CochainComplex(0, std::move(ranks), std::move(d), modulus);
}

// ---------------------------------------------------------------------------

PairCohomology::PairCohomology(SubcomplexPair pair, Integer modulus)
    : cochains_(std::make_shared<const RelativeCochainComplex>(std::move(pair))),
      complex_(cochains_->complex(modulus)),
      trivial_(cohomology_at(CochainComplex(0, {}, {}, modulus), 0))
{
    for (int n = complex_.lo(); n <= complex_.hi(); ++n)
        degrees_.push_back(cohomology_at(complex_, n));
}

const Cohomology& PairCohomology::at(int n) const
{
    if (n < complex_.lo() || n > complex_.hi())
        return trivial_;
    return degrees_[static_cast<std::size_t>(n - complex_.lo())];
}

CohomologyValue relative_cohomology(const SubcomplexPair& p, int n)
{
    const PairCohomology h(p);
    return CohomologyValue{p, n, h.group(n), h.at(n).cocycles()};
}

// ---------------------------------------------------------------------------

namespace {

IntMatrix pullback_matrix(const PairMap& f, int n, const RelativeCochainComplex& from,
                          const RelativeCochainComplex& to)
{
    const auto& rows = to.basis(n);
    IntMatrix m(rows.size(), from.basis(n).size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int sign = f.map().chain_sign(rows[r]);
        if (sign == 0)
            continue;
        if (auto c = from.index_of(f.map().image(rows[r])))
            m(r, *c) = sign;
    }
    return m;
}

ChainMap build_cochain_map(const PairMap& f, const RelativeCochainComplex& from, const RelativeCochainComplex& to,
                           const CochainComplex& from_complex, const CochainComplex& to_complex)
{
    std::vector<IntMatrix> parts;
    for (int n = 0; n <= to_complex.hi(); ++n)
        parts.push_back(pullback_matrix(f, n, from, to));
    return ChainMap(from_complex, to_complex, std::move(parts), 0);
}

} // namespace

ChainMap cochain_map(const PairMap& f, const Integer& modulus)
{
    const RelativeCochainComplex from(f.target());
    const RelativeCochainComplex to(f.source());
    return build_cochain_map(f, from, to, from.complex(modulus), to.complex(modulus));
}

ChainMap cochain_map(const PairMap& f, const PairCohomology& from, const PairCohomology& to)
{
    if (!(from.pair() == f.target()) || !(to.pair() == f.source()))
        throw CompositionMismatch("cohomology supplied for the wrong pairs");
    return build_cochain_map(f, from.cochains(), to.cochains(), from.complex(), to.complex());
}

GroupHom pullback(const PairMap& f, int n)
{
    return pullback(f, n, PairCohomology(f.target()), PairCohomology(f.source()));
}

GroupHom pullback(const PairMap& f, int n, const PairCohomology& from, const PairCohomology& to)
{
    const ChainMap c = cochain_map(f, from, to);
    return induced_hom_on_cohomology(c, n, from.at(n), to.at(n));
}

GroupHom connecting(const Triple& t, int n)
{
    return connecting(t, n, PairCohomology(t.inner()), PairCohomology(t.outer()));
}

GroupHom connecting(const Triple& t, int n, const PairCohomology& inner, const PairCohomology& outer)
{
    if (!(inner.pair() == t.inner()) || !(outer.pair() == t.outer()))
        throw NotATriple("cohomology supplied for the wrong pairs");
    const Cohomology& source = inner.at(n);
    const Cohomology& target = outer.at(n + 1);
    const auto& cells = outer.cochains().basis(n + 1);
    const RelativeCochainComplex& yz = inner.cochains();

    IntMatrix m(target.group().generator_count(), source.group().generator_count());
    for (std::size_t g = 0; g < source.group().generator_count(); ++g) {
        const IntVector c = source.cocycle(g);
        // extend by zero over X, take the coboundary, read it on X \ Y
        IntVector image(cells.size());
        for (std::size_t r = 0; r < cells.size(); ++r)
            for (const auto& [face, sign] : cells[r].boundary())
                if (auto i = yz.index_of(face))
                    image[r] += sign * c[*i];
        const IntVector coords = target.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i)
            m(i, g) = coords[i];
    }
    return GroupHom(source.group(), target.group(), std::move(m));
}

// ---------------------------------------------------------------------------

TripleSequence::TripleSequence(const Triple& t, Integer modulus)
    : triple_(t), outer_(t.outer(), modulus), whole_(t.whole(), modulus), inner_(t.inner(), std::move(modulus))
{
}

GroupHom TripleSequence::to_whole(int n) const
{
    return pullback(PairMap::inclusion(whole_.pair(), outer_.pair()), n, outer_, whole_);
}

GroupHom TripleSequence::to_inner(int n) const
{
    return pullback(PairMap::inclusion(inner_.pair(), whole_.pair()), n, whole_, inner_);
}

GroupHom TripleSequence::connecting(int n) const
{
    return cubenori::connecting(triple_, n, inner_, outer_);
}

Report check_les_of_triple(const Triple& t, int lo, int hi)
{
    Report report("les");
    const TripleSequence s(t);
    for (int n = lo; n <= hi; ++n) {
        const GroupHom a = s.to_whole(n);
        const GroupHom b = s.to_inner(n);
        const GroupHom d = s.connecting(n);
        const GroupHom d_prev = s.connecting(n - 1);
        report.add("H^" + std::to_string(n) + "(X,Y)", is_exact_at(a, d_prev), group_json(s.outer().group(n)));
        report.add("H^" + std::to_string(n) + "(X,Z)", is_exact_at(b, a), group_json(s.whole().group(n)));
        report.add("H^" + std::to_string(n) + "(Y,Z)", is_exact_at(d, b), group_json(s.inner().group(n)));
    }
    return report;
}

Report check_les_of_triple(const Triple& t)
{
    return check_les_of_triple(t, -1, t.x().dimension() + 1);
}

// ---------------------------------------------------------------------------

GroupHom excision_map(const Cover& c, int n)
{
    const SubcomplexPair xz(c.x(), c.z());
    const SubcomplexPair yw(c.y(), c.overlap());
    return pullback(PairMap::inclusion(yw, xz), n);
}

Report mayer_vietoris_check(const Cover& c, int lo, int hi)
{
    Report report("mayer_vietoris");
    const SubcomplexPair x_abs = SubcomplexPair::absolute(c.x());
    const SubcomplexPair y_abs = SubcomplexPair::absolute(c.y());
    const SubcomplexPair z_abs = SubcomplexPair::absolute(c.z());
    const SubcomplexPair w_abs = SubcomplexPair::absolute(c.overlap());
    const SubcomplexPair xz(c.x(), c.z());
    const SubcomplexPair yw(c.y(), c.overlap());

    const PairCohomology hx(x_abs), hy(y_abs), hz(z_abs), hw(w_abs), hxz(xz), hyw(yw);
    const PairMap x_to_xz = PairMap::inclusion(x_abs, xz);
    const PairMap y_in_x = PairMap::inclusion(y_abs, x_abs);
    const PairMap z_in_x = PairMap::inclusion(z_abs, x_abs);
    const PairMap w_in_y = PairMap::inclusion(w_abs, y_abs);
    const PairMap w_in_z = PairMap::inclusion(w_abs, z_abs);
    const PairMap yw_in_xz = PairMap::inclusion(yw, xz);
    const Triple yw_triple(c.y(), c.overlap(), CubicalComplex::empty(c.x().ambient()));

    auto restrict_pair = [&](int n) {
        return pairing(pullback(y_in_x, n, hx, hy), pullback(z_in_x, n, hx, hz));
    };
    auto difference = [&](int n) {
        return copairing(pullback(w_in_y, n, hy, hw), -pullback(w_in_z, n, hz, hw));
    };
    auto boundary = [&](int n) {
        // H^n(Y n Z) -> H^{n+1}(Y, Y n Z) -> H^{n+1}(X, Z) -> H^{n+1}(X)
        const GroupHom delta = cubenori::connecting(yw_triple, n, hw, hyw);
        const GroupHom excision = pullback(yw_in_xz, n + 1, hxz, hyw);
        if (!excision.is_isomorphism())
            throw ExcisionFailed("excision is not invertible in degree " + std::to_string(n + 1));
        return compose(pullback(x_to_xz, n + 1, hxz, hx), compose(excision.inverse(), delta));
    };

    for (int n = lo; n <= hi; ++n) {
        const GroupHom r = restrict_pair(n);
        const GroupHom d = difference(n);
        const GroupHom b = boundary(n);
        report.add("H^" + std::to_string(n) + "(X)", is_exact_at(r, boundary(n - 1)), group_json(hx.group(n)));
        report.add("H^" + std::to_string(n) + "(Y)+H^" + std::to_string(n) + "(Z)", is_exact_at(d, r),
                   group_json(r.target()));
        report.add("H^" + std::to_string(n) + "(YnZ)", is_exact_at(b, d), group_json(hw.group(n)));
    }
    return report;
}

Report mayer_vietoris_check(const Cover& c)
{
    return mayer_vietoris_check(c, -1, c.x().dimension() + 1);
}

Cohomology coefficient_reduction(const SubcomplexPair& p, int n, const Integer& modulus)
{
    if (modulus < 2)
        throw std::invalid_argument("coefficient_reduction: modulus must be at least 2");
    return PairCohomology(p, modulus).at(n);
}

ChainMap restriction_map(const SubcomplexPair& p)
{
    const SubcomplexPair x = SubcomplexPair::absolute(p.total());
    const SubcomplexPair y = SubcomplexPair::absolute(p.sub());
    return cochain_map(PairMap::inclusion(y, x));
}

nlohmann::json describe_groups(const PairCohomology& h, int lo, int hi)
{
    nlohmann::json out = nlohmann::json::object();
    for (int n = lo; n <= hi; ++n)
        out[std::to_string(n)] = h.group(n).describe();
    return out;
}

} // namespace cubenori
