#include "cubenori/tensor.hpp"

#include "cubenori/errors.hpp"

#include <bit>
#include <map>
#include <memory>

namespace cubenori {

TensorOfGroups tensor_group(const FgAbGroup& a, const FgAbGroup& b)
{
    const std::size_t ga = a.generator_count();
    const std::size_t gb = b.generator_count();
    const IntMatrix rel = hstack(kronecker(a.relations(), IntMatrix::identity(gb)),
                                 kronecker(IntMatrix::identity(ga), b.relations()));
    return TensorOfGroups{a, b, FgAbGroup(rel)};
}

GroupHom tensor_hom(const GroupHom& f, const GroupHom& g)
{
    return GroupHom(tensor_group(f.source(), g.source()).product, tensor_group(f.target(), g.target()).product,
                    kronecker(f.matrix(), g.matrix()));
}

GroupHom tensor_swap(const FgAbGroup& a, const FgAbGroup& b)
{
    const TensorOfGroups ab = tensor_group(a, b);
    const TensorOfGroups ba = tensor_group(b, a);
    IntMatrix m(ba.product.generator_count(), ab.product.generator_count());
    for (std::size_t i = 0; i < a.generator_count(); ++i)
        for (std::size_t j = 0; j < b.generator_count(); ++j)
            m(ba.index(j, i), ab.index(i, j)) = 1;
    return GroupHom(ab.product, ba.product, std::move(m));
}

int external_sign(int n, int m)
{
    return ((n * m) % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------

IntVector cross_cochain(const RelativeCochainComplex& p, const RelativeCochainComplex& q,
                        const RelativeCochainComplex& pq, int n, const IntVector& a, int m, const IntVector& b)
{
    const std::size_t split = p.pair().total().ambient();
    const std::size_t ambient = pq.pair().total().ambient();
    const auto& cells = pq.basis(n + m);
    const int sign = external_sign(n, m);
    IntVector out(cells.size());
    for (std::size_t r = 0; r < cells.size(); ++r) {
        const Cube left = cells[r].slice(0, split);
        if (left.dimension() != n)
            continue;
        const auto i = p.index_of(left);
        const auto j = q.index_of(cells[r].slice(split, ambient));
        if (i && j)
            out[r] = sign * a[*i] * b[*j];
    }
    return out;
}

ExternalProduct cross_product(const PairCohomology& hp, const PairCohomology& hq, const PairCohomology& hpq,
                              int n, int m)
{
    if (!(hpq.pair() == pair_product(hp.pair(), hq.pair())))
        throw CompositionMismatch("cohomology of the product supplied for the wrong pair");
    const Cohomology& left = hp.at(n);
    const Cohomology& right = hq.at(m);
    const Cohomology& target = hpq.at(n + m);
    TensorOfGroups source = tensor_group(left.group(), right.group());
    IntMatrix mat(target.group().generator_count(), source.product.generator_count());
    for (std::size_t i = 0; i < left.group().generator_count(); ++i)
        for (std::size_t j = 0; j < right.group().generator_count(); ++j) {
            const IntVector c =
                cross_cochain(hp.cochains(), hq.cochains(), hpq.cochains(), n, left.cocycle(i), m, right.cocycle(j));
            const IntVector coords = target.coordinates(c);
            for (std::size_t k = 0; k < coords.size(); ++k)
                mat(k, source.index(i, j)) = coords[k];
        }
    GroupHom map(source.product, target.group(), std::move(mat));
    return ExternalProduct{hp.pair(), hq.pair(), n, m, std::move(source), std::move(map)};
}

ExternalProduct cross_product(const SubcomplexPair& p, const SubcomplexPair& q, int n, int m)
{
    return cross_product(PairCohomology(p), PairCohomology(q), PairCohomology(pair_product(p, q)), n, m);
}

// ---------------------------------------------------------------------------

IntVector cup_cochain(const RelativeCochainComplex& xy, const RelativeCochainComplex& xz,
                      const RelativeCochainComplex& target, int n, const IntVector& a, int m, const IntVector& b)
{
    const auto& cells = target.basis(n + m);
    IntVector out(cells.size());
    if (n < 0 || m < 0)
        return out;
    const int kappa = external_sign(n, m);
    for (std::size_t r = 0; r < cells.size(); ++r) {
        const Cube& q = cells[r];
        const auto free = q.nondegenerate_coordinates();
        const std::size_t k = free.size();
        // J = coordinates kept whole in the front face, as a bit mask over free
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (std::popcount(mask) != n)
                continue;
            Cube front = q;
            Cube back = q;
            int koszul = 0;
            int back_so_far = 0;
            for (std::size_t t = 0; t < k; ++t) {
                if (mask & (1u << t)) {
                    back = back.face(free[t], true);
                    koszul += back_so_far;
                } else {
                    front = front.face(free[t], false);
                    ++back_so_far;
                }
            }
            const auto i = xy.index_of(front);
            const auto j = xz.index_of(back);
            if (i && j)
                out[r] += (koszul % 2 ? -kappa : kappa) * a[*i] * b[*j];
        }
    }
    return out;
}

GroupHom cup_product(const CubicalComplex& x, const CubicalComplex& y, const CubicalComplex& z, int n, int m)
{
    const PairCohomology hy(SubcomplexPair(x, y));
    const PairCohomology hz(SubcomplexPair(x, z));
    const PairCohomology hyz(SubcomplexPair(x, join(y, z, x)));
    const Cohomology& left = hy.at(n);
    const Cohomology& right = hz.at(m);
    const Cohomology& target = hyz.at(n + m);
    const TensorOfGroups source = tensor_group(left.group(), right.group());
    IntMatrix mat(target.group().generator_count(), source.product.generator_count());
    for (std::size_t i = 0; i < left.group().generator_count(); ++i)
        for (std::size_t j = 0; j < right.group().generator_count(); ++j) {
            const IntVector c =
                cup_cochain(hy.cochains(), hz.cochains(), hyz.cochains(), n, left.cocycle(i), m, right.cocycle(j));
            const IntVector coords = target.coordinates(c);
            for (std::size_t k = 0; k < coords.size(); ++k)
                mat(k, source.index(i, j)) = coords[k];
        }
    return GroupHom(source.product, target.group(), std::move(mat));
}

// ---------------------------------------------------------------------------

namespace {

std::string pair_key(const SubcomplexPair& p)
{
    return std::to_string(p.total().ambient()) + ":" + p.total().to_string() + "|" + p.sub().to_string();
}

/// Cohomology of pairs computed at most once per check.
class CohomologyCache
{
public:
    const PairCohomology& operator()(const SubcomplexPair& p)
    {
        auto& slot = cache_[pair_key(p)];
        if (!slot)
            slot = std::make_unique<PairCohomology>(p);
        return *slot;
    }

    GroupHom kappa(const SubcomplexPair& p, const SubcomplexPair& q, int n, int m)
    {
        const PairCohomology& hp = (*this)(p);
        const PairCohomology& hq = (*this)(q);
        const PairCohomology& hpq = (*this)(pair_product(p, q));
        return cross_product(hp, hq, hpq, n, m).map;
    }

private:
    std::map<std::string, std::unique_ptr<PairCohomology>> cache_;
};

/// Same matrix up to relations of the common target.
bool agree(const IntMatrix& a, const IntMatrix& b, const FgAbGroup& target)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!target.is_zero(a.column(j) - b.column(j)))
            return false;
    return true;
}

nlohmann::json mismatch(const IntMatrix& a, const IntMatrix& b)
{
    return {{"left", a.to_string()}, {"right", b.to_string()}};
}

std::string degrees(int n, int m)
{
    return "n=" + std::to_string(n) + ",n'=" + std::to_string(m);
}

void add_comparison(Report& report, const std::string& name, const GroupHom& lhs, const GroupHom& rhs)
{
    const bool ok = agree(lhs.matrix(), rhs.matrix(), lhs.target());
    report.add(name, ok, ok ? nlohmann::json::object() : mismatch(lhs.matrix(), rhs.matrix()));
}

PairMap swap_map(const SubcomplexPair& p, const SubcomplexPair& q)
{
    return PairMap(pair_product(p, q), pair_product(q, p), CubicalMap::swap(p.total(), q.total()));
}

} // namespace

Report check_ax0_ax1(const std::vector<SubcomplexPair>& pairs, const std::vector<PairMap>& maps, int max_degree)
{
    Report report("ax0_ax1");
    CohomologyCache h;
    auto top = [](const SubcomplexPair& p) { return p.total().dimension(); };
    auto nonzero = [&](const SubcomplexPair& p, int n) { return !h(p).group(n).is_trivial(); };

    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const SubcomplexPair& p = pairs[a];
            const SubcomplexPair& q = pairs[b];
            const std::string tag = std::to_string(a) + "x" + std::to_string(b);
            for (int n = 0; n <= top(p); ++n)
                for (int m = 0; m <= top(q) && n + m <= max_degree; ++m) {
                    if (!nonzero(p, n) || !nonzero(q, m))
                        continue;
                    const GroupHom lhs = compose(pullback(swap_map(p, q), n + m, h(pair_product(q, p)),
                                                          h(pair_product(p, q))),
                                                 compose(h.kappa(q, p, m, n),
                                                         tensor_swap(h(p).group(n), h(q).group(m))));
                    const GroupHom rhs = h.kappa(p, q, n, m).scaled(external_sign(n, m));
                    add_comparison(report, "swap " + tag + " " + degrees(n, m), lhs, rhs);
                }
            for (std::size_t c = 0; c < pairs.size(); ++c) {
                const SubcomplexPair& r = pairs[c];
                const SubcomplexPair pq = pair_product(p, q);
                const SubcomplexPair qr = pair_product(q, r);
                if (!(pair_product(pq, r) == pair_product(p, qr))) {
                    report.add("assoc " + tag + "x" + std::to_string(c), false,
                               {{"reason", "products of pairs differ"}});
                    continue;
                }
                for (int n = 0; n <= top(p); ++n)
                    for (int m = 0; m <= top(q); ++m)
                        for (int l = 0; l <= top(r) && n + m + l <= max_degree; ++l) {
                            if (!nonzero(p, n) || !nonzero(q, m) || !nonzero(r, l))
                                continue;
                            const GroupHom first = compose(
                                h.kappa(pq, r, n + m, l),
                                tensor_hom(h.kappa(p, q, n, m), GroupHom::identity(h(r).group(l))));
                            const GroupHom second = compose(
                                h.kappa(p, qr, n, m + l),
                                tensor_hom(GroupHom::identity(h(p).group(n)), h.kappa(q, r, m, l)));
                            add_comparison(report,
                                           "assoc " + tag + "x" + std::to_string(c) + " " + degrees(n, m) +
                                               ",n''=" + std::to_string(l),
                                           first, second);
                        }
            }
        }

    for (std::size_t k = 0; k < maps.size(); ++k) {
        const PairMap& f = maps[k];
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const SubcomplexPair& q = pairs[b];
            const PairMap id = PairMap::identity(q);
            const PairMap left = pair_product(f, id);
            const PairMap right = pair_product(id, f);
            const std::string tag = "map" + std::to_string(k) + " pair" + std::to_string(b);
            for (int n = 0; n <= std::max(top(f.source()), top(f.target())); ++n)
                for (int m = 0; m <= top(q) && n + m <= max_degree; ++m) {
                    if (!nonzero(q, m) || (!nonzero(f.source(), n) && !nonzero(f.target(), n)))
                        continue;
                    const GroupHom fn = pullback(f, n, h(f.target()), h(f.source()));
                    const GroupHom idm = GroupHom::identity(h(q).group(m));
                    const GroupHom first_lhs =
                        compose(pullback(left, n + m, h(left.target()), h(left.source())), h.kappa(f.target(), q, n, m));
                    const GroupHom first_rhs = compose(h.kappa(f.source(), q, n, m), tensor_hom(fn, idm));
                    add_comparison(report, "natural first " + tag + " " + degrees(n, m), first_lhs, first_rhs);
                    const GroupHom second_lhs = compose(pullback(right, m + n, h(right.target()), h(right.source())),
                                                        h.kappa(q, f.target(), m, n));
                    const GroupHom second_rhs = compose(h.kappa(q, f.source(), m, n), tensor_hom(idm, fn));
                    add_comparison(report, "natural second " + tag + " " + degrees(m, n), second_lhs, second_rhs);
                }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

/**
 * The three-step boundary of a product pair: restriction
 * H^k(A, B + C) -> H^k(A, B), inverse excision
 * H^k(A, B) <- H^k(W, D) for W = A + D with A n D = B, then the connecting
 * map of the triple D in W in T.
 */
GroupHom product_boundary(CohomologyCache& h, int k, const SubcomplexPair& start, const SubcomplexPair& restricted,
                          const SubcomplexPair& excised, const Triple& t)
{
    const GroupHom restrict = pullback(PairMap::inclusion(restricted, start), k, h(start), h(restricted));
    const GroupHom excision = pullback(PairMap::inclusion(restricted, excised), k, h(excised), h(restricted));
    if (!excision.is_isomorphism())
        throw ExcisionFailed("excision is not invertible in degree " + std::to_string(k));
    const GroupHom delta = connecting(t, k, h(t.inner()), h(t.outer()));
    return compose(delta, compose(excision.inverse(), restrict));
}

} // namespace

Report check_ax2(const Triple& t, const SubcomplexPair& q, int n, int m)
{
    Report report("ax2");
    CohomologyCache h;
    const CubicalComplex& x = t.x();
    const CubicalComplex& y = t.y();
    const CubicalComplex& xp = q.total();
    const CubicalComplex& yp = q.sub();
    const int k = n + m;

    const SubcomplexPair start = pair_product(t.inner(), q);
    const SubcomplexPair restricted(product(y, xp), product(y, yp));
    const CubicalComplex xyp = product(x, yp);
    const CubicalComplex xx = product(x, xp);
    const CubicalComplex w = join(xyp, product(y, xp), xx);
    const SubcomplexPair excised(w, xyp);
    const Triple outer_triple(xx, w, xyp);

    const GroupHom delta = product_boundary(h, k, start, restricted, excised, outer_triple);
    const GroupHom top = h.kappa(t.inner(), q, n, m);
    const GroupHom boundary = connecting(t, n, h(t.inner()), h(t.outer()));
    const GroupHom bottom = compose(h.kappa(t.outer(), q, n + 1, m),
                                    tensor_hom(boundary, GroupHom::identity(h(q).group(m))));
    add_comparison(report, "boundary " + degrees(n, m), compose(delta, top), bottom.scaled(external_sign(1, m)));
    return report;
}

Report check_ax3(const SubcomplexPair& q, const Triple& t, int m, int n)
{
    Report report("ax3");
    CohomologyCache h;
    const CubicalComplex& x = t.x();
    const CubicalComplex& y = t.y();
    const CubicalComplex& xp = q.total();
    const CubicalComplex& yp = q.sub();
    const int k = m + n;

    const SubcomplexPair start = pair_product(q, t.inner());
    const SubcomplexPair restricted(product(xp, y), product(yp, y));
    const CubicalComplex ypx = product(yp, x);
    const CubicalComplex xx = product(xp, x);
    const CubicalComplex w = join(product(xp, y), ypx, xx);
    const SubcomplexPair excised(w, ypx);
    const Triple outer_triple(xx, w, ypx);

    const GroupHom delta = product_boundary(h, k, start, restricted, excised, outer_triple);
    const GroupHom top = h.kappa(q, t.inner(), m, n);
    const GroupHom boundary = connecting(t, n, h(t.inner()), h(t.outer()));
    const GroupHom bottom = compose(h.kappa(q, t.outer(), m, n + 1),
                                    tensor_hom(GroupHom::identity(h(q).group(m)), boundary));
    const GroupHom lhs = compose(delta, top);
    add_comparison(report, "boundary " + degrees(m, n), lhs, bottom);
    const bool alternative = agree(lhs.matrix(), bottom.scaled(external_sign(1, m)).matrix(), lhs.target());
    report.add("alternative sign " + degrees(m, n), true,
               {{"alternative_sign_holds", alternative}, {"vacuous", lhs.matrix().is_zero() && bottom.matrix().is_zero()}});
    return report;
}

GroupHom unit_iso()
{
    const PairCohomology h(SubcomplexPair::absolute(shapes::point()));
    const Cohomology& c = h.at(0);
    IntMatrix m(1, c.group().generator_count());
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(0, j) = c.cocycle(j)[0];
    return GroupHom(c.group(), FgAbGroup::free(1), std::move(m));
}

Report check_ax4(const std::vector<SubcomplexPair>& pairs)
{
    Report report("ax4");
    CohomologyCache h;
    const SubcomplexPair unit = SubcomplexPair::absolute(shapes::point());
    const GroupHom epsilon = unit_iso();
    report.add("epsilon", epsilon.is_isomorphism(), {{"matrix", epsilon.matrix().to_string()}});
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        const SubcomplexPair& p = pairs[a];
        const SubcomplexPair up = pair_product(unit, p);
        const PairMap u(p, up, CubicalMap::identity(p.total()));
        for (int n = 0; n <= p.total().dimension(); ++n) {
            const FgAbGroup& g = h(p).group(n);
            const GroupHom lhs = compose(pullback(u, n, h(up), h(p)), h.kappa(unit, p, 0, n));
            const GroupHom scalar = tensor_hom(epsilon, GroupHom::identity(g));
            const GroupHom unitor(scalar.target(), g, IntMatrix::identity(g.generator_count()));
            add_comparison(report, "unit pair" + std::to_string(a) + " n=" + std::to_string(n), lhs,
                           compose(unitor, scalar));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

Report check_kunneth(const SubcomplexPair& p, const SubcomplexPair& q)
{
    CohomologyCache h;
    const GoodPairVerdict vp = certify_good_pair(h(p));
    const GoodPairVerdict vq = certify_good_pair(h(q));
    if (!vp.good())
        throw NotGood("first pair: " + vp.refusal);
    if (!vq.good())
        throw NotGood("second pair: " + vq.refusal);
    const int n = vp.certificate->degree;
    const int m = vq.certificate->degree;
    Report report("kunneth");

    const GroupHom kappa = h.kappa(p, q, n, m);
    report.add("iso " + degrees(n, m), kappa.is_isomorphism(),
               {{"source", kappa.source().describe()}, {"target", kappa.target().describe()}});

    const GroupHom swapped = compose(pullback(swap_map(p, q), n + m, h(pair_product(q, p)), h(pair_product(p, q))),
                                     compose(h.kappa(q, p, m, n), tensor_swap(h(p).group(n), h(q).group(m))));
    add_comparison(report, "swap sign " + std::to_string(external_sign(n, m)), swapped,
                   kappa.scaled(external_sign(n, m)));

    const int total = n + m;
    const int top = p.total().dimension();
    int components = 0;
    std::optional<GroupHom> sum;
    for (int i = 0; i <= top; ++i) {
        const int j = total - i;
        if (j < 0 || j > q.total().dimension())
            continue;
        const GroupHom part = h.kappa(p, q, i, j);
        if (!part.source().is_trivial())
            ++components;
        sum = sum ? copairing(*sum, part) : part;
    }
    const bool expected_one = !kappa.source().is_trivial();
    report.add("single component", components == (expected_one ? 1 : 0), {{"nonzero_components", components}});
    if (sum)
        report.add("comparison sum iso", sum->is_isomorphism(), {{"source", sum->source().describe()}});
    return report;
}

GoodPairCertificate tensor_good_pair(const SubcomplexPair& p, const SubcomplexPair& q)
{
    const GoodPairVerdict vp = certify_good_pair(p);
    const GoodPairVerdict vq = certify_good_pair(q);
    if (!vp.good())
        throw NotGood("first pair: " + vp.refusal);
    if (!vq.good())
        throw NotGood("second pair: " + vq.refusal);
    const GoodPairVerdict v = certify_good_pair(pair_product(p, q));
    if (!v.good())
        throw NotGood("product pair: " + v.refusal);
    const FgAbGroup expected = tensor_group(vp.certificate->group, vq.certificate->group).product;
    if (!v.certificate->group.isomorphic_to(expected))
        throw NotGood("product group " + v.certificate->group.describe() + " differs from the tensor " +
                      expected.describe());
    GoodPairCertificate cert = *v.certificate;
    if (!expected.is_trivial() && cert.degree != vp.certificate->degree + vq.certificate->degree)
        throw NotGood("product pair is good in degree " + std::to_string(cert.degree));
    if (expected.is_trivial())
        cert.degree = vp.certificate->degree + vq.certificate->degree;
    return cert;
}

Report check_flatness(const FgAbGroup& f, const GroupHom& s)
{
    Report report("flatness");
    report.add("surjection", s.is_surjective());
    const IntMatrix gens = s.kernel_generators();
    const GroupHom span(FgAbGroup::free(gens.cols()), s.source(), gens);
    const GroupHom inclusion(FgAbGroup(span.kernel_generators()), s.source(), gens);
    const GroupHom id = GroupHom::identity(f);
    const GroupHom fs = tensor_hom(id, s);
    const GroupHom fi = tensor_hom(id, inclusion);
    report.add("onto", fs.is_surjective());
    report.add("exact", is_exact_at(fs, fi));
    report.add("injective", fi.is_injective(), {{"kernel", inclusion.source().describe()}});
    return report;
}

} // namespace cubenori
