#include "cubenori/cellular.hpp"
#include "cubenori/errors.hpp"

#include <gtest/gtest.h>

using namespace cubenori;

namespace {

CubicalComplex vertex2(int a, int b)
{
    return CubicalComplex(2, {Cube::vertex({a, b})});
}

CubicalComplex edge(std::vector<std::pair<int, int>> iv)
{
    return CubicalComplex::closure(iv.size(), {Cube::from_intervals(iv)});
}

void expect_comparison_isos(const Filtration& f)
{
    const FiltrationComplex c(f);
    const PairCohomology hx(SubcomplexPair::absolute(f.space()));
    for (int n = -1; n <= f.space().dimension() + 1; ++n) {
        const GroupHom g = comparison_iso(c, n, hx);
        EXPECT_TRUE(g.is_isomorphism()) << "degree " << n;
    }
}

} // namespace

TEST(GoodPairs, Certificates)
{
    const auto v = certify_good_pair(SubcomplexPair(shapes::interval(), shapes::interval_boundary()));
    ASSERT_TRUE(v.good());
    EXPECT_EQ(v.certificate->degree, 1);
    EXPECT_EQ(v.certificate->group.describe(), "Z");

    const auto circle = certify_good_pair(SubcomplexPair::absolute(shapes::square_boundary()));
    EXPECT_FALSE(circle.good());
    EXPECT_EQ(circle.offending_degree, 1);

    const auto pt = certify_good_pair(SubcomplexPair::absolute(shapes::point()));
    ASSERT_TRUE(pt.good());
    EXPECT_EQ(pt.certificate->degree, 0);

    const auto zero = certify_good_pair(SubcomplexPair(shapes::square(), shapes::square()));
    ASSERT_TRUE(zero.good());
    EXPECT_EQ(zero.certificate->degree, 0);
    EXPECT_TRUE(zero.certificate->group.is_trivial());
}

TEST(GoodPairs, TorsionIsRefused)
{
    const SubcomplexPair p = shapes::double_loop_pair();
    EXPECT_EQ(p.sub().count(1), 12u);
    const PairCohomology h(p);
    EXPECT_EQ(h.group(2).describe(), "Z/2");
    EXPECT_TRUE(h.group(1).is_trivial());
    const auto v = certify_good_pair(h);
    EXPECT_FALSE(v.good());
    EXPECT_EQ(v.offending_degree, 2);
}

TEST(Filtrations, SkeletonFiltrations)
{
    const Filtration pt = skeleton_filtration(shapes::point());
    EXPECT_EQ(pt.type(), 0);
    EXPECT_TRUE(is_good(pt));
    const Filtration sq = skeleton_filtration(shapes::square());
    EXPECT_EQ(sq.type(), 2);
    EXPECT_EQ(sq.level(0).size(), 4u);
    EXPECT_EQ(sq.level(1).size(), 8u);
    EXPECT_EQ(sq.level(2), shapes::square());
    EXPECT_TRUE(is_good(sq));
    const Filtration e = skeleton_filtration(CubicalComplex());
    EXPECT_EQ(e.type(), -1);
    EXPECT_TRUE(is_good(e));
}

TEST(Filtrations, SkeletonStepsAreFreeOnCubes)
{
    const CubicalComplex t = shapes::torus();
    const Filtration f = skeleton_filtration(t);
    for (int p = 0; p <= 2; ++p) {
        const auto v = certify_good_pair(f.step(p));
        ASSERT_TRUE(v.good());
        EXPECT_EQ(v.certificate->degree, p);
        EXPECT_EQ(v.certificate->group.free_rank(), t.count(p));
    }
}

TEST(Filtrations, Validation)
{
    EXPECT_THROW(Filtration(shapes::square(), {shapes::square_boundary()}), NotASubcomplex);
    EXPECT_THROW(Filtration(shapes::interval(), {shapes::interval(), shapes::interval_boundary()}), NotASubcomplex);
}

TEST(Coniveau, OneLevel)
{
    const CubicalComplex s = shapes::square_boundary();
    const ConiveauPage page(Filtration(s, {s}));
    EXPECT_EQ(page.entry(0, 0).describe(), "Z");
    EXPECT_EQ(page.entry(0, 1).describe(), "Z");
    EXPECT_FALSE(page.degenerate());
    EXPECT_TRUE(page.check_d1_squared().ok());
}

TEST(Coniveau, CircleSkeleton)
{
    const ConiveauPage page(skeleton_filtration(shapes::square_boundary()));
    EXPECT_EQ(page.entry(0, 0).describe(), "Z^4");
    EXPECT_EQ(page.entry(1, 0).describe(), "Z^4");
    const GroupHom d = page.d1(0, 0);
    EXPECT_EQ(smith_normal_form(d.normal_matrix()).rank, 3u);
    EXPECT_TRUE(page.degenerate());
    EXPECT_TRUE(page.check_d1_squared().ok());
}

TEST(Coniveau, SquareSkeleton)
{
    const ConiveauPage page(skeleton_filtration(shapes::square()));
    EXPECT_EQ(page.entry(0, 0).describe(), "Z^4");
    EXPECT_EQ(page.entry(1, 0).describe(), "Z^4");
    EXPECT_EQ(page.entry(2, 0).describe(), "Z");
    EXPECT_TRUE(page.check_d1_squared().ok());
}

TEST(FiltrationComplexes, Shapes)
{
    const CochainComplex pt = filtration_complex(skeleton_filtration(shapes::point()));
    EXPECT_EQ(pt.rank(0), 1u);
    EXPECT_EQ(pt.hi(), 0);
    const CochainComplex circle = filtration_complex(skeleton_filtration(shapes::square_boundary()));
    EXPECT_EQ(circle.rank(0), 4u);
    EXPECT_EQ(circle.rank(1), 4u);
    const CubicalComplex t = shapes::torus();
    const CochainComplex torus = filtration_complex(skeleton_filtration(t));
    for (int p = 0; p <= 2; ++p)
        EXPECT_EQ(torus.rank(p), t.count(p));
    EXPECT_EQ(cohomology_at(torus, 1).group().describe(), "Z^2");
    const CubicalComplex s = shapes::square_boundary();
    EXPECT_THROW(FiltrationComplex(Filtration(s, {s})), NotGood);
}

TEST(Comparison, Isomorphisms)
{
    expect_comparison_isos(skeleton_filtration(shapes::point()));
    expect_comparison_isos(skeleton_filtration(shapes::square_boundary()));
    expect_comparison_isos(skeleton_filtration(shapes::torus()));
    expect_comparison_isos(skeleton_filtration(shapes::cube_boundary()));
    // a coarser good filtration of the circle: a vertex, then everything
    const CubicalComplex s = shapes::square_boundary();
    expect_comparison_isos(Filtration(s, {vertex2(0, 0), s}));
    const FiltrationComplex c(skeleton_filtration(shapes::torus()));
    EXPECT_EQ(comparison_iso(c, 1).target().describe(), "Z^2");
}

TEST(Refinement, IdentityAndQuasiIso)
{
    const CubicalComplex s = shapes::square_boundary();
    const FiltrationComplex skel(skeleton_filtration(s));
    const ChainMap id = refinement_map(skel, skel);
    for (int n = 0; n <= 1; ++n)
        EXPECT_TRUE(induced_hom_on_cohomology(id, n).equals(GroupHom::identity(cohomology_at(skel.complex(), n).group())));

    const FiltrationComplex coarse(Filtration(s, {vertex2(0, 0), s}));
    const ChainMap r = refinement_map(coarse, skel);
    const PairCohomology hx(SubcomplexPair::absolute(s));
    for (int n = 0; n <= 1; ++n) {
        const GroupHom on_h = induced_hom_on_cohomology(r, n);
        EXPECT_TRUE(on_h.is_isomorphism());
        // comparison_coarse o r = comparison_skel
        EXPECT_TRUE(compose(comparison_iso(coarse, n, hx), on_h).equals(comparison_iso(skel, n, hx)));
    }
    EXPECT_THROW(refinement_map(skel, coarse), NotARefinement);
}

TEST(Refinement, MapCompatible)
{
    const CubicalComplex sq = shapes::square();
    const CubicalComplex i = shapes::interval();
    const CubicalMap proj(sq, i, {CoordinateRule::affine(0)});
    const FiltrationComplex phi(skeleton_filtration(sq));
    const FiltrationComplex psi(skeleton_filtration(i));
    const ChainMap m = filtered_pullback(proj, phi, psi);
    const PairCohomology hx(SubcomplexPair::absolute(sq));
    const PairCohomology hi(SubcomplexPair::absolute(i));
    const GroupHom fstar = pullback(PairMap(hx.pair(), hi.pair(), proj), 0, hi, hx);
    EXPECT_TRUE(compose(comparison_iso(phi, 0, hx), induced_hom_on_cohomology(m, 0))
                    .equals(compose(fstar, comparison_iso(psi, 0, hi))));
}

TEST(PairFiltration, FiberMatchesRelative)
{
    const SubcomplexPair ib(shapes::interval(), shapes::interval_boundary());
    const CochainComplex f1 = pair_filtration_complex(ib, FiltrationComplex(skeleton_filtration(ib.total())),
                                                      FiltrationComplex(skeleton_filtration(ib.sub())));
    EXPECT_EQ(cohomology_at(f1, 1).group().describe(), "Z");
    EXPECT_EQ(cohomology_at(f1, 0).group().describe(), "0");

    const SubcomplexPair sb(shapes::square(), shapes::square_boundary());
    const CochainComplex f2 = pair_filtration_complex(sb, FiltrationComplex(skeleton_filtration(sb.total())),
                                                      FiltrationComplex(skeleton_filtration(sb.sub())));
    EXPECT_EQ(cohomology_at(f2, 2).group().describe(), "Z");

    const SubcomplexPair abs = SubcomplexPair::absolute(shapes::torus());
    const CochainComplex f3 = pair_filtration_complex(abs, FiltrationComplex(skeleton_filtration(abs.total())),
                                                      FiltrationComplex(skeleton_filtration(CubicalComplex::empty(4))));
    const CochainComplex direct = filtration_complex(skeleton_filtration(abs.total()));
    for (int n = 0; n <= 2; ++n)
        EXPECT_TRUE(cohomology_at(f3, n).group().isomorphic_to(cohomology_at(direct, n).group()));

    const CubicalComplex s = shapes::square_boundary();
    EXPECT_THROW(pair_filtration_complex(SubcomplexPair(s, s), FiltrationComplex(Filtration(s, {vertex2(0, 0), s})),
                                         FiltrationComplex(skeleton_filtration(s))),
                 IncompatibleFiltrations);
}

TEST(Cellularity, Conditions)
{
    const CubicalComplex s = shapes::square_boundary();
    const Filtration skel = skeleton_filtration(s);
    EXPECT_TRUE(check_cellularity(s, {skel}).ok());
    const Filtration by_vertex(s, {vertex2(0, 0), s});
    const Filtration by_edge(s, {edge({{0, 1}, {0, 0}}), s});
    EXPECT_TRUE(is_good(by_edge));
    const Report r = check_cellularity(s, {by_vertex, by_edge});
    EXPECT_TRUE(r.ok());
    const auto w = join_witness(skel, by_vertex);
    ASSERT_TRUE(w);
    EXPECT_TRUE(is_good(*w));
    EXPECT_TRUE(w->contains(by_vertex));

    const CubicalComplex sq = shapes::square();
    const CubicalMap proj(sq, shapes::interval(), {CoordinateRule::affine(0)});
    const Report r3 = check_cellularity(sq, {}, {{"projection", proj}});
    EXPECT_TRUE(r3.ok());
    const auto img = image_witness(proj, skeleton_filtration(sq));
    ASSERT_TRUE(img);
    EXPECT_EQ(img->level(0), skeleton(shapes::interval(), 0));
}
