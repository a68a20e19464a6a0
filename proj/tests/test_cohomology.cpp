#include "cubenori/cohomology.hpp"
#include "cubenori/errors.hpp"
#include "oracles/betti_oracle.hpp"

#include <gtest/gtest.h>

using namespace cubenori;

namespace {

oracle::CubeList cube_list(const CubicalComplex& x)
{
    oracle::CubeList out;
    for (const auto& c : x.all_cubes())
        out.push_back(c.intervals());
    return out;
}

std::string h(const SubcomplexPair& p, int n)
{
    return relative_cohomology(p, n).group.describe();
}

SubcomplexPair abs_pair(const CubicalComplex& x)
{
    return SubcomplexPair::absolute(x);
}

SubcomplexPair interval_pair()
{
    return SubcomplexPair(shapes::interval(), shapes::interval_boundary());
}

CubicalComplex edge(std::vector<std::pair<int, int>> iv)
{
    return CubicalComplex::closure(iv.size(), {Cube::from_intervals(iv)});
}

} // namespace

TEST(Relative, BasicValues)
{
    EXPECT_EQ(h(abs_pair(shapes::point()), 0), "Z");
    EXPECT_EQ(h(abs_pair(shapes::point()), 1), "0");
    EXPECT_EQ(h(abs_pair(shapes::point()), -1), "0");
    EXPECT_EQ(h(interval_pair(), 1), "Z");
    EXPECT_EQ(h(interval_pair(), 0), "0");
    for (int n = -1; n <= 3; ++n) {
        EXPECT_EQ(h(SubcomplexPair(shapes::square(), shapes::square()), n), "0");
        EXPECT_EQ(h(abs_pair(CubicalComplex()), n), "0");
    }
}

TEST(Relative, KnownSpaces)
{
    const SubcomplexPair circle = abs_pair(shapes::square_boundary());
    EXPECT_EQ(h(circle, 0), "Z");
    EXPECT_EQ(h(circle, 1), "Z");
    const SubcomplexPair torus = abs_pair(shapes::torus());
    EXPECT_EQ(h(torus, 0), "Z");
    EXPECT_EQ(h(torus, 1), "Z^2");
    EXPECT_EQ(h(torus, 2), "Z");
    const SubcomplexPair disk(shapes::square(), shapes::square_boundary());
    EXPECT_EQ(h(disk, 0), "0");
    EXPECT_EQ(h(disk, 1), "0");
    EXPECT_EQ(h(disk, 2), "Z");
    const SubcomplexPair sphere = abs_pair(shapes::cube_boundary());
    EXPECT_EQ(h(sphere, 1), "0");
    EXPECT_EQ(h(sphere, 2), "Z");
}

TEST(Relative, AgreesWithFieldOracle)
{
    const std::vector<SubcomplexPair> pairs = {
        abs_pair(shapes::torus()),
        SubcomplexPair(shapes::square(), shapes::square_boundary()),
        SubcomplexPair(shapes::box({2, 1}), shapes::box_boundary({2, 1})),
        SubcomplexPair(shapes::square_boundary(), edge({{0, 1}, {0, 0}})),
        abs_pair(product(shapes::square_boundary(), shapes::interval())),
    };
    for (const auto& p : pairs)
        for (long prime : {2L, 3L}) {
            const auto betti = oracle::relative_betti(cube_list(p.total()), cube_list(p.sub()), prime);
            const PairCohomology hz(p);
            for (int n = 0; n < static_cast<int>(betti.size()); ++n) {
                // torsion-free examples: Betti numbers over F_p equal the free ranks
                EXPECT_TRUE(hz.group(n).is_free());
                EXPECT_EQ(hz.group(n).free_rank(), betti[n]);
            }
        }
}

TEST(Relative, ModularReduction)
{
    EXPECT_EQ(coefficient_reduction(abs_pair(shapes::point()), 0, 2).group().describe(), "Z/2");
    EXPECT_EQ(coefficient_reduction(interval_pair(), 1, 3).group().describe(), "Z/3");
    EXPECT_EQ(coefficient_reduction(abs_pair(CubicalComplex()), 0, 5).group().describe(), "0");
    EXPECT_EQ(coefficient_reduction(abs_pair(shapes::torus()), 1, 4).group().describe(), "Z/4 + Z/4");
    EXPECT_THROW(coefficient_reduction(interval_pair(), 1, 1), std::invalid_argument);
}

TEST(Pullback, IdentityAndComposition)
{
    const SubcomplexPair t = abs_pair(shapes::torus());
    for (int n = 0; n <= 2; ++n) {
        const GroupHom id = pullback(PairMap::identity(t), n);
        EXPECT_TRUE(id.equals(GroupHom::identity(id.source())));
    }
    // swap of the two circle factors, applied twice
    const CubicalComplex c = shapes::square_boundary();
    const PairMap s(t, t, CubicalMap::swap(c, c));
    const PairCohomology ht(t);
    for (int n = 0; n <= 2; ++n) {
        const GroupHom once = pullback(s, n, ht, ht);
        const GroupHom twice = pullback(compose(s, s), n, ht, ht);
        EXPECT_TRUE(twice.equals(compose(once, once)));
        EXPECT_TRUE(twice.equals(GroupHom::identity(ht.group(n))));
    }
    // the swap acts as -1 on the top class of the torus
    EXPECT_TRUE(pullback(s, 2, ht, ht).equals(GroupHom::identity(ht.group(2)).scaled(-1)));
}

TEST(Pullback, ConstantMapOnDegreeZero)
{
    const CubicalComplex two_points = shapes::interval_boundary();
    const PairMap f(abs_pair(two_points), abs_pair(shapes::point()),
                    CubicalMap::constant(two_points, shapes::point(), {}));
    const GroupHom g = pullback(f, 0);
    EXPECT_EQ(g.target().describe(), "Z^2");
    EXPECT_EQ(g.matrix(), IntMatrix::from_rows({{1}, {1}}));
}

TEST(Pullback, SourceTrivialGivesZero)
{
    const PairMap incl = PairMap::inclusion(abs_pair(shapes::square_boundary()), abs_pair(shapes::square()));
    const GroupHom g = pullback(incl, 1);
    EXPECT_TRUE(g.source().is_trivial());
    EXPECT_TRUE(g.is_zero());
}

TEST(Pullback, RejectsNonPairMaps)
{
    const CubicalComplex i = shapes::interval();
    EXPECT_THROW(PairMap(interval_pair(), abs_pair(i), CubicalMap::identity(i)), NotAPairMap);
    const PairMap refl(interval_pair(), interval_pair(), CubicalMap(i, i, {CoordinateRule::affine(0, -1, 1)}));
    EXPECT_TRUE(pullback(refl, 1).equals(GroupHom::identity(FgAbGroup::free(1)).scaled(-1)));
}

TEST(Connecting, IntervalTriple)
{
    const Triple t(shapes::interval(), shapes::interval_boundary(), CubicalComplex());
    const GroupHom d = connecting(t, 0);
    EXPECT_EQ(d.source().describe(), "Z^2");
    EXPECT_EQ(d.target().describe(), "Z");
    EXPECT_TRUE(d.is_surjective());
    const IntMatrix k = d.kernel_generators();
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(abs(k(0, 0)), 1);
    EXPECT_EQ(k(0, 0), k(1, 0));
}

TEST(Connecting, SquareTriple)
{
    const Triple t(shapes::square(), shapes::square_boundary(), CubicalComplex());
    EXPECT_TRUE(connecting(t, 1).is_isomorphism());
    const Triple degenerate(shapes::square(), shapes::square_boundary(), shapes::square_boundary());
    EXPECT_TRUE(connecting(degenerate, 1).is_zero());
}

TEST(Connecting, NaturalForTripleMaps)
{
    // reflection of the interval preserves the triple (I, dI, empty)
    const CubicalComplex i = shapes::interval();
    const CubicalComplex b = shapes::interval_boundary();
    const Triple t(i, b, CubicalComplex());
    const CubicalMap refl(i, i, {CoordinateRule::affine(0, -1, 1)});
    const CubicalMap refl_b(b, b, {CoordinateRule::affine(0, -1, 1)});
    const PairCohomology inner(t.inner()), outer(t.outer());
    const GroupHom on_outer = pullback(PairMap(t.outer(), t.outer(), refl), 1, outer, outer);
    const GroupHom on_inner = pullback(PairMap(t.inner(), t.inner(), refl_b), 0, inner, inner);
    const GroupHom d = connecting(t, 0, inner, outer);
    EXPECT_TRUE(compose(d, on_inner).equals(compose(on_outer, d)));
}

TEST(Les, Triples)
{
    EXPECT_TRUE(check_les_of_triple(Triple(shapes::square(), shapes::square(), shapes::square())).ok());
    const Report r = check_les_of_triple(Triple(shapes::interval(), shapes::interval_boundary(), CubicalComplex()), 0, 1);
    EXPECT_EQ(r.checks().size(), 6u);
    EXPECT_TRUE(r.ok());
    const CubicalComplex v(2, {Cube::vertex({0, 0})});
    EXPECT_TRUE(check_les_of_triple(Triple(shapes::square(), shapes::square_boundary(), v)).ok());
    EXPECT_TRUE(check_les_of_triple(Triple(shapes::torus(), skeleton(shapes::torus(), 1), skeleton(shapes::torus(), 0))).ok());
}

TEST(Excision, Covers)
{
    const CubicalComplex sq = shapes::square();
    const Cover trivial(sq, sq, CubicalComplex());
    for (int n = 0; n <= 2; ++n)
        EXPECT_TRUE(excision_map(trivial, n).equals(GroupHom::identity(excision_map(trivial, n).source())));

    const CubicalComplex rect = shapes::box({2, 1});
    const CubicalComplex left = CubicalComplex::closure(2, {Cube::from_intervals({{0, 1}, {0, 1}})});
    const CubicalComplex right = CubicalComplex::closure(2, {Cube::from_intervals({{1, 2}, {0, 1}})});
    const Cover halves(rect, left, right);
    for (int n = -1; n <= 3; ++n)
        EXPECT_TRUE(excision_map(halves, n).is_isomorphism());

    const CubicalComplex s = shapes::square_boundary();
    const CubicalComplex top = join(edge({{0, 1}, {1, 1}}), edge({{0, 0}, {0, 1}}), s);
    const CubicalComplex bottom = join(edge({{0, 1}, {0, 0}}), edge({{1, 1}, {0, 1}}), s);
    const Cover ls(s, top, bottom);
    for (int n = -1; n <= 2; ++n)
        EXPECT_TRUE(excision_map(ls, n).is_isomorphism());
}

TEST(MayerVietoris, Covers)
{
    const CubicalComplex sq = shapes::square();
    EXPECT_TRUE(mayer_vietoris_check(Cover(sq, sq, CubicalComplex())).ok());

    const CubicalComplex s = shapes::square_boundary();
    const CubicalComplex top = join(edge({{0, 1}, {1, 1}}), edge({{0, 0}, {0, 1}}), s);
    const CubicalComplex bottom = join(edge({{0, 1}, {0, 0}}), edge({{1, 1}, {0, 1}}), s);
    const Cover ls(s, top, bottom);
    EXPECT_EQ(ls.overlap().size(), 2u);
    EXPECT_TRUE(mayer_vietoris_check(ls).ok());

    // torus as two cylinders
    const CubicalComplex t = shapes::torus();
    const CubicalComplex c = shapes::square_boundary();
    const Cover cylinders(t, product(top, c), product(bottom, c));
    EXPECT_TRUE(mayer_vietoris_check(cylinders).ok());
}

TEST(Fiber, MatchesRelativeCohomology)
{
    const std::vector<SubcomplexPair> pairs = {
        interval_pair(),
        SubcomplexPair(shapes::square(), shapes::square_boundary()),
        SubcomplexPair(shapes::torus(), skeleton(shapes::torus(), 1)),
        SubcomplexPair(shapes::square_boundary(), edge({{0, 1}, {0, 0}})),
    };
    for (const auto& p : pairs) {
        const CochainComplex f = mapping_fiber(restriction_map(p));
        const PairCohomology hp(p);
        for (int n = -1; n <= p.total().dimension() + 1; ++n)
            EXPECT_TRUE(cohomology_at(f, n).group().isomorphic_to(hp.group(n))) << n;
    }
    EXPECT_EQ(cohomology_at(mapping_fiber(restriction_map(interval_pair())), 1).group().describe(), "Z");
}
