#include "cubenori/abelian_group.hpp"
#include "cubenori/cochain_complex.hpp"
#include "cubenori/errors.hpp"
#include "cubenori/smith.hpp"
#include "oracles/minors_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cubenori;

namespace {

IntVector ints(std::initializer_list<long> v)
{
    IntVector out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

void expect_valid_smith(const IntMatrix& m)
{
    const SmithForm f = smith_normal_form(m);
    EXPECT_EQ(f.U * m * f.V, f.S);
    EXPECT_EQ(abs(f.U.determinant()), 1);
    EXPECT_EQ(abs(f.V.determinant()), 1);
    EXPECT_EQ(f.U * f.U_inverse, IntMatrix::identity(m.rows()));
    EXPECT_EQ(f.V * f.V_inverse, IntMatrix::identity(m.cols()));
    for (std::size_t i = 0; i < f.S.rows(); ++i)
        for (std::size_t j = 0; j < f.S.cols(); ++j)
            if (i != j)
                EXPECT_EQ(f.S(i, j), 0);
    const IntVector d = f.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(d[i], 0);
        if (i + 1 < d.size() && d[i] != 0)
            EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
}

oracle::Grid to_grid(const IntMatrix& m)
{
    oracle::Grid g(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g[i][j] = m(i, j).get_si();
    return g;
}

std::vector<mpz_class> nonzero_factors(const IntMatrix& m)
{
    std::vector<mpz_class> out;
    for (const auto& d : smith_normal_form(m).invariant_factors())
        if (d != 0)
            out.push_back(d);
    return out;
}

} // namespace

TEST(Smith, IdentityAndZero)
{
    const SmithForm id = smith_normal_form(IntMatrix::identity(2));
    EXPECT_EQ(id.S, IntMatrix::identity(2));
    EXPECT_EQ(id.U, IntMatrix::identity(2));
    EXPECT_EQ(id.V, IntMatrix::identity(2));

    const SmithForm z = smith_normal_form(IntMatrix(3, 2));
    EXPECT_TRUE(z.S.is_zero());
    EXPECT_EQ(z.rank, 0u);
}

TEST(Smith, TwoByTwoExample)
{
    const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    EXPECT_EQ(smith_normal_form(m).invariant_factors(), ints({2, 4}));
    EXPECT_EQ(oracle::invariant_factors(to_grid(m)), std::vector<mpz_class>({2, 4}));
    expect_valid_smith(m);
}

TEST(Smith, MatchesMinorsOracleOnRandomMatrices)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 4);
        EXPECT_EQ(nonzero_factors(m), oracle::invariant_factors(to_grid(m))) << m;
        expect_valid_smith(m);
    }
}

TEST(Smith, InvariantUnderUnimodularChange)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        const std::size_t c = 1 + rng() % 4;
        const IntMatrix m = random_matrix(rng, r, c, 5);
        // random unimodular matrices as products of elementary operations
        IntMatrix p = IntMatrix::identity(r);
        IntMatrix q = IntMatrix::identity(c);
        for (int k = 0; k < 6; ++k) {
            if (r > 1) {
                const std::size_t a = rng() % r, b = (a + 1 + rng() % (r - 1)) % r;
                p.add_row_multiple(a, b, Integer(static_cast<long>(rng() % 5) - 2));
            }
            if (c > 1) {
                const std::size_t a = rng() % c, b = (a + 1 + rng() % (c - 1)) % c;
                q.add_column_multiple(a, b, Integer(static_cast<long>(rng() % 5) - 2));
            }
        }
        EXPECT_EQ(smith_normal_form(p * m * q).invariant_factors(), smith_normal_form(m).invariant_factors());
    }
}

TEST(Smith, LargeEntriesStayExact)
{
    IntMatrix m(3, 3);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 1) = big * 3;
    m(2, 2) = 7;
    m(2, 0) = big - 5;
    expect_valid_smith(m);
}

TEST(Lattice, SolveAndMembership)
{
    const LatticeSolver s(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    EXPECT_TRUE(s.contains(ints({4, 9})));
    EXPECT_FALSE(s.contains(ints({1, 0})));
    const auto c = s.solve(ints({4, 9}));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, ints({2, 3}));
    EXPECT_FALSE(s.is_full());
}

TEST(Groups, Descriptions)
{
    EXPECT_EQ(FgAbGroup::free(2).describe(), "Z^2");
    EXPECT_EQ(FgAbGroup().describe(), "0");
    // Z^2 modulo Z x 2Z
    const FgAbGroup g(IntMatrix::from_rows({{1, 0}, {0, 2}}));
    EXPECT_EQ(g.describe(), "Z/2");
    EXPECT_TRUE(g.isomorphic_to(FgAbGroup::cyclic(2)));
    EXPECT_EQ(FgAbGroup::from_orders(ints({2, 3})).describe(), "Z/6");
    EXPECT_EQ(FgAbGroup::from_orders(ints({0, 4, 2})).describe(), "Z + Z/2 + Z/4");
}

TEST(Groups, ElementsAndNormalCoordinates)
{
    const FgAbGroup g(IntMatrix::from_rows({{2, 4}, {6, 8}}));
    EXPECT_EQ(g.order(), 8);
    EXPECT_TRUE(g.is_zero(ints({2, 6})));
    EXPECT_FALSE(g.is_zero(ints({1, 0})));
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            const IntVector v = ints({a, b});
            EXPECT_TRUE(g.equal_elements(g.from_normal(g.to_normal(v)), v));
        }
}

TEST(Homs, WellDefinedness)
{
    EXPECT_NO_THROW(GroupHom(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), IntMatrix::from_rows({{1}})));
    EXPECT_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix::from_rows({{1}})),
                 IllDefinedMorphism);
    EXPECT_THROW(GroupHom(FgAbGroup::free(2), FgAbGroup::free(1), IntMatrix::from_rows({{1}})),
                 CompositionMismatch);
}

TEST(Homs, KernelImageInverse)
{
    const GroupHom twice(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix::from_rows({{2}}));
    EXPECT_TRUE(twice.is_injective());
    EXPECT_FALSE(twice.is_surjective());
    EXPECT_THROW(twice.inverse(), NotInvertible);

    const GroupHom swap(FgAbGroup::free(2), FgAbGroup::free(2), IntMatrix::from_rows({{0, 1}, {1, 0}}));
    EXPECT_TRUE(compose(swap, swap.inverse()).equals(GroupHom::identity(FgAbGroup::free(2))));

    const GroupHom q(FgAbGroup::free(1), FgAbGroup::cyclic(3), IntMatrix::from_rows({{1}}));
    EXPECT_TRUE(q.is_surjective());
    EXPECT_FALSE(q.is_injective());
    EXPECT_EQ(q.preimage(ints({2})).value(), ints({2}));
}

TEST(Exactness, TrivialCases)
{
    const FgAbGroup z = FgAbGroup::free(1);
    const GroupHom id = GroupHom::identity(z);
    EXPECT_TRUE(is_exact_at(GroupHom::zero(z, z), id));
    EXPECT_TRUE(is_exact_at(id, GroupHom::zero(z, z)));
    EXPECT_FALSE(is_exact_at(id, id));
}

TEST(Exactness, TimesTwoThenQuotient)
{
    const FgAbGroup z = FgAbGroup::free(1);
    const GroupHom twice(z, z, IntMatrix::from_rows({{2}}));
    const GroupHom mod2(z, FgAbGroup::cyclic(2), IntMatrix::from_rows({{1}}));
    const GroupHom mod4(z, FgAbGroup::cyclic(4), IntMatrix::from_rows({{1}}));
    EXPECT_TRUE(is_exact_at(mod2, twice));
    EXPECT_FALSE(is_exact_at(mod4, twice));

    // enumeration on a window of Z: x in kernel iff x in image
    auto exact_by_enumeration = [](long modulus) {
        for (long x = -16; x <= 16; ++x) {
            const bool in_kernel = x % modulus == 0;
            const bool in_image = x % 2 == 0;
            if (in_kernel != in_image)
                return false;
        }
        return true;
    };
    EXPECT_TRUE(exact_by_enumeration(2));
    EXPECT_FALSE(exact_by_enumeration(4));
}

TEST(Exactness, MismatchedPresentationsThrow)
{
    const GroupHom a = GroupHom::identity(FgAbGroup::free(1));
    const GroupHom b = GroupHom::identity(FgAbGroup::free(2));
    EXPECT_THROW(is_exact_at(a, b), CompositionMismatch);
}

namespace {

CochainComplex times(long k)
{
    return CochainComplex(0, {1, 1}, {IntMatrix::from_rows({{k}})});
}

} // namespace

TEST(Cochains, CohomologyExamples)
{
    const CochainComplex single = CochainComplex::concentrated(0, 1);
    EXPECT_EQ(cohomology_at(single, 0).group().describe(), "Z");
    EXPECT_EQ(cohomology_at(single, 5).group().describe(), "0");
    EXPECT_EQ(cohomology_at(times(2), 1).group().describe(), "Z/2");
    EXPECT_EQ(cohomology_at(times(2), 0).group().describe(), "0");
    EXPECT_THROW(CochainComplex(0, {1, 1, 1}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}),
                 IllDefinedMorphism);
}

TEST(Cochains, CohomologyIsDeterministic)
{
    const CochainComplex c(0, {2, 3, 1},
                           {IntMatrix::from_rows({{1, 1}, {2, 0}, {0, 2}}), IntMatrix::from_rows({{2, -1, -1}})});
    const Cohomology a = cohomology_at(c, 1);
    const Cohomology b = cohomology_at(c, 1);
    EXPECT_EQ(a.cocycles(), b.cocycles());
    EXPECT_TRUE(a.group().same_presentation(b.group()));
}

TEST(Cochains, ModularCohomology)
{
    const CochainComplex c(0, {1, 1}, {IntMatrix::from_rows({{2}})}, 4);
    // Z/4 --2--> Z/4: kernel {0,2}, cokernel Z/2
    EXPECT_EQ(cohomology_at(c, 0).group().describe(), "Z/2");
    EXPECT_EQ(cohomology_at(c, 1).group().describe(), "Z/2");
    const CochainComplex d = CochainComplex::concentrated(0, 2, 3);
    EXPECT_EQ(cohomology_at(d, 0).group().describe(), "Z/3 + Z/3");
}

TEST(Cochains, InducedMaps)
{
    const CochainComplex c = CochainComplex::concentrated(0, 1);
    EXPECT_TRUE(induced_hom_on_cohomology(ChainMap::identity(c), 0).equals(
        GroupHom::identity(cohomology_at(c, 0).group())));
    EXPECT_TRUE(induced_hom_on_cohomology(ChainMap::zero(c, c), 0).is_zero());
    const ChainMap three(c, c, {IntMatrix::from_rows({{3}})}, 0);
    EXPECT_EQ(induced_hom_on_cohomology(three, 0).matrix(), IntMatrix::from_rows({{3}}));
    EXPECT_THROW(ChainMap(times(2), times(2), {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{3}})}, 0),
                 NotAChainMap);
}

TEST(Cochains, InducedMapsCompose)
{
    const CochainComplex c = times(2);
    const CochainComplex d = times(4);
    const ChainMap f(c, d, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{2}})}, 0);
    const ChainMap g = ChainMap(c, c, {IntMatrix::from_rows({{3}}), IntMatrix::from_rows({{3}})}, 0);
    for (int n = -1; n <= 2; ++n) {
        const GroupHom lhs = induced_hom_on_cohomology(compose(f, g), n);
        const GroupHom rhs = compose(induced_hom_on_cohomology(f, n), induced_hom_on_cohomology(g, n));
        EXPECT_TRUE(lhs.equals(rhs)) << n;
    }
}

namespace {

void expect_fiber_sequence_exact(const ChainMap& f)
{
    const FiberSequence s = fiber_sequence(f);
    const int lo = s.fiber.lo() - 2;
    const int hi = s.fiber.hi() + 2;
    for (int n = lo; n <= hi; ++n) {
        const GroupHom p = induced_hom_on_cohomology(s.projection, n);
        const GroupHom m = induced_hom_on_cohomology(s.map, n);
        const GroupHom i = induced_hom_on_cohomology(s.inclusion, n + 1);
        const GroupHom p_next = induced_hom_on_cohomology(s.projection, n + 1);
        EXPECT_TRUE(is_exact_at(m, p)) << "at H^" << n << "(C)";
        EXPECT_TRUE(is_exact_at(i, m)) << "at H^" << n << "(D)";
        EXPECT_TRUE(is_exact_at(p_next, i)) << "at H^" << n + 1 << "(F)";
    }
}

} // namespace

TEST(Fiber, IdentityIsAcyclic)
{
    const CochainComplex c = times(3);
    const CochainComplex f = mapping_fiber(ChainMap::identity(c));
    for (int n = -1; n <= 3; ++n)
        EXPECT_TRUE(cohomology_at(f, n).group().is_trivial());
}

TEST(Fiber, MapToZeroGivesSource)
{
    const CochainComplex c = times(3);
    const CochainComplex f = mapping_fiber(ChainMap::zero(c, CochainComplex::zero()));
    for (int n = -1; n <= 3; ++n)
        EXPECT_TRUE(cohomology_at(f, n).group().isomorphic_to(cohomology_at(c, n).group()));
}

TEST(Fiber, LongSequenceIsExact)
{
    const CochainComplex c = times(2);
    const CochainComplex d = times(4);
    expect_fiber_sequence_exact(ChainMap(c, d, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{2}})}, 0));
    expect_fiber_sequence_exact(ChainMap::identity(c));
    expect_fiber_sequence_exact(ChainMap::zero(c, d));
    const CochainComplex e(0, {2, 3, 1},
                           {IntMatrix::from_rows({{1, 1}, {2, 0}, {0, 2}}), IntMatrix::from_rows({{2, -1, -1}})});
    expect_fiber_sequence_exact(ChainMap::identity(e).scaled(2));
}
