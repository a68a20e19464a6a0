#include "cubenori/cohomology.hpp"
#include "cubenori/errors.hpp"
#include "cubenori/logic.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace cubenori;

namespace {

Signature abc()
{
    Signature s;
    s.add_sort("A");
    s.add_sort("B");
    s.add_sort("C");
    s.add_symbol("g", "A", "B");
    s.add_symbol("f", "B", "C");
    return s;
}

/// Random homomorphism between finite groups given by their cyclic orders.
GroupHom random_hom(const FgAbGroup& a, const FgAbGroup& b, std::mt19937_64& rng)
{
    const IntVector ao = a.normal_orders(), bo = b.normal_orders();
    IntMatrix n(bo.size(), ao.size());
    for (std::size_t i = 0; i < bo.size(); ++i)
        for (std::size_t j = 0; j < ao.size(); ++j) {
            const long bi = bo[i].get_si(), aj = ao[j].get_si();
            n(i, j) = Integer(static_cast<long>(rng() % bi) * (bi / std::gcd(aj, bi)));
        }
    return GroupHom(a, b, b.normal_lift() * n * a.normal_projection());
}

FgAbGroup random_finite(std::mt19937_64& rng)
{
    IntVector orders;
    const int k = static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i)
        orders.push_back(Integer(static_cast<long>(2 + rng() % 4)));
    return FgAbGroup::from_orders(orders);
}

CubicalComplex closure2(std::vector<std::vector<std::pair<int, int>>> cubes)
{
    std::vector<Cube> cs;
    for (const auto& c : cubes)
        cs.push_back(Cube::from_intervals(c));
    return CubicalComplex::closure(2, cs);
}

/// Boundary of the unit square as two L-shapes meeting in two corners.
Cover l_shapes()
{
    return Cover(shapes::square_boundary(), closure2({{{0, 1}, {0, 0}}, {{1, 1}, {0, 1}}}),
                 closure2({{{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}}));
}

/// [0,2] x [0,1] as two unit squares sharing an edge.
Cover two_squares()
{
    return Cover(shapes::box({2, 1}), closure2({{{0, 1}, {0, 1}}}), closure2({{{1, 2}, {0, 1}}}));
}

} // namespace

TEST(Parser, CompositeIsZero)
{
    const RegularSequent s = parse_sequent("⊤ ⊢_y f(g(y)) = *", abc());
    ASSERT_EQ(s.context.size(), 1u);
    EXPECT_EQ(s.context[0].name, "y");
    EXPECT_EQ(s.slot_sorts[s.context_slots[0]], "A");
    EXPECT_EQ(s.antecedent.kind, Formula::Kind::truth);
    EXPECT_EQ(s.consequent.kind, Formula::Kind::equation);
    EXPECT_EQ(s.consequent.terms[1].sort, "C");
    EXPECT_EQ(s.to_string(), "⊤ ⊢_{y:A} ⊤ → f(g(y)) = *");
}

TEST(Parser, KernelInImage)
{
    const RegularSequent s = parse_sequent("⊤ ⊢_x f(x) = * → (∃y) g(y) = x", abc());
    EXPECT_EQ(s.antecedent.kind, Formula::Kind::equation);
    ASSERT_EQ(s.consequent.kind, Formula::Kind::exists);
    EXPECT_EQ(s.consequent.binders[0].name, "y");
    EXPECT_EQ(s.slot_sorts[s.consequent.slots[0]], "A");
    EXPECT_EQ(s.to_string(), "⊤ ⊢_{x:B} f(x) = * → (∃y:A) g(y) = x");
}

TEST(Parser, AsciiSpelling)
{
    const std::string unicode = parse_sequent("⊤ ⊢_x f(x) = * → (∃y) g(y) = x", abc()).to_string();
    EXPECT_EQ(parse_sequent("T |-_x f(x) = * -> exists y. g(y) = x", abc()).to_string(), unicode);
    EXPECT_EQ(parse_sequent("true |-_{x:B} f(x) = 0 -> (exists y:A) g(y) = x", abc()).to_string(), unicode);
}

TEST(Parser, ConjunctionsAndSums)
{
    const RegularSequent s =
        parse_sequent("⊤ ⊢_{a:A, b:A} g(a) = g(b) ∧ (f(g(a + b)) = *) → (∃c) g(c + a) = g(b) + g(b) & c = a", abc());
    EXPECT_EQ(s.antecedent.kind, Formula::Kind::conjunction);
    EXPECT_EQ(s.antecedent.parts.size(), 2u);
    EXPECT_EQ(s.to_string(),
              "⊤ ⊢_{a:A, b:A} g(a) = g(b) ∧ f(g(a + b)) = * → (∃c:A) g(c + a) = g(b) + g(b) ∧ c = a");
}

TEST(Parser, RoundTrip)
{
    for (const char* text : {"⊤ ⊢_y f(g(y)) = *", "⊤ ⊢_x f(x) = * → (∃y) g(y) = x", "⊤ ⊢ ⊤",
                             "⊤ ⊢_{x:A} ((∃y:A) g(y) = g(x)) ∧ x = x", "⊤ ⊢_{u:C, v:B} ⊤ → (∃w) w + v = v ∧ f(w) = u",
                             "⊤ ⊢_{x:A} (∃x) f(x) = *"}) {
        const std::string once = parse_sequent(text, abc()).to_string();
        EXPECT_EQ(parse_sequent(once, abc()).to_string(), once) << text;
    }
}

TEST(Parser, Shadowing)
{
    const RegularSequent s = parse_sequent("⊤ ⊢_{x:A} (∃x) f(x) = *", abc());
    EXPECT_EQ(s.slot_sorts[0], "A");
    EXPECT_EQ(s.slot_sorts[1], "B");
}

TEST(Parser, SortErrors)
{
    Signature bare;
    bare.add_sort("A");
    EXPECT_THROW(parse_sequent("⊤ ⊢_x x = *", bare), SortError);
    EXPECT_THROW(parse_sequent("⊤ ⊢_{x:Q} x = *", bare), SortError);
    EXPECT_THROW(parse_sequent("⊤ ⊢_x f(x) = g(x)", abc()), SortError);
    EXPECT_THROW(parse_sequent("⊤ ⊢_{x:C} f(x) = *", abc()), SortError);
    EXPECT_THROW(parse_sequent("⊤ ⊢_x f(z) = *", abc()), SortError);
    EXPECT_THROW(parse_sequent("⊤ ⊢_x h(x) = *", abc()), UnboundSymbol);
    EXPECT_THROW(Signature().add_symbol("f", "A", "B"), SortError);
}

TEST(Parser, SyntaxErrorPositions)
{
    auto position = [](const std::string& text) -> std::size_t {
        try {
            parse_sequent(text, abc());
        } catch (const SyntaxError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position("⊤ ⊢_x f(x) = "), std::string("⊤ ⊢_x f(x) = ").size());
    EXPECT_EQ(position("⊤ ⊢_x f(x) = * )"), std::string("⊤ ⊢_x f(x) = * ").size());
    EXPECT_EQ(position("⊤ ⊢_x f(x) # *"), std::string("⊤ ⊢_x f(x) ").size());
    EXPECT_EQ(position("⊢_x f(x) = *"), 0u);
    EXPECT_EQ(position("⊤ ⊢_x (∃y g(y) = x"), std::string("⊤ ⊢_x (∃y ").size());
    EXPECT_EQ(position("⊤ ⊢_{x f(x) = *"), std::string("⊤ ⊢_{x ").size());
}

TEST(Evaluate, ReflexivityInRandomModels)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteModel m;
        m.add_sort("A", random_finite(rng));
        EXPECT_TRUE(evaluate("⊤ ⊢_{x:A} x = x", m));
        EXPECT_TRUE(evaluate("⊤ ⊢_{x:A, y:A} ⊤ → x + y = y + x", m));
        EXPECT_TRUE(evaluate("⊤ ⊢_{x:A} ⊤ → (∃y) x + y = *", m));
        // x = * holds everywhere only on the trivial group
        EXPECT_EQ(evaluate("⊤ ⊢_{x:A} x = *", m), m.carrier("A").is_trivial());
    }
}

TEST(Evaluate, ExactnessAgreesWithMatrices)
{
    std::mt19937_64 rng(11);
    int exact = 0, inexact = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const FgAbGroup a = random_finite(rng), b = random_finite(rng), c = random_finite(rng);
        const GroupHom g = random_hom(a, b, rng);
        GroupHom f = random_hom(b, c, rng);
        // make f o g = 0 half of the time by killing f on the image of g
        if (trial % 2 == 0)
            f = GroupHom::zero(b, c);
        const bool algebra = compose(f, g).is_zero() && is_exact_at(f, g);
        EXPECT_EQ(exactness_sequents(f, g), algebra) << a.describe() << " " << b.describe() << " " << c.describe();
        (algebra ? exact : inexact)++;
    }
    EXPECT_GT(exact, 10);
    EXPECT_GT(inexact, 10);
}

TEST(Evaluate, TwoElementCounterModel)
{
    const FgAbGroup zero = FgAbGroup::from_orders({}), two = FgAbGroup::cyclic(2);
    const GroupHom g = GroupHom::zero(zero, two);
    const GroupHom f = GroupHom::zero(two, two);
    EXPECT_FALSE(is_exact_at(f, g));
    const FiniteModel m = exactness_model(f, g);
    EXPECT_FALSE(evaluate(exactness_kernel_sequent, m));
    EXPECT_TRUE(evaluate(exactness_complex_sequent, m));
}

TEST(Evaluate, ModelErrors)
{
    FiniteModel m;
    EXPECT_THROW(m.add_sort("Z", FgAbGroup::free(1)), SortError);
    m.add_sort("A", FgAbGroup::cyclic(3));
    m.add_sort("B", FgAbGroup::cyclic(2));
    EXPECT_THROW(m.add_symbol("f", GroupHom::identity(FgAbGroup::cyclic(3)), "A", "B"), SortError);
    EXPECT_THROW(m.carrier("C"), UnboundSymbol);

    // parsed against a larger signature than the model interprets
    const RegularSequent s = parse_sequent("⊤ ⊢_y f(g(y)) = *", abc());
    EXPECT_THROW(evaluate(s, m), UnboundSymbol);

    FiniteModel big;
    big.add_sort("A", FgAbGroup::from_orders({Integer(5), Integer(5), Integer(5)}));
    EXPECT_THROW(evaluate("⊤ ⊢_{x:A, y:A} x + y = y + x", big, 1000), SearchTooLarge);
    EXPECT_TRUE(evaluate("⊤ ⊢_{x:A, y:A} x + y = y + x", big));
}

TEST(Evaluate, Deterministic)
{
    const FiniteModel m = exactness_model(GroupHom::identity(FgAbGroup::cyclic(4)).scaled(2),
                                          GroupHom::identity(FgAbGroup::cyclic(4)).scaled(2));
    const bool first = evaluate(exactness_kernel_sequent, m);
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(evaluate(exactness_kernel_sequent, m), first);
    // Z/4 --2--> Z/4 --2--> Z/4 is exact
    EXPECT_TRUE(first);
}

TEST(LesInstances, IntervalTriple)
{
    const Triple t(shapes::interval(), shapes::interval_boundary(), CubicalComplex::empty(1));
    for (const Integer m : {Integer(2), Integer(3), Integer(6)}) {
        const auto instances = les_instances(t, m, -1, 2);
        EXPECT_EQ(instances.size(), 12u);
        for (const ExactnessInstance& e : instances) {
            EXPECT_TRUE(is_exact_at(e.f, e.g)) << e.label;
            EXPECT_TRUE(exactness_sequents(e.f, e.g)) << e.label;
            const ExactnessInstance bad = corrupt(e);
            EXPECT_EQ(exactness_sequents(bad.f, bad.g), is_exact_at(bad.f, bad.g)) << bad.label;
            if (!bad.f.source().is_trivial() && !bad.g.is_surjective())
                EXPECT_FALSE(exactness_sequents(bad.f, bad.g)) << bad.label;
        }
    }
}

TEST(Excision, TrivialCover)
{
    const Cover c(shapes::square(), shapes::square(), CubicalComplex::empty(2));
    for (int n = 0; n <= 2; ++n) {
        const ExcisionVerdict v = excision_sequents(c, n, 2);
        EXPECT_TRUE(v.injective && v.surjective);
        EXPECT_TRUE(v.agrees());
    }
}

TEST(Excision, TwoSquaresModTwo)
{
    for (int n = 0; n <= 2; ++n) {
        const ExcisionVerdict v = excision_sequents(two_squares(), n, 2);
        EXPECT_TRUE(v.injective && v.surjective) << n;
        EXPECT_TRUE(v.agrees());
    }
}

TEST(Excision, AgreesWithMatricesForAllModuli)
{
    for (const Cover& c : {l_shapes(), two_squares()})
        for (long m = 2; m <= 6; ++m)
            for (int n = 0; n <= 2; ++n) {
                const ExcisionVerdict v = excision_sequents(c, n, m);
                EXPECT_TRUE(v.agrees()) << m << " " << n;
                EXPECT_TRUE(v.injective && v.surjective) << m << " " << n;
                EXPECT_EQ(excision_map(c, n).is_isomorphism(), v.injective && v.surjective);
            }
}

TEST(Excision, CorruptedModel)
{
    // H^1(Y, Y n Z; Z/2) = Z/2 for the L-shapes, so dropping its generator breaks surjectivity
    const ExcisionVerdict v = excision_sequents(l_shapes(), 1, 2, true);
    EXPECT_FALSE(v.surjective);
    EXPECT_FALSE(v.matrix_surjective);
    EXPECT_TRUE(v.agrees());
}

TEST(StrongKunneth, PointTimesPoint)
{
    const SubcomplexPair pt = SubcomplexPair::absolute(shapes::point());
    const KunnethVerdict v = strong_kunneth_sequent(pt, pt, 0, 2);
    EXPECT_TRUE(v.sequent);
    EXPECT_TRUE(v.agrees());
}

TEST(StrongKunneth, IntervalSquaredModTwo)
{
    const SubcomplexPair i(shapes::interval(), shapes::interval_boundary());
    for (int n = 0; n <= 3; ++n) {
        const KunnethVerdict v = strong_kunneth_sequent(i, i, n, 2);
        EXPECT_TRUE(v.sequent) << n;
        EXPECT_TRUE(v.agrees()) << n;
    }
    const KunnethSentence s = strong_kunneth_model(i, i, 2, 2);
    EXPECT_EQ(s.sequent, "⊤ ⊢_{y:h} y = y → (∃x0:t0, x1:t1, x2:t2) k0(x0) + k1(x1) + k2(x2) = y");
}

TEST(StrongKunneth, TorsionWithCompositeModulus)
{
    const SubcomplexPair p = shapes::double_loop_pair();
    const SubcomplexPair i(shapes::interval(), shapes::interval_boundary());
    for (const long m : {2L, 4L})
        for (int n = 1; n <= 3; ++n) {
            const KunnethVerdict v = strong_kunneth_sequent(p, i, n, m);
            EXPECT_TRUE(v.agrees()) << m << " " << n;
        }
}

TEST(SequentFiles, BindAndEvaluate)
{
    const std::string text = "# exactness at the middle of Z/4 -2-> Z/4 -2-> Z/4\n"
                             "sort P = A\n"
                             "sort Q = B\n"
                             "sort R = C\n"
                             "symbol in : P -> Q = g\n"
                             "symbol out : Q -> R = f\n"
                             "\n"
                             "⊤ ⊢_y out(y) = * → (∃x) in(x) = y\n"
                             "⊤ ⊢_x out(in(x)) = *\n"
                             "⊤ ⊢_{y:Q} y = *\n";
    const GroupHom two = GroupHom::identity(FgAbGroup::cyclic(4)).scaled(2);
    const SequentFile file = parse_sequent_file(text);
    EXPECT_EQ(file.sorts.size(), 3u);
    EXPECT_EQ(file.symbols.size(), 2u);
    ASSERT_EQ(file.sequents.size(), 3u);
    EXPECT_EQ(evaluate_file(file, exactness_model(two, two)), (std::vector<bool>{true, true, false}));
}

TEST(SequentFiles, Errors)
{
    EXPECT_THROW(parse_sequent_file("⊤ ⊢ ⊤\nsort P = A\n"), SyntaxError);
    EXPECT_THROW(parse_sequent_file("symbol f = g\n"), SyntaxError);
    EXPECT_THROW(parse_sequent_file("sort P\n"), SyntaxError);

    const GroupHom two = GroupHom::identity(FgAbGroup::cyclic(4)).scaled(2);
    const FiniteModel m = exactness_model(two, two);
    EXPECT_THROW(bind(parse_sequent_file("sort P = missing\n"), m), UnboundSymbol);
    // g runs Z/4 -> Z/2, not Z/2 -> Z/4
    const FiniteModel mixed = exactness_model(GroupHom::zero(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)),
                                              GroupHom(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), IntMatrix::from_rows({{1}})));
    EXPECT_NO_THROW(bind(parse_sequent_file("sort P = A\nsort Q = B\nsymbol h : P -> Q = g\n"), mixed));
    EXPECT_THROW(bind(parse_sequent_file("sort P = A\nsort Q = B\nsymbol h : Q -> P = g\n"), mixed), SortError);

    const std::string text = "sort P = A\n  ⊤ ⊢_{x:P} x = \n";
    try {
        evaluate_file(parse_sequent_file(text), m);
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        // the end of the trimmed line
        EXPECT_EQ(e.position(), text.size() - 2);
    }
}
