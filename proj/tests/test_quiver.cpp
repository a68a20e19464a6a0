#include "cubenori/errors.hpp"
#include "cubenori/quiver.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cubenori;

namespace {

SubcomplexPair point_pair()
{
    return SubcomplexPair::absolute(shapes::point());
}

SubcomplexPair interval_pair()
{
    return SubcomplexPair(shapes::interval(), shapes::interval_boundary());
}

/// Square boundary minus its open left edge.
CubicalComplex three_edges()
{
    return CubicalComplex::closure(2, {Cube::from_intervals({{0, 1}, {0, 0}}), Cube::from_intervals({{1, 1}, {0, 1}}),
                                       Cube::from_intervals({{0, 1}, {1, 1}})});
}

bool has_edge(const nlohmann::json& j, const std::string& kind, const std::string& from, const std::string& to)
{
    return std::any_of(j["edges"].begin(), j["edges"].end(), [&](const nlohmann::json& e) {
        return e["kind"] == kind && e["from"] == from && e["to"] == to;
    });
}

QuiverCorpus closed_corpus()
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    c.add_pair("I", interval_pair());
    const CubicalMap flip(shapes::interval(), shapes::interval(), {CoordinateRule::affine(0, -1, 1)});
    c.add_map("flip", PairMap(interval_pair(), interval_pair(), flip));
    c.add_triple("disk", Triple(shapes::square(), shapes::square_boundary(), three_edges()));
    close_under_products(c, 3);
    return c;
}

} // namespace

TEST(Fragments, EmptyCorpus)
{
    const QuiverFragment f = build_fragment(QuiverCorpus{}, 0, 3);
    EXPECT_TRUE(f.vertices().empty());
    EXPECT_TRUE(f.edges().empty());
}

TEST(Fragments, SinglePoint)
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    const QuiverFragment f = build_fragment(c, 0, 0);
    ASSERT_EQ(f.vertices().size(), 1u);
    ASSERT_EQ(f.edges().size(), 1u);
    EXPECT_EQ(f.edges()[0].kind, QuiverEdge::Kind::identity);
}

TEST(Fragments, ConnectingEdgeOfInterval)
{
    QuiverCorpus c;
    c.add_pair("I,dI", interval_pair());
    c.add_pair("dI", SubcomplexPair::absolute(shapes::interval_boundary()));
    c.add_pair("I", SubcomplexPair::absolute(shapes::interval()));
    c.add_triple("t", Triple(shapes::interval(), shapes::interval_boundary(), CubicalComplex::empty(1)));
    EXPECT_EQ(c.pair_count(), 3u);
    const QuiverFragment f = build_fragment(c, 0, 1);
    EXPECT_EQ(f.vertices().size(), 6u);
    const nlohmann::json j = f.to_json();
    EXPECT_TRUE(has_edge(j, "connecting", "dI@0", "I,dI@1"));
    EXPECT_FALSE(has_edge(j, "connecting", "dI@1", "I,dI@2"));

    // no unit vertex in this corpus
    EXPECT_THROW(good_subquiver(f, certify_corpus(c)), NotClosedUnderProduct);
    EXPECT_THROW(good_subquiver(f, {}), std::invalid_argument);
}

TEST(Fragments, FullSubquiverKeepsGoodEdges)
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    c.add_pair("I,dI", interval_pair());
    c.add_pair("dI", SubcomplexPair::absolute(shapes::interval_boundary()));
    c.add_triple("t", Triple(shapes::interval(), shapes::interval_boundary(), CubicalComplex::empty(1)));
    const QuiverFragment f = build_fragment(c, 0, 1);
    // dI is good in degree 0 with a nonzero group, so its products are required
    EXPECT_THROW(good_subquiver(f, certify_corpus(c)), NotClosedUnderProduct);
}

TEST(GoodSubquiver, UnitOnly)
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    const GradedTensorQuiver q = good_subquiver(build_fragment(c, 0, 2), certify_corpus(c));
    ASSERT_EQ(q.vertices().size(), 1u);
    EXPECT_EQ(q.tensor().at({0, 0}), 0u);
    EXPECT_EQ(q.unit(), 0u);
    const QuiverRepresentation rep = represent(q);
    EXPECT_EQ(rep.vertex(0).describe(), "Z");
    const Report r = check_tensor_representation(rep);
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
}

TEST(GoodSubquiver, MissingUnitOrTensor)
{
    QuiverCorpus c;
    c.add_pair("I", interval_pair());
    EXPECT_THROW(good_subquiver(build_fragment(c, 0, 2), certify_corpus(c)), NotClosedUnderProduct);
    c.add_pair("pt", point_pair());
    EXPECT_THROW(good_subquiver(build_fragment(c, 0, 2), certify_corpus(c)), NotClosedUnderProduct);
    // the window stops before the missing square
    EXPECT_NO_THROW(good_subquiver(build_fragment(c, 0, 1), certify_corpus(c)));
}

TEST(GoodSubquiver, ClosureContainsSquare)
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    c.add_pair("I", interval_pair());
    close_under_products(c, 3);
    EXPECT_EQ(c.pair_count(), 4u);
    const auto square = c.find(SubcomplexPair(shapes::square(), shapes::square_boundary()));
    ASSERT_TRUE(square.has_value());
    const auto cube = c.find(SubcomplexPair(shapes::solid_cube(), shapes::cube_boundary()));
    ASSERT_TRUE(cube.has_value());

    const GradedTensorQuiver q = good_subquiver(build_fragment(c, 0, 3), certify_corpus(c));
    EXPECT_EQ(q.vertices().size(), 4u);
    std::size_t interval_vertex = 0;
    for (std::size_t v = 0; v < q.vertices().size(); ++v)
        if (q.vertex(v).pair == 1)
            interval_vertex = v;
    const std::size_t sq = q.tensor().at({interval_vertex, interval_vertex});
    EXPECT_EQ(q.vertex(sq).pair, *square);
    EXPECT_EQ(q.vertex(sq).degree, 2);
    EXPECT_EQ(q.grading(sq), 0);
    EXPECT_EQ(q.grading(interval_vertex), 1);

    const QuiverRepresentation rep = represent(q);
    const Report r = check_tensor_representation(rep);
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
    const auto names = r.to_json()["checks"];
    EXPECT_TRUE(std::any_of(names.begin(), names.end(), [](const nlohmann::json& k) {
        return k["name"] == "alpha I*I@2->I*I@2 sign -1" && k["passed"] == true;
    }));
}

TEST(Representation, ConnectingEdgeIsSurjection)
{
    QuiverCorpus c;
    c.add_pair("pt", point_pair());
    c.add_triple("t", Triple(shapes::interval(), shapes::interval_boundary(), CubicalComplex::empty(1)));
    const QuiverFragment f = build_fragment(c, 0, 1);
    // the connecting edge between two nonzero good vertices
    const auto inner = *c.find(SubcomplexPair::absolute(shapes::interval_boundary()));
    const auto outer = *c.find(interval_pair());
    const PairCohomology hi(c.pair(inner)), ho(c.pair(outer));
    const GroupHom d = connecting(c.triples()[0], 0, hi, ho);
    EXPECT_EQ(d.source().describe(), "Z^2");
    EXPECT_EQ(d.target().describe(), "Z");
    EXPECT_TRUE(d.is_surjective());
    EXPECT_EQ(f.edges().size(), f.vertices().size() + 1);
}

TEST(Representation, ClosedCorpusWithEdges)
{
    const QuiverCorpus c = closed_corpus();
    const GradedTensorQuiver q = good_subquiver(build_fragment(c, 0, 3), certify_corpus(c));
    const QuiverRepresentation rep = represent(q);
    const Report r = check_tensor_representation(rep);
    EXPECT_TRUE(r.ok()) << r.to_json().dump(2);
    std::size_t connecting_checks = 0, natural_checks = 0, assoc = 0;
    for (const auto& k : r.checks()) {
        connecting_checks += k.name.rfind("connecting", 0) == 0 || k.name.find("(x) connecting") != std::string::npos;
        natural_checks += k.name.find("functorial") != std::string::npos;
        assoc += k.name.rfind("beta", 0) == 0;
    }
    EXPECT_GT(connecting_checks, 0u);
    EXPECT_GT(natural_checks, 0u);
    EXPECT_GT(assoc, 0u);

    const nlohmann::json j = q.to_json();
    EXPECT_EQ(j["unit"], "pt@0");
    EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}
