#include "cubenori/corpus.hpp"

#include "cubenori/errors.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace cubenori {

using nlohmann::json;

json cube_to_json(const Cube& c)
{
    json out = json::array();
    for (const auto& [lo, hi] : c.intervals())
        out.push_back({lo, hi});
    return out;
}

json complex_to_json(const CubicalComplex& x)
{
    json cubes = json::array();
    for (const Cube& c : x.all_cubes())
        cubes.push_back(cube_to_json(c));
    return {{"ambient", x.ambient()}, {"cubes", cubes}};
}

namespace {

const json& section(const json& j, const char* name)
{
    static const json empty = json::object();
    if (!j.contains(name))
        return empty;
    const json& s = j.at(name);
    if (!s.is_object())
        throw CorpusError(std::string("section ") + name + " must be an object");
    return s;
}

template <typename T>
const T& lookup(const std::map<std::string, T>& m, const json& name, const std::string& where)
{
    if (!name.is_string())
        throw CorpusError(where + ": expected a name");
    const auto it = m.find(name.get<std::string>());
    if (it == m.end())
        throw CorpusError(where + ": unknown name " + name.get<std::string>());
    return it->second;
}

CubicalComplex parse_complex(const json& j)
{
    const std::size_t ambient = j.at("ambient").get<std::size_t>();
    std::vector<Cube> cubes;
    for (const json& c : j.at("cubes")) {
        std::vector<std::pair<int, int>> intervals;
        for (const json& iv : c)
            intervals.emplace_back(iv.at(0).get<int>(), iv.at(1).get<int>());
        cubes.push_back(Cube::from_intervals(intervals));
    }
    return CubicalComplex(ambient, std::move(cubes));
}

CoordinateRule parse_rule(const json& j)
{
    if (j.contains("constant"))
        return CoordinateRule::fixed(j.at("constant").get<int>());
    const std::size_t source = j.at("source").get<std::size_t>();
    if (j.contains("values"))
        return CoordinateRule::tabulated(source, j.value("origin", 0), j.at("values").get<std::vector<int>>());
    return CoordinateRule::affine(source, j.value("scale", 1), j.value("offset", 0));
}

} // namespace

Corpus Corpus::from_json(const json& j)
{
    Corpus c;
    try {
        if (!j.is_object() || j.value("schema", std::string()) != corpus_schema)
            throw CorpusError(std::string("missing schema \"") + corpus_schema + "\"");
        if (j.value("version", 0) != corpus_version)
            throw CorpusError("unsupported corpus version");
        for (const auto& [name, v] : section(j, "complexes").items())
            c.complexes.emplace(name, parse_complex(v));
        for (const auto& [name, v] : section(j, "pairs").items()) {
            const std::string where = "pairs." + name;
            const CubicalComplex& total = lookup(c.complexes, v.at("total"), where);
            if (v.contains("sub"))
                c.pairs.emplace(name, SubcomplexPair(total, lookup(c.complexes, v.at("sub"), where)));
            else
                c.pairs.emplace(name, SubcomplexPair::absolute(total));
        }
        for (const auto& [name, v] : section(j, "maps").items()) {
            const std::string where = "maps." + name;
            const SubcomplexPair& source = lookup(c.pairs, v.at("source"), where);
            const SubcomplexPair& target = lookup(c.pairs, v.at("target"), where);
            std::vector<CoordinateRule> rules;
            for (const json& r : v.at("rules"))
                rules.push_back(parse_rule(r));
            c.maps.emplace(name, PairMap(source, target, CubicalMap(source.total(), target.total(), rules)));
        }
        for (const auto& [name, v] : section(j, "triples").items()) {
            const std::string where = "triples." + name;
            c.triples.emplace(name, Triple(lookup(c.complexes, v.at("x"), where), lookup(c.complexes, v.at("y"), where),
                                           lookup(c.complexes, v.at("z"), where)));
        }
        for (const auto& [name, v] : section(j, "filtrations").items()) {
            const std::string where = "filtrations." + name;
            std::vector<CubicalComplex> levels;
            for (const json& l : v.at("levels"))
                levels.push_back(lookup(c.complexes, l, where));
            c.filtrations.emplace(name, Filtration(lookup(c.complexes, v.at("space"), where), levels));
        }
        for (const auto& [name, v] : section(j, "covers").items()) {
            const std::string where = "covers." + name;
            c.covers.emplace(name, Cover(lookup(c.complexes, v.at("x"), where), lookup(c.complexes, v.at("y"), where),
                                         lookup(c.complexes, v.at("z"), where)));
        }
        for (const auto& [name, v] : section(j, "sequent_files").items()) {
            const std::string where = "sequent_files." + name;
            SequentSource s{v.at("text").get<std::string>(), v.at("model")};
            parse_sequent_file(s.text);
            const std::string kind = s.model.at("kind").get<std::string>();
            s.model.at("degree").get<int>();
            if (kind == "excision") {
                lookup(c.covers, s.model.at("cover"), where);
            } else if (kind == "junction") {
                lookup(c.triples, s.model.at("triple"), where);
                const std::string at = s.model.at("at").get<std::string>();
                if (at != "whole" && at != "inner" && at != "outer")
                    throw CorpusError(where + ": junction must be whole, inner or outer");
            } else {
                throw CorpusError(where + ": unknown model kind " + kind);
            }
            c.sequent_files.emplace(name, std::move(s));
        }
    } catch (const json::exception& e) {
        throw CorpusError(e.what());
    } catch (const SyntaxError& e) {
        throw CorpusError(e.what());
    }
    c.source_ = j;
    return c;
}

Corpus Corpus::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CorpusError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CorpusError(path + ": " + e.what());
    }
    return from_json(j);
}

FiniteModel Corpus::sequent_model(const std::string& name, const Integer& modulus) const
{
    const SequentSource& s = lookup(sequent_files, json(name), "sequent_model");
    const int n = s.model.at("degree").get<int>();
    if (s.model.at("kind") == "excision")
        return excision_model(lookup(covers, s.model.at("cover"), name), n, modulus);
    const TripleSequence seq(lookup(triples, s.model.at("triple"), name), modulus);
    const std::string at = s.model.at("at").get<std::string>();
    if (at == "whole")
        return exactness_model(seq.to_inner(n), seq.to_whole(n));
    if (at == "inner")
        return exactness_model(seq.connecting(n), seq.to_inner(n));
    return exactness_model(seq.to_whole(n), seq.connecting(n - 1));
}

// ---------------------------------------------------------------------------
// builtin corpus

namespace {

CubicalComplex closure_of(std::size_t ambient, const std::vector<std::vector<std::pair<int, int>>>& cubes)
{
    std::vector<Cube> cs;
    for (const auto& c : cubes)
        cs.push_back(Cube::from_intervals(c));
    return CubicalComplex::closure(ambient, cs);
}

json rule_json(const CoordinateRule& r)
{
    switch (r.kind) {
    case CoordinateRule::Kind::constant:
        return {{"constant", r.constant}};
    case CoordinateRule::Kind::affine:
        return {{"source", r.source}, {"scale", r.scale}, {"offset", r.offset}};
    case CoordinateRule::Kind::table:
        return {{"source", r.source}, {"origin", r.origin}, {"values", r.values}};
    }
    return {};
}

json map_json(const std::string& source, const std::string& target, const std::vector<CoordinateRule>& rules)
{
    json rs = json::array();
    for (const CoordinateRule& r : rules)
        rs.push_back(rule_json(r));
    return {{"source", source}, {"target", target}, {"rules", rs}};
}

json skeleton_levels(json& complexes, const std::string& name, const CubicalComplex& x)
{
    json levels = json::array();
    for (int p = 0; p <= x.dimension(); ++p) {
        const std::string level = name + "_skel" + std::to_string(p);
        complexes[level] = complex_to_json(skeleton(x, p));
        levels.push_back(level);
    }
    return {{"space", name}, {"levels", levels}};
}

} // namespace

Corpus builtin_corpus()
{
    json complexes = json::object();
    auto add = [&](const std::string& name, const CubicalComplex& x) { complexes[name] = complex_to_json(x); };

    const CubicalComplex circle = shapes::square_boundary();
    const CubicalComplex l_low = closure_of(2, {{{0, 1}, {0, 0}}, {{1, 1}, {0, 1}}});
    const CubicalComplex l_high = closure_of(2, {{{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}});
    const CubicalComplex three_edges = closure_of(2, {{{0, 1}, {0, 0}}, {{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}});
    const SubcomplexPair loop = shapes::double_loop_pair();

    add("pt", shapes::point());
    add("I", shapes::interval());
    add("dI", shapes::interval_boundary());
    add("empty1", CubicalComplex::empty(1));
    add("sq", shapes::square());
    add("dsq", circle);
    add("sq_corner", closure_of(2, {{{0, 0}, {0, 0}}}));
    add("sq_vertices", skeleton(shapes::square(), 0));
    add("three_edges", three_edges);
    add("empty2", CubicalComplex::empty(2));
    add("l_low", l_low);
    add("l_high", l_high);
    add("strip", shapes::box({2, 1}));
    add("strip_left", shapes::square());
    add("strip_right", closure_of(2, {{{1, 2}, {0, 1}}}));
    add("torus", shapes::torus());
    add("torus_circle", product(circle, closure_of(2, {{{0, 0}, {0, 0}}})));
    add("cylinder_low", product(l_low, circle));
    add("cylinder_high", product(l_high, circle));
    add("empty4", CubicalComplex::empty(4));
    add("solid_torus", loop.total());
    add("double_loop", loop.sub());

    json pairs = {
        {"pt", {{"total", "pt"}}},
        {"I", {{"total", "I"}, {"sub", "dI"}}},
        {"dI", {{"total", "dI"}}},
        {"sq", {{"total", "sq"}, {"sub", "dsq"}}},
        {"sq_abs", {{"total", "sq"}}},
        {"circle", {{"total", "dsq"}}},
        {"sq_rel_corner", {{"total", "sq"}, {"sub", "sq_corner"}}},
        {"torus", {{"total", "torus"}}},
        {"double_loop", {{"total", "solid_torus"}, {"sub", "double_loop"}}},
    };

    json maps = {
        {"flip", map_json("I", "I", {CoordinateRule::affine(0, -1, 1)})},
        {"swap_sq", map_json("sq", "sq", {CoordinateRule::affine(1), CoordinateRule::affine(0)})},
        {"rotate_circle", map_json("circle", "circle", {CoordinateRule::affine(1), CoordinateRule::affine(0, -1, 1)})},
        {"torus_to_pt", map_json("torus", "pt", {})},
        {"circle_to_pt", map_json("circle", "pt", {})},
    };

    json triples = {
        {"interval", {{"x", "I"}, {"y", "dI"}, {"z", "empty1"}}},
        {"disk", {{"x", "sq"}, {"y", "dsq"}, {"z", "three_edges"}}},
        {"square_corner", {{"x", "sq"}, {"y", "dsq"}, {"z", "sq_corner"}}},
        {"torus_circle", {{"x", "torus"}, {"y", "torus_circle"}, {"z", "empty4"}}},
    };

    json filtrations = {
        {"sq_skeleton", skeleton_levels(complexes, "sq", shapes::square())},
        {"sq_three_edges", {{"space", "sq"}, {"levels", {"sq_vertices", "three_edges", "sq"}}}},
        {"torus_skeleton", skeleton_levels(complexes, "torus", shapes::torus())},
    };

    json covers = {
        {"trivial", {{"x", "sq"}, {"y", "sq"}, {"z", "empty2"}}},
        {"strip", {{"x", "strip"}, {"y", "strip_left"}, {"z", "strip_right"}}},
        {"l_shapes", {{"x", "dsq"}, {"y", "l_low"}, {"z", "l_high"}}},
        {"torus_cylinders", {{"x", "torus"}, {"y", "cylinder_low"}, {"z", "cylinder_high"}}},
    };

    json sequent_files = {
        {"excision_l_shapes",
         {{"text", "# excision for the two arcs of the circle\n"
                   "sort W = whole\n"
                   "sort P = piece\n"
                   "symbol r : W -> P = exc\n"
                   "⊤ ⊢_x r(x) = * → x = *\n"
                   "⊤ ⊢_{y:P} ⊤ → (∃x) r(x) = y\n"},
          {"model", {{"kind", "excision"}, {"cover", "l_shapes"}, {"degree", 1}}}}},
        {"interval_inner",
         {{"text", "sort A = A\n"
                   "sort B = B\n"
                   "sort C = C\n"
                   "symbol g : A -> B = g\n"
                   "symbol f : B -> C = f\n"
                   "⊤ ⊢_y f(y) = * → (∃x) g(x) = y\n"
                   "⊤ ⊢_x f(g(x)) = *\n"},
          {"model", {{"kind", "junction"}, {"triple", "interval"}, {"degree", 0}, {"at", "inner"}}}}},
    };

    return Corpus::from_json({{"schema", corpus_schema},
                              {"version", corpus_version},
                              {"complexes", complexes},
                              {"pairs", pairs},
                              {"maps", maps},
                              {"triples", triples},
                              {"filtrations", filtrations},
                              {"covers", covers},
                              {"sequent_files", sequent_files}});
}

// ---------------------------------------------------------------------------
// generator

namespace {

class Generator
{
public:
    Generator(std::uint64_t seed, const GeneratorBounds& bounds) : rng_(seed), bounds_(bounds) {}

    json run()
    {
        json out = {{"schema", corpus_schema},   {"version", corpus_version}, {"complexes", json::object()},
                    {"pairs", json::object()},   {"maps", json::object()},    {"triples", json::object()},
                    {"filtrations", json::object()}, {"covers", json::object()}};
        if (bounds_.max_cubes == 0)
            return out;
        for (std::size_t k = 0; k < bounds_.complexes; ++k) {
            const std::string name = "c" + std::to_string(k);
            const CubicalComplex x = random_complex();
            out["complexes"][name] = complex_to_json(x);
            out["pairs"][name] = {{"total", name}};
            out["filtrations"][name + "_skeleton"] = skeleton_levels(out["complexes"], name, x);

            for (std::size_t t = 0; t < bounds_.triples_per_complex; ++t) {
                const std::string tn = name + "_t" + std::to_string(t);
                const CubicalComplex y = random_subcomplex(x);
                const CubicalComplex z = random_subcomplex(y);
                out["complexes"][tn + "_y"] = complex_to_json(y);
                out["complexes"][tn + "_z"] = complex_to_json(z);
                out["triples"][tn] = {{"x", name}, {"y", tn + "_y"}, {"z", tn + "_z"}};
                out["pairs"][tn] = {{"total", name}, {"sub", tn + "_y"}};
            }
            for (std::size_t v = 0; v < bounds_.covers_per_complex; ++v) {
                const std::string vn = name + "_v" + std::to_string(v);
                const auto [y, z] = random_cover(x);
                out["complexes"][vn + "_y"] = complex_to_json(y);
                out["complexes"][vn + "_z"] = complex_to_json(z);
                out["covers"][vn] = {{"x", name}, {"y", vn + "_y"}, {"z", vn + "_z"}};
            }
            for (std::size_t m = 0; m < bounds_.maps_per_complex; ++m) {
                const std::string mn = name + "_m" + std::to_string(m);
                const std::vector<int> extents = random_extents(1 + below(2), 2);
                std::vector<CoordinateRule> rules;
                for (int attempt = 0;; ++attempt) {
                    rules = random_rules(x, extents, attempt >= 8);
                    try {
                        CubicalMap(x, shapes::box(extents), rules);
                        break;
                    } catch (const NotACubicalMap&) {
                    }
                }
                out["complexes"][mn + "_box"] = complex_to_json(shapes::box(extents));
                out["pairs"][mn + "_box"] = {{"total", mn + "_box"}};
                out["maps"][mn] = map_json(name, mn + "_box", rules);
            }
        }
        return out;
    }

private:
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    bool coin(std::size_t one_in) { return below(one_in) == 0; }

    std::vector<int> random_extents(std::size_t ambient, int largest)
    {
        std::vector<int> e;
        for (std::size_t i = 0; i < ambient; ++i)
            e.push_back(1 + static_cast<int>(below(static_cast<std::size_t>(largest))));
        return e;
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    CubicalComplex random_complex()
    {
        const std::size_t ambient = 1 + below(3);
        const std::vector<int> extents = random_extents(ambient, ambient == 1 ? 4 : 2);
        std::vector<Cube> pool = shapes::box(extents).all_cubes();
        shuffle(pool);
        const std::size_t target = 1 + below(bounds_.max_cubes);
        std::vector<Cube> chosen;
        CubicalComplex x = CubicalComplex::empty(ambient);
        for (const Cube& c : pool) {
            if (x.size() >= target)
                break;
            chosen.push_back(c);
            CubicalComplex next = CubicalComplex::closure(ambient, chosen);
            if (next.size() > bounds_.max_cubes) {
                chosen.pop_back();
                continue;
            }
            x = std::move(next);
        }
        return x;
    }

    CubicalComplex random_subcomplex(const CubicalComplex& x)
    {
        std::vector<Cube> chosen;
        const std::size_t keep = 1 + below(3);
        for (const Cube& c : x.all_cubes())
            if (below(4) < keep)
                chosen.push_back(c);
        return CubicalComplex::closure(x.ambient(), chosen);
    }

    std::pair<CubicalComplex, CubicalComplex> random_cover(const CubicalComplex& x)
    {
        std::set<Cube> faces;
        const std::vector<Cube> all = x.all_cubes();
        for (const Cube& c : all)
            for (const auto& [f, sign] : c.boundary())
                faces.insert(f);
        std::vector<Cube> y, z;
        for (const Cube& c : all) {
            if (faces.count(c))
                continue;
            const bool to_y = coin(2);
            (to_y ? y : z).push_back(c);
            if (coin(4))
                (to_y ? z : y).push_back(c);
        }
        return {CubicalComplex::closure(x.ambient(), y), CubicalComplex::closure(x.ambient(), z)};
    }

    /// A random walk of table values, or constants once attempts run out.
    std::vector<CoordinateRule> random_rules(const CubicalComplex& x, const std::vector<int>& extents, bool constant)
    {
        const auto [lo, hi] = x.bounding_box();
        std::vector<CoordinateRule> rules;
        for (const int e : extents) {
            if (constant || lo.empty() || coin(3)) {
                rules.push_back(CoordinateRule::fixed(static_cast<int>(below(static_cast<std::size_t>(e) + 1))));
                continue;
            }
            const std::size_t s = below(x.ambient());
            std::vector<int> values{static_cast<int>(below(static_cast<std::size_t>(e) + 1))};
            for (int v = lo[s] + 1; v <= hi[s]; ++v)
                values.push_back(std::clamp(values.back() + static_cast<int>(below(3)) - 1, 0, e));
            rules.push_back(CoordinateRule::tabulated(s, lo[s], values));
        }
        return rules;
    }

    std::mt19937_64 rng_;
    GeneratorBounds bounds_;
};

} // namespace

json generate_corpus(std::uint64_t seed, const GeneratorBounds& bounds)
{
    return Generator(seed, bounds).run();
}

} // namespace cubenori
