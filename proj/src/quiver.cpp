#include "cubenori/quiver.hpp"

#include "cubenori/errors.hpp"

namespace cubenori {

std::optional<std::size_t> QuiverCorpus::find(const SubcomplexPair& p) const
{
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i] == p)
            return i;
    return std::nullopt;
}

std::size_t QuiverCorpus::add_pair(const std::string& name, const SubcomplexPair& p)
{
    if (auto i = find(p))
        return *i;
    pairs_.push_back(p);
    pair_names_.push_back(name);
    return pairs_.size() - 1;
}

std::size_t QuiverCorpus::add_map(const std::string& name, const PairMap& f)
{
    add_pair(name + ".source", f.source());
    add_pair(name + ".target", f.target());
    maps_.push_back(f);
    map_names_.push_back(name);
    return maps_.size() - 1;
}

std::size_t QuiverCorpus::add_triple(const std::string& name, const Triple& t)
{
    add_pair(name + ".outer", t.outer());
    add_pair(name + ".inner", t.inner());
    triples_.push_back(t);
    triple_names_.push_back(name);
    return triples_.size() - 1;
}

void close_under_products(QuiverCorpus& corpus, int max_degree, std::size_t max_cubes)
{
    std::vector<std::optional<int>> degree;
    auto certify_new = [&] {
        while (degree.size() < corpus.pair_count()) {
            const GoodPairVerdict v = certify_good_pair(corpus.pair(degree.size()));
            const bool useful = v.good() && !v.certificate->group.is_trivial();
            degree.push_back(useful ? std::optional<int>(v.certificate->degree) : std::nullopt);
        }
    };
    certify_new();
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t count = corpus.pair_count();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b) {
                if (!degree[a] || !degree[b] || *degree[a] + *degree[b] > max_degree)
                    continue;
                if (corpus.pair(a).total().size() * corpus.pair(b).total().size() > max_cubes)
                    continue;
                const SubcomplexPair prod = pair_product(corpus.pair(a), corpus.pair(b));
                if (corpus.find(prod))
                    continue;
                corpus.add_pair(corpus.pair_name(a) + "*" + corpus.pair_name(b), prod);
                changed = true;
            }
        certify_new();
    }
}

std::string kind_name(QuiverEdge::Kind k)
{
    switch (k) {
    case QuiverEdge::Kind::identity: return "identity";
    case QuiverEdge::Kind::functorial: return "functorial";
    case QuiverEdge::Kind::connecting: return "connecting";
    case QuiverEdge::Kind::alpha: return "alpha";
    case QuiverEdge::Kind::beta: return "beta";
    case QuiverEdge::Kind::beta_prime: return "beta'";
    case QuiverEdge::Kind::unit_left: return "u_left";
    case QuiverEdge::Kind::unit_right: return "u_right";
    }
    return "?";
}

// ---------------------------------------------------------------------------

QuiverFragment::QuiverFragment(std::shared_ptr<const QuiverCorpus> corpus, int lo, int hi)
    : corpus_(std::move(corpus)), lo_(lo), hi_(hi)
{
    const QuiverCorpus& c = *corpus_;
    for (std::size_t p = 0; p < c.pair_count(); ++p)
        for (int n = lo; n <= hi; ++n)
            vertices_.push_back({p, n});
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        edges_.push_back({QuiverEdge::Kind::identity, v, v, 0, {}});
    for (std::size_t k = 0; k < c.maps().size(); ++k) {
        const std::size_t source = *c.find(c.maps()[k].source());
        const std::size_t target = *c.find(c.maps()[k].target());
        for (int n = lo; n <= hi; ++n)
            edges_.push_back({QuiverEdge::Kind::functorial, *vertex(target, n), *vertex(source, n), k, {}});
    }
    for (std::size_t k = 0; k < c.triples().size(); ++k) {
        const std::size_t outer = *c.find(c.triples()[k].outer());
        const std::size_t inner = *c.find(c.triples()[k].inner());
        for (int n = lo; n < hi; ++n)
            edges_.push_back({QuiverEdge::Kind::connecting, *vertex(inner, n), *vertex(outer, n + 1), k, {}});
    }
}

std::optional<std::size_t> QuiverFragment::vertex(std::size_t pair, int degree) const
{
    if (degree < lo_ || degree > hi_ || pair >= corpus_->pair_count())
        return std::nullopt;
    return pair * static_cast<std::size_t>(hi_ - lo_ + 1) + static_cast<std::size_t>(degree - lo_);
}

std::string QuiverFragment::vertex_name(std::size_t v) const
{
    const QuiverVertex& x = vertices_.at(v);
    return corpus_->pair_name(x.pair) + "@" + std::to_string(x.degree);
}

namespace {

nlohmann::json edge_json(const QuiverEdge& e, const QuiverFragment& base, const std::vector<std::size_t>* local)
{
    auto name = [&](std::size_t v) { return base.vertex_name(local ? (*local)[v] : v); };
    nlohmann::json j = {{"kind", kind_name(e.kind)}, {"from", name(e.from)}, {"to", name(e.to)}};
    if (e.kind == QuiverEdge::Kind::functorial)
        j["label"] = base.corpus().map_names()[e.item];
    else if (e.kind == QuiverEdge::Kind::connecting)
        j["label"] = base.corpus().triple_names()[e.item];
    if (!e.factors.empty()) {
        nlohmann::json f = nlohmann::json::array();
        for (std::size_t v : e.factors)
            f.push_back(name(v));
        j["factors"] = f;
    }
    return j;
}

} // namespace

nlohmann::json QuiverFragment::to_json() const
{
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t p = 0; p < corpus_->pair_count(); ++p)
        pairs.push_back({{"name", corpus_->pair_name(p)},
                         {"cubes", corpus_->pair(p).total().size()},
                         {"sub_cubes", corpus_->pair(p).sub().size()}});
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        vertices.push_back(vertex_name(v));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_)
        edges.push_back(edge_json(e, *this, nullptr));
    return {{"window", {lo_, hi_}}, {"pairs", pairs}, {"vertices", vertices}, {"edges", edges}};
}

QuiverFragment build_fragment(const QuiverCorpus& corpus, int lo, int hi)
{
    return QuiverFragment(std::make_shared<const QuiverCorpus>(corpus), lo, hi);
}

std::vector<GoodPairVerdict> certify_corpus(const QuiverCorpus& corpus)
{
    std::vector<GoodPairVerdict> out;
    for (std::size_t p = 0; p < corpus.pair_count(); ++p)
        out.push_back(certify_good_pair(corpus.pair(p)));
    return out;
}

// ---------------------------------------------------------------------------

int GradedTensorQuiver::grading(std::size_t v) const
{
    return ((vertex(v).degree % 2) + 2) % 2;
}

nlohmann::json GradedTensorQuiver::to_json() const
{
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        vertices.push_back({{"name", vertex_name(v)}, {"grading", grading(v)}});
    nlohmann::json tensor = nlohmann::json::array();
    for (const auto& [vw, t] : tensor_)
        tensor.push_back({vertex_name(vw.first), vertex_name(vw.second), vertex_name(t)});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_)
        edges.push_back(edge_json(e, base_, &vertices_));
    return {{"unit", vertex_name(unit_)}, {"vertices", vertices}, {"tensor", tensor}, {"edges", edges}};
}

GradedTensorQuiver good_subquiver(const QuiverFragment& f, const std::vector<GoodPairVerdict>& certificates)
{
    const QuiverCorpus& c = f.corpus();
    if (certificates.size() != c.pair_count())
        throw std::invalid_argument("good_subquiver: one verdict per corpus pair expected");
    auto good = [&](const QuiverVertex& x) {
        const GoodPairVerdict& v = certificates[x.pair];
        return v.good() && v.certificate->degree == x.degree;
    };

    GradedTensorQuiver q;
    q.base_ = f;
    std::vector<std::optional<std::size_t>> local(f.vertices().size());
    for (std::size_t v = 0; v < f.vertices().size(); ++v)
        if (good(f.vertices()[v])) {
            local[v] = q.vertices_.size();
            q.vertices_.push_back(v);
        }
    for (const QuiverEdge& e : f.edges())
        if (local[e.from] && local[e.to])
            q.edges_.push_back({e.kind, *local[e.from], *local[e.to], e.item, {}});

    const SubcomplexPair point = SubcomplexPair::absolute(shapes::point());
    const auto unit_pair = c.find(point);
    const auto unit_vertex = unit_pair ? f.vertex(*unit_pair, 0) : std::nullopt;
    if (!unit_vertex || !local[*unit_vertex])
        throw NotClosedUnderProduct("the unit vertex (pt, empty, 0) is not in the fragment");
    q.unit_ = *local[*unit_vertex];

    const std::size_t count = q.vertices_.size();
    for (std::size_t v = 0; v < count; ++v)
        for (std::size_t w = 0; w < count; ++w) {
            const QuiverVertex& a = q.vertex(v);
            const QuiverVertex& b = q.vertex(w);
            const int degree = a.degree + b.degree;
            if (degree > f.hi())
                continue;
            const SubcomplexPair prod = pair_product(c.pair(a.pair), c.pair(b.pair));
            const auto pair = c.find(prod);
            const bool required = !certificates[a.pair].certificate->group.is_trivial() &&
                                  !certificates[b.pair].certificate->group.is_trivial();
            if (!pair && !required)
                continue;
            if (!pair)
                throw NotClosedUnderProduct("tensor of " + q.vertex_name(v) + " and " + q.vertex_name(w) +
                                            " is not in the corpus");
            const auto t = f.vertex(*pair, degree);
            if ((!t || !local[*t]) && !required)
                continue;
            if (!t || !local[*t])
                throw NotGood("tensor " + c.pair_name(*pair) + "@" + std::to_string(degree) + " of " +
                              q.vertex_name(v) + " and " + q.vertex_name(w) + " is not a good vertex");
            q.tensor_[{v, w}] = *local[*t];
        }

    auto tensor = [&](std::size_t v, std::size_t w) -> std::optional<std::size_t> {
        const auto it = q.tensor_.find({v, w});
        return it == q.tensor_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    };
    for (const auto& [vw, t] : q.tensor_) {
        const auto [v, w] = vw;
        if (auto s = tensor(w, v))
            q.edges_.push_back({QuiverEdge::Kind::alpha, *s, t, 0, {v, w}});
    }
    for (std::size_t u = 0; u < count; ++u)
        for (std::size_t v = 0; v < count; ++v)
            for (std::size_t w = 0; w < count; ++w) {
                const auto uv = tensor(u, v);
                const auto vw = tensor(v, w);
                if (!uv || !vw)
                    continue;
                const auto left = tensor(*uv, w);
                const auto right = tensor(u, *vw);
                if (!left || !right)
                    continue;
                q.edges_.push_back({QuiverEdge::Kind::beta, *left, *right, 0, {u, v, w}});
                q.edges_.push_back({QuiverEdge::Kind::beta_prime, *right, *left, 0, {u, v, w}});
            }
    for (std::size_t v = 0; v < count; ++v) {
        if (auto t = tensor(q.unit_, v))
            q.edges_.push_back({QuiverEdge::Kind::unit_left, *t, v, 0, {q.unit_, v}});
        if (auto t = tensor(v, q.unit_))
            q.edges_.push_back({QuiverEdge::Kind::unit_right, *t, v, 0, {v, q.unit_}});
    }
    return q;
}

// ---------------------------------------------------------------------------

namespace {

PairMap swap_map(const SubcomplexPair& p, const SubcomplexPair& q)
{
    return PairMap(pair_product(p, q), pair_product(q, p), CubicalMap::swap(p.total(), q.total()));
}

bool agree(const GroupHom& a, const GroupHom& b)
{
    const IntMatrix& x = a.matrix();
    const IntMatrix& y = b.matrix();
    if (x.rows() != y.rows() || x.cols() != y.cols())
        return false;
    for (std::size_t j = 0; j < x.cols(); ++j)
        if (!a.target().is_zero(x.column(j) - y.column(j)))
            return false;
    return true;
}

void compare(Report& report, const std::string& name, const GroupHom& lhs, const GroupHom& rhs)
{
    const bool ok = agree(lhs, rhs);
    nlohmann::json detail = nlohmann::json::object();
    if (!ok)
        detail = {{"left", lhs.matrix().to_string()}, {"right", rhs.matrix().to_string()}};
    report.add(name, ok, detail);
}

} // namespace

QuiverRepresentation::QuiverRepresentation(GradedTensorQuiver q) : quiver_(std::move(q))
{
    const QuiverCorpus& c = quiver_.corpus();
    for (std::size_t p = 0; p < c.pair_count(); ++p)
        cohomology_.push_back(std::make_shared<const PairCohomology>(c.pair(p)));
    for (std::size_t v = 0; v < quiver_.vertices().size(); ++v)
        groups_.push_back(cohomology(quiver_.vertex(v).pair).group(quiver_.vertex(v).degree));

    for (const QuiverEdge& e : quiver_.edges()) {
        const QuiverVertex& from = quiver_.vertex(e.from);
        const QuiverVertex& to = quiver_.vertex(e.to);
        const PairCohomology& hf = cohomology(from.pair);
        const PairCohomology& ht = cohomology(to.pair);
        switch (e.kind) {
        case QuiverEdge::Kind::identity:
            maps_.push_back(GroupHom::identity(groups_[e.from]));
            break;
        case QuiverEdge::Kind::functorial:
            maps_.push_back(pullback(c.maps()[e.item], from.degree, hf, ht));
            break;
        case QuiverEdge::Kind::connecting:
            maps_.push_back(connecting(c.triples()[e.item], from.degree, hf, ht));
            break;
        case QuiverEdge::Kind::alpha: {
            // from w (x) v to v (x) w, induced by the swap of v (x) w onto w (x) v
            const SubcomplexPair& pv = c.pair(quiver_.vertex(e.factors[0]).pair);
            const SubcomplexPair& pw = c.pair(quiver_.vertex(e.factors[1]).pair);
            maps_.push_back(pullback(swap_map(pv, pw), to.degree, hf, ht));
            break;
        }
        default: {
            // associativity and unit constraints relate equal pairs
            const PairMap id(ht.pair(), hf.pair(), CubicalMap::identity(ht.pair().total()));
            maps_.push_back(pullback(id, to.degree, hf, ht));
            break;
        }
        }
    }
}

GroupHom QuiverRepresentation::kappa(std::size_t v, std::size_t w) const
{
    const auto it = quiver_.tensor().find({v, w});
    if (it == quiver_.tensor().end())
        throw NotClosedUnderProduct("no tensor vertex for " + quiver_.vertex_name(v) + " and " +
                                    quiver_.vertex_name(w));
    const QuiverVertex& a = quiver_.vertex(v);
    const QuiverVertex& b = quiver_.vertex(w);
    return cross_product(cohomology(a.pair), cohomology(b.pair), cohomology(quiver_.vertex(it->second).pair),
                         a.degree, b.degree)
        .map;
}

QuiverRepresentation represent(const GradedTensorQuiver& q)
{
    return QuiverRepresentation(q);
}

Report check_tensor_representation(const QuiverRepresentation& rep)
{
    Report report("tensor_representation");
    const GradedTensorQuiver& q = rep.quiver();
    const QuiverCorpus& c = q.corpus();
    const auto& tensor = q.tensor();
    auto has = [&](std::size_t v, std::size_t w) { return tensor.count({v, w}) > 0; };
    auto name = [&](std::size_t v) { return q.vertex_name(v); };
    auto pair_of = [&](std::size_t v) -> const SubcomplexPair& { return c.pair(q.vertex(v).pair); };

    for (std::size_t v = 0; v < q.vertices().size(); ++v)
        report.add("free " + name(v), rep.vertex(v).is_free(), {{"group", rep.vertex(v).describe()}});
    for (const auto& [vw, t] : tensor) {
        const GroupHom k = rep.kappa(vw.first, vw.second);
        report.add("kappa iso " + name(vw.first) + "*" + name(vw.second), k.is_isomorphism(),
                   {{"source", k.source().describe()}, {"target", k.target().describe()}});
    }

    // unit vertex through epsilon
    const PairCohomology& hpt = rep.cohomology(q.vertex(q.unit()).pair);
    IntMatrix eps(1, hpt.group(0).generator_count());
    for (std::size_t j = 0; j < eps.cols(); ++j)
        eps(0, j) = hpt.at(0).cocycle(j)[0];
    const GroupHom epsilon(hpt.group(0), FgAbGroup::free(1), eps);

    for (std::size_t e = 0; e < q.edges().size(); ++e) {
        const QuiverEdge& edge = q.edges()[e];
        const GroupHom& image = rep.edge(e);
        const std::string label = kind_name(edge.kind) + " " + name(edge.from) + "->" + name(edge.to);
        switch (edge.kind) {
        case QuiverEdge::Kind::identity:
            break;
        case QuiverEdge::Kind::functorial: {
            const PairMap& f = c.maps()[edge.item];
            for (std::size_t w = 0; w < q.vertices().size(); ++w) {
                const GroupHom idw = GroupHom::identity(rep.vertex(w));
                if (has(edge.from, w) && has(edge.to, w)) {
                    const PairMap fw = pair_product(f, PairMap::identity(pair_of(w)));
                    const std::size_t a = tensor.at({edge.from, w});
                    const std::size_t b = tensor.at({edge.to, w});
                    const GroupHom lifted =
                        pullback(fw, q.vertex(b).degree, rep.cohomology(q.vertex(a).pair), rep.cohomology(q.vertex(b).pair));
                    compare(report, label + " (x) " + name(w), compose(lifted, rep.kappa(edge.from, w)),
                            compose(rep.kappa(edge.to, w), tensor_hom(image, idw)));
                }
                if (has(w, edge.from) && has(w, edge.to)) {
                    const PairMap wf = pair_product(PairMap::identity(pair_of(w)), f);
                    const std::size_t a = tensor.at({w, edge.from});
                    const std::size_t b = tensor.at({w, edge.to});
                    const GroupHom lifted =
                        pullback(wf, q.vertex(b).degree, rep.cohomology(q.vertex(a).pair), rep.cohomology(q.vertex(b).pair));
                    compare(report, name(w) + " (x) " + label, compose(lifted, rep.kappa(w, edge.from)),
                            compose(rep.kappa(w, edge.to), tensor_hom(idw, image)));
                }
            }
            break;
        }
        case QuiverEdge::Kind::connecting: {
            const Triple& t = c.triples()[edge.item];
            const int n = q.vertex(edge.from).degree;
            for (std::size_t w = 0; w < q.vertices().size(); ++w) {
                const int m = q.vertex(w).degree;
                if (has(edge.from, w) && has(edge.to, w)) {
                    Report r = check_ax2(t, pair_of(w), n, m);
                    for (const Check& k : r.checks())
                        report.add(label + " (x) " + name(w) + " " + k.name, k.passed, k.detail);
                }
                if (has(w, edge.from) && has(w, edge.to)) {
                    Report r = check_ax3(pair_of(w), t, m, n);
                    for (const Check& k : r.checks())
                        report.add(name(w) + " (x) " + label + " " + k.name, k.passed, k.detail);
                }
            }
            break;
        }
        case QuiverEdge::Kind::alpha: {
            const std::size_t v = edge.factors[0];
            const std::size_t w = edge.factors[1];
            const int sign = external_sign(q.grading(v), q.grading(w));
            const GroupHom lhs =
                compose(image, compose(rep.kappa(w, v), tensor_swap(rep.vertex(v), rep.vertex(w))));
            compare(report, label + " sign " + std::to_string(sign), lhs, rep.kappa(v, w).scaled(sign));
            report.add(label + " invertible", image.is_isomorphism());
            break;
        }
        case QuiverEdge::Kind::beta:
        case QuiverEdge::Kind::beta_prime: {
            const std::size_t u = edge.factors[0];
            const std::size_t v = edge.factors[1];
            const std::size_t w = edge.factors[2];
            const std::size_t uv = tensor.at({u, v});
            const std::size_t vw = tensor.at({v, w});
            const GroupHom left = compose(rep.kappa(uv, w), tensor_hom(rep.kappa(u, v), GroupHom::identity(rep.vertex(w))));
            const GroupHom right = compose(rep.kappa(u, vw), tensor_hom(GroupHom::identity(rep.vertex(u)), rep.kappa(v, w)));
            if (edge.kind == QuiverEdge::Kind::beta)
                compare(report, label, compose(image, left), right);
            else
                compare(report, label, compose(image, right), left);
            report.add(label + " invertible", image.is_isomorphism());
            break;
        }
        case QuiverEdge::Kind::unit_left: {
            const std::size_t v = edge.factors[1];
            const GroupHom scalar = tensor_hom(epsilon, GroupHom::identity(rep.vertex(v)));
            const GroupHom unitor(scalar.target(), rep.vertex(v), IntMatrix::identity(rep.vertex(v).generator_count()));
            compare(report, label, compose(image, rep.kappa(q.unit(), v)), compose(unitor, scalar));
            report.add(label + " invertible", image.is_isomorphism());
            break;
        }
        case QuiverEdge::Kind::unit_right: {
            const std::size_t v = edge.factors[0];
            const GroupHom scalar = tensor_hom(GroupHom::identity(rep.vertex(v)), epsilon);
            const GroupHom unitor(scalar.target(), rep.vertex(v), IntMatrix::identity(rep.vertex(v).generator_count()));
            compare(report, label, compose(image, rep.kappa(v, q.unit())), compose(unitor, scalar));
            report.add(label + " invertible", image.is_isomorphism());
            break;
        }
        }
    }
    return report;
}

} // namespace cubenori
