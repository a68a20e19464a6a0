#pragma once

#include "cubenori/cellular.hpp"
#include "cubenori/tensor.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cubenori {

/// Pairs, pair maps and triples from which a quiver fragment is built.
class QuiverCorpus
{
public:
    /// Registers a pair, returning the index of an equal pair if one exists.
    std::size_t add_pair(const std::string& name, const SubcomplexPair& p);
    /// Registers a pair map together with its source and target pairs.
    std::size_t add_map(const std::string& name, const PairMap& f);
    /// Registers a triple together with the pairs (X, Y) and (Y, Z).
    std::size_t add_triple(const std::string& name, const Triple& t);

    std::optional<std::size_t> find(const SubcomplexPair& p) const;

    std::size_t pair_count() const noexcept { return pairs_.size(); }
    const SubcomplexPair& pair(std::size_t i) const { return pairs_.at(i); }
    const std::string& pair_name(std::size_t i) const { return pair_names_.at(i); }
    const std::vector<PairMap>& maps() const noexcept { return maps_; }
    const std::vector<std::string>& map_names() const noexcept { return map_names_; }
    const std::vector<Triple>& triples() const noexcept { return triples_; }
    const std::vector<std::string>& triple_names() const noexcept { return triple_names_; }

private:
    std::vector<SubcomplexPair> pairs_;
    std::vector<std::string> pair_names_;
    std::vector<PairMap> maps_;
    std::vector<std::string> map_names_;
    std::vector<Triple> triples_;
    std::vector<std::string> triple_names_;
};

/**
 * Adds pair products of good pairs with nonzero cohomology until every product whose total degree is
 * at most max_degree is present. Products are named "a*b". Products with more
 * than max_cubes cubes are left out.
 */
void close_under_products(QuiverCorpus& corpus, int max_degree, std::size_t max_cubes = 1000);

struct QuiverVertex
{
    std::size_t pair = 0;
    int degree = 0;
};

struct QuiverEdge
{
    enum class Kind { identity, functorial, connecting, alpha, beta, beta_prime, unit_left, unit_right };

    Kind kind = Kind::identity;
    std::size_t from = 0;
    std::size_t to = 0;
    /// Map or triple index for functorial and connecting edges; unused otherwise.
    std::size_t item = 0;
    /// Tensor factors (vertex indices) for constraint edges.
    std::vector<std::size_t> factors;
};

std::string kind_name(QuiverEdge::Kind k);

/// Vertices (X, Y, n) for n in a window, with identity, functorial and connecting edges.
class QuiverFragment
{
public:
    QuiverFragment() = default;
    QuiverFragment(std::shared_ptr<const QuiverCorpus> corpus, int lo, int hi);

    const QuiverCorpus& corpus() const noexcept { return *corpus_; }
    std::shared_ptr<const QuiverCorpus> corpus_ptr() const noexcept { return corpus_; }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return hi_; }

    const std::vector<QuiverVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<QuiverEdge>& edges() const noexcept { return edges_; }
    std::optional<std::size_t> vertex(std::size_t pair, int degree) const;
    std::string vertex_name(std::size_t v) const;

    nlohmann::json to_json() const;

private:
    std::shared_ptr<const QuiverCorpus> corpus_;
    int lo_ = 0;
    int hi_ = -1;
    std::vector<QuiverVertex> vertices_;
    std::vector<QuiverEdge> edges_;
};

QuiverFragment build_fragment(const QuiverCorpus& corpus, int lo, int hi);

/// Verdicts of certify_good_pair for each corpus pair.
std::vector<GoodPairVerdict> certify_corpus(const QuiverCorpus& corpus);

/**
 * Full subquiver on the good vertices with its tensor structure: v (x) w is
 * the vertex of the pair product in degree n + n', the grading is n mod 2,
 * the unit is (pt, empty, 0), and the constraint edges are
 *   alpha_{v,w} : w (x) v -> v (x) w        (swap of factors),
 *   beta_{u,v,w} : (u (x) v) (x) w -> u (x) (v (x) w) and beta' its inverse,
 *   u_left : 1 (x) v -> v, u_right : v (x) 1 -> v.
 * All constraint edges come from the canonical isomorphisms of pair products.
 */
class GradedTensorQuiver
{
public:
    const QuiverFragment& base() const noexcept { return base_; }
    const QuiverCorpus& corpus() const noexcept { return base_.corpus(); }

    /// Vertices as indices into base().vertices().
    const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
    const std::vector<QuiverEdge>& edges() const noexcept { return edges_; }
    /// (v, w) -> v (x) w, in indices of vertices().
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& tensor() const noexcept { return tensor_; }
    std::size_t unit() const noexcept { return unit_; }
    int grading(std::size_t v) const;
    const QuiverVertex& vertex(std::size_t v) const { return base_.vertices()[vertices_.at(v)]; }
    std::string vertex_name(std::size_t v) const { return base_.vertex_name(vertices_.at(v)); }

    nlohmann::json to_json() const;

private:
    friend GradedTensorQuiver good_subquiver(const QuiverFragment&, const std::vector<GoodPairVerdict>&);

    QuiverFragment base_;
    std::vector<std::size_t> vertices_;
    std::vector<QuiverEdge> edges_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> tensor_;
    std::size_t unit_ = 0;
};

/// Throws NotClosedUnderProduct when a tensor of two good vertices with
/// nonzero groups is missing within the window, or when the unit vertex is
/// absent. Tensors involving zero vertices are recorded when present.
GradedTensorQuiver good_subquiver(const QuiverFragment& f, const std::vector<GoodPairVerdict>& certificates);

/// Cohomology on vertices and edges of a graded tensor quiver.
class QuiverRepresentation
{
public:
    explicit QuiverRepresentation(GradedTensorQuiver q);

    const GradedTensorQuiver& quiver() const noexcept { return quiver_; }
    const FgAbGroup& vertex(std::size_t v) const { return groups_.at(v); }
    const GroupHom& edge(std::size_t e) const { return maps_.at(e); }
    const PairCohomology& cohomology(std::size_t pair) const { return *cohomology_.at(pair); }

    /// kappa : rep(v) (x) rep(w) -> rep(v (x) w).
    GroupHom kappa(std::size_t v, std::size_t w) const;

private:
    GradedTensorQuiver quiver_;
    std::vector<std::shared_ptr<const PairCohomology>> cohomology_;
    std::vector<FgAbGroup> groups_;
    std::vector<GroupHom> maps_;
};

QuiverRepresentation represent(const GradedTensorQuiver& q);

/**
 * The representation is a graded tensor representation through kappa:
 * vertex groups are free, kappa is an isomorphism on every tensor vertex,
 * and kappa commutes with functorial and connecting edges and with the
 * images of alpha (sign (-1)^{|v||w|}), beta, beta' and the unit edges.
 */
Report check_tensor_representation(const QuiverRepresentation& rep);

} // namespace cubenori
