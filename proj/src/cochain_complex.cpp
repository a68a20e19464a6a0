#include "cubenori/cochain_complex.hpp"

#include "cubenori/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubenori {

namespace {

bool zero_mod(const IntMatrix& m, const Integer& modulus)
{
    if (sgn(modulus) == 0)
        return m.is_zero();
    return m.reduced_mod(modulus).is_zero();
}

bool is_empty(const CochainComplex& c)
{
    return c.hi() < c.lo();
}

} // namespace

CochainComplex::CochainComplex(int lo, std::vector<std::size_t> ranks,
                               std::vector<IntMatrix> differentials, Integer modulus)
    : lo_(lo), ranks_(std::move(ranks)), differentials_(std::move(differentials)),
      modulus_(std::move(modulus))
{
    const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
    if (differentials_.size() != expected)
        throw std::invalid_argument("CochainComplex: need one differential between each pair of terms");
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        if (differentials_[k].rows() != ranks_[k + 1] || differentials_[k].cols() != ranks_[k])
            throw std::invalid_argument("CochainComplex: differential " + std::to_string(lo_ + static_cast<int>(k)) +
                                        " has the wrong shape");
    }
    for (std::size_t k = 0; k + 1 < differentials_.size(); ++k)
        if (!zero_mod(differentials_[k + 1] * differentials_[k], modulus_))
            throw IllDefinedMorphism("d^{n+1} d^n != 0 at n = " + std::to_string(lo_ + static_cast<int>(k)));
}

CochainComplex CochainComplex::zero()
{
    return CochainComplex(0, {}, {});
}

CochainComplex CochainComplex::concentrated(int degree, std::size_t rank, Integer modulus)
{
    return CochainComplex(degree, {rank}, {}, std::move(modulus));
}

std::size_t CochainComplex::rank(int n) const
{
    if (n < lo_ || n > hi())
        return 0;
    return ranks_[static_cast<std::size_t>(n - lo_)];
}

IntMatrix CochainComplex::differential(int n) const
{
    if (n >= lo_ && n < hi())
        return differentials_[static_cast<std::size_t>(n - lo_)];
    return IntMatrix(rank(n + 1), rank(n));
}

CochainComplex CochainComplex::shifted(int shift, bool negate) const
{
    std::vector<IntMatrix> d = differentials_;
    if (negate)
        for (auto& m : d)
            m = -m;
    return CochainComplex(lo_ + shift, ranks_, std::move(d), modulus_);
}

// ---------------------------------------------------------------------------

Cohomology::Cohomology(FgAbGroup group, IntMatrix cocycles, std::shared_ptr<const LatticeSolver> basis,
                       IntMatrix coordinate_map)
    : group_(std::move(group)), cocycles_(std::move(cocycles)), basis_(std::move(basis)),
      coordinate_map_(std::move(coordinate_map))
{
}

IntVector Cohomology::coordinates(const IntVector& cocycle) const
{
    if (basis_) {
        auto c = basis_->solve(cocycle);
        if (!c)
            throw std::invalid_argument("Cohomology::coordinates: vector is not a cocycle");
        return *c;
    }
    return coordinate_map_ * cocycle;
}

IntVector Cohomology::representative(const IntVector& coordinates) const
{
    return cocycles_ * coordinates;
}

Cohomology cohomology_at(const CochainComplex& c, int n)
{
    const std::size_t k = c.rank(n);
    const IntMatrix d = c.differential(n);
    const IntMatrix previous = c.differential(n - 1);

    if (sgn(c.modulus()) == 0) {
        // Kernel basis: trailing columns of V; their coordinates: trailing rows of V^-1.
        const SmithForm f = smith_normal_form(d);
        IntMatrix cocycles = f.V.select_columns(f.rank, k);
        IntMatrix coordinate_map = f.V_inverse.select_rows(f.rank, k);
        FgAbGroup group(coordinate_map * previous);
        return Cohomology(std::move(group), std::move(cocycles), nullptr, std::move(coordinate_map));
    }

    // Over Z/m the cocycles form the full-rank lattice {x : d x = 0 mod m}.
    const Integer& m = c.modulus();
    const std::size_t next = d.rows();
    const IntMatrix system = hstack(d, IntMatrix::identity(next).scaled(m));
    const IntMatrix generators = integer_kernel(system).select_rows(0, k);
    const SmithForm g = smith_normal_form(generators);
    IntMatrix basis(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            basis(i, j) = g.U_inverse(i, j) * g.S(j, j);
    auto solver = std::make_shared<const LatticeSolver>(basis);

    IntMatrix relations(k, previous.cols() + k);
    for (std::size_t j = 0; j < previous.cols(); ++j) {
        const IntVector coords = *solver->solve(previous.column(j));
        for (std::size_t i = 0; i < k; ++i)
            relations(i, j) = coords[i];
    }
    for (std::size_t j = 0; j < k; ++j) {
        const IntVector coords = *solver->solve(scaled(unit_vector(k, j), m));
        for (std::size_t i = 0; i < k; ++i)
            relations(i, previous.cols() + j) = coords[i];
    }
    return Cohomology(FgAbGroup(std::move(relations)), std::move(basis), std::move(solver), IntMatrix());
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(CochainComplex source, CochainComplex target, std::vector<IntMatrix> components,
                   int lo)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo),
      components_(std::move(components))
{
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const int n = lo_ + static_cast<int>(k);
        if (components_[k].rows() != target_.rank(n) || components_[k].cols() != source_.rank(n))
            throw NotAChainMap("component in degree " + std::to_string(n) + " has the wrong shape");
    }
    const int from = std::min(source_.lo(), target_.lo()) - 1;
    const int to = std::max(source_.hi(), target_.hi());
    const Integer& m = target_.modulus();
    for (int n = from; n <= to; ++n) {
        const IntMatrix lhs = component(n + 1) * source_.differential(n);
        const IntMatrix rhs = target_.differential(n) * component(n);
        if (!zero_mod(lhs - rhs, m))
            throw NotAChainMap("square in degree " + std::to_string(n) + " does not commute");
    }
}

ChainMap ChainMap::identity(const CochainComplex& c)
{
    std::vector<IntMatrix> parts;
    for (int n = c.lo(); n <= c.hi(); ++n)
        parts.push_back(IntMatrix::identity(c.rank(n)));
    return ChainMap(c, c, std::move(parts), c.lo());
}

ChainMap ChainMap::zero(const CochainComplex& source, const CochainComplex& target)
{
    return ChainMap(source, target, {}, 0);
}

IntMatrix ChainMap::component(int n) const
{
    if (n >= lo_ && n < lo_ + static_cast<int>(components_.size()))
        return components_[static_cast<std::size_t>(n - lo_)];
    return IntMatrix(target_.rank(n), source_.rank(n));
}

ChainMap ChainMap::scaled(const Integer& k) const
{
    std::vector<IntMatrix> parts;
    for (const auto& m : components_)
        parts.push_back(m.scaled(k));
    return ChainMap(source_, target_, std::move(parts), lo_);
}

ChainMap compose(const ChainMap& f, const ChainMap& g)
{
    const CochainComplex& mid_a = g.target();
    const CochainComplex& mid_b = f.source();
    if (mid_a.lo() != mid_b.lo() || mid_a.hi() != mid_b.hi())
        throw CompositionMismatch("chain maps are not composable");
    const int lo = std::min(g.source().lo(), f.target().lo());
    const int hi = std::max(g.source().hi(), f.target().hi());
    std::vector<IntMatrix> parts;
    for (int n = lo; n <= hi; ++n)
        parts.push_back(f.component(n) * g.component(n));
    return ChainMap(g.source(), f.target(), std::move(parts), lo);
}

GroupHom induced_hom_on_cohomology(const ChainMap& f, int n, const Cohomology& source,
                                   const Cohomology& target)
{
    const IntMatrix images = f.component(n) * source.cocycles();
    IntMatrix m(target.group().generator_count(), images.cols());
    for (std::size_t j = 0; j < images.cols(); ++j) {
        const IntVector coords = target.coordinates(images.column(j));
        for (std::size_t i = 0; i < coords.size(); ++i)
            m(i, j) = coords[i];
    }
    return GroupHom(source.group(), target.group(), std::move(m));
}

GroupHom induced_hom_on_cohomology(const ChainMap& f, int n)
{
    return induced_hom_on_cohomology(f, n, cohomology_at(f.source(), n), cohomology_at(f.target(), n));
}

namespace {

struct FiberDegrees
{
    int lo;
    int hi;
};

FiberDegrees fiber_degrees(const CochainComplex& c, const CochainComplex& d)
{
    const bool c_empty = is_empty(c);
    const bool d_empty = is_empty(d);
    if (c_empty && d_empty)
        return {0, -1};
    if (c_empty)
        return {d.lo() + 1, d.hi() + 1};
    if (d_empty)
        return {c.lo(), c.hi()};
    return {std::min(c.lo(), d.lo() + 1), std::max(c.hi(), d.hi() + 1)};
}

} // namespace

CochainComplex mapping_fiber(const ChainMap& f)
{
    const CochainComplex& c = f.source();
    const CochainComplex& d = f.target();
    const auto [lo, hi] = fiber_degrees(c, d);
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n)
        ranks.push_back(d.rank(n - 1) + c.rank(n));
    for (int n = lo; n < hi; ++n) {
        // rows: D^n then C^{n+1}; columns: D^{n-1} then C^n
        const IntMatrix top = hstack(-d.differential(n - 1), f.component(n));
        const IntMatrix bottom = hstack(IntMatrix(c.rank(n + 1), d.rank(n - 1)), c.differential(n));
        diffs.push_back(vstack(top, bottom));
    }
    return CochainComplex(lo, std::move(ranks), std::move(diffs), d.modulus());
}

FiberSequence fiber_sequence(const ChainMap& f)
{
    const CochainComplex& c = f.source();
    const CochainComplex& d = f.target();
    CochainComplex fiber = mapping_fiber(f);

    std::vector<IntMatrix> projection;
    for (int n = fiber.lo(); n <= fiber.hi(); ++n)
        projection.push_back(hstack(IntMatrix(c.rank(n), d.rank(n - 1)), IntMatrix::identity(c.rank(n))));

    CochainComplex shifted = d.shifted(1, false);
    std::vector<IntMatrix> inclusion;
    for (int n = fiber.lo(); n <= fiber.hi(); ++n) {
        IntMatrix part = vstack(IntMatrix::identity(d.rank(n - 1)), IntMatrix(c.rank(n), d.rank(n - 1)));
        if (n % 2 != 0)
            part = -part;
        inclusion.push_back(std::move(part));
    }

    ChainMap projection_map(fiber, c, std::move(projection), fiber.lo());
    ChainMap inclusion_map(shifted, fiber, std::move(inclusion), fiber.lo());
    return FiberSequence{std::move(fiber), std::move(projection_map), f, std::move(shifted),
                         std::move(inclusion_map)};
}

} // namespace cubenori
