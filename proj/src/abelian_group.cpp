#include "cubenori/abelian_group.hpp"

#include "cubenori/errors.hpp"
#include "cubenori/smith.hpp"

#include <sstream>

namespace cubenori {

FgAbGroup::FgAbGroup() : FgAbGroup(IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(IntMatrix relations) : relations_(std::move(relations))
{
    const std::size_t g = relations_.rows();
    const SmithForm f = smith_normal_form(relations_);

    auto normal = std::make_shared<Normal>();
    normal->invariant_factors = f.invariant_factors();

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < g; ++i) {
        Integer d = i < f.rank ? Integer(f.S(i, i)) : Integer(0);
        if (d == 1)
            continue;
        kept.push_back(i);
        normal->orders.push_back(d);
    }
    normal->projection = f.U.select_rows(kept);
    normal->lift = f.U_inverse.select_columns(kept);
    normal_ = std::move(normal);
}

FgAbGroup FgAbGroup::free(std::size_t rank)
{
    return FgAbGroup(IntMatrix(rank, 0));
}

FgAbGroup FgAbGroup::cyclic(const Integer& order)
{
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FgAbGroup(r);
}

FgAbGroup FgAbGroup::from_orders(const IntVector& orders)
{
    return FgAbGroup(IntMatrix::diagonal(orders));
}

std::size_t FgAbGroup::free_rank() const
{
    std::size_t r = 0;
    for (const auto& d : normal_->orders)
        if (sgn(d) == 0)
            ++r;
    return r;
}

IntVector FgAbGroup::torsion() const
{
    IntVector t;
    for (const auto& d : normal_->orders)
        if (sgn(d) != 0)
            t.push_back(d);
    return t;
}

IntVector FgAbGroup::normal_orders() const
{
    return normal_->orders;
}

std::size_t FgAbGroup::normal_dimension() const
{
    return normal_->orders.size();
}

IntVector FgAbGroup::invariant_factors() const
{
    return normal_->invariant_factors;
}

bool FgAbGroup::is_trivial() const
{
    return normal_->orders.empty();
}

bool FgAbGroup::is_free() const
{
    return torsion().empty();
}

bool FgAbGroup::is_finite() const
{
    return free_rank() == 0;
}

Integer FgAbGroup::order() const
{
    Integer n = 1;
    for (const auto& d : normal_->orders)
        n *= d;
    return n;
}

IntVector FgAbGroup::to_normal(const IntVector& v) const
{
    IntVector y = normal_->projection * v;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Integer& d = normal_->orders[i];
        if (sgn(d) != 0)
            mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
    }
    return y;
}

IntVector FgAbGroup::from_normal(const IntVector& normal) const
{
    return normal_->lift * normal;
}

const IntMatrix& FgAbGroup::normal_projection() const
{
    return normal_->projection;
}

const IntMatrix& FgAbGroup::normal_lift() const
{
    return normal_->lift;
}

bool FgAbGroup::is_zero(const IntVector& v) const
{
    return cubenori::is_zero(to_normal(v));
}

bool FgAbGroup::equal_elements(const IntVector& a, const IntVector& b) const
{
    return is_zero(a - b);
}

bool FgAbGroup::isomorphic_to(const FgAbGroup& other) const
{
    return normal_->orders == other.normal_->orders;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const
{
    return relations_ == other.relations_;
}

std::string FgAbGroup::describe() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    const std::size_t r = free_rank();
    if (r > 0) {
        os << 'Z';
        if (r > 1)
            os << '^' << r;
        first = false;
    }
    for (const auto& d : torsion()) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    return FgAbGroup(block_diagonal(a.relations(), b.relations()));
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        throw CompositionMismatch("matrix shape " + std::to_string(matrix_.rows()) + "x" +
                                  std::to_string(matrix_.cols()) + " does not match groups");
    const IntMatrix images = matrix_ * source_.relations();
    for (std::size_t j = 0; j < images.cols(); ++j)
        if (!target_.is_zero(images.column(j)))
            throw IllDefinedMorphism("relation " + std::to_string(j) + " is not sent to zero");
}

GroupHom GroupHom::identity(const FgAbGroup& g)
{
    return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target)
{
    return GroupHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

bool GroupHom::is_zero() const
{
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!target_.is_zero(matrix_.column(j)))
            return false;
    return true;
}

bool GroupHom::equals(const GroupHom& other) const
{
    if (!source_.same_presentation(other.source_) || !target_.same_presentation(other.target_))
        throw CompositionMismatch("comparing homomorphisms between different presentations");
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!target_.is_zero(matrix_.column(j) - other.matrix_.column(j)))
            return false;
    return true;
}

IntMatrix GroupHom::kernel_generators() const
{
    // x is in the kernel iff M x = R_target y for some y.
    const IntMatrix system = hstack(matrix_, -target_.relations());
    const IntMatrix k = integer_kernel(system);
    return k.select_rows(0, source_.generator_count());
}

bool GroupHom::is_injective() const
{
    const IntMatrix k = kernel_generators();
    for (std::size_t j = 0; j < k.cols(); ++j)
        if (!source_.is_zero(k.column(j)))
            return false;
    return true;
}

bool GroupHom::is_surjective() const
{
    return LatticeSolver(hstack(matrix_, target_.relations())).is_full();
}

std::optional<IntVector> GroupHom::preimage(const IntVector& y) const
{
    const LatticeSolver solver(hstack(matrix_, target_.relations()));
    auto coefficients = solver.solve(y);
    if (!coefficients)
        return std::nullopt;
    coefficients->resize(source_.generator_count());
    return coefficients;
}

GroupHom GroupHom::inverse() const
{
    if (!is_injective())
        throw NotInvertible("homomorphism has a nontrivial kernel");
    const LatticeSolver solver(hstack(matrix_, target_.relations()));
    const std::size_t n = target_.generator_count();
    IntMatrix inv(source_.generator_count(), n);
    for (std::size_t j = 0; j < n; ++j) {
        auto c = solver.solve(unit_vector(n, j));
        if (!c)
            throw NotInvertible("homomorphism is not surjective");
        for (std::size_t i = 0; i < source_.generator_count(); ++i)
            inv(i, j) = (*c)[i];
    }
    return GroupHom(target_, source_, std::move(inv));
}

GroupHom GroupHom::scaled(const Integer& k) const
{
    return GroupHom(source_, target_, matrix_.scaled(k));
}

GroupHom GroupHom::operator+(const GroupHom& other) const
{
    if (!source_.same_presentation(other.source_) || !target_.same_presentation(other.target_))
        throw CompositionMismatch("adding homomorphisms between different presentations");
    return GroupHom(source_, target_, matrix_ + other.matrix_);
}

GroupHom GroupHom::operator-(const GroupHom& other) const
{
    return *this + (-other);
}

IntMatrix GroupHom::normal_matrix() const
{
    IntMatrix m = target_.normal_projection() * matrix_ * source_.normal_lift();
    const IntVector orders = target_.normal_orders();
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(orders[i]) != 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), orders[i].get_mpz_t());
    return m;
}

GroupHom compose(const GroupHom& f, const GroupHom& g)
{
    if (!g.target().same_presentation(f.source()))
        throw CompositionMismatch("target of the inner map differs from source of the outer map");
    return GroupHom(g.source(), f.target(), f.matrix() * g.matrix());
}

GroupHom direct_sum(const GroupHom& f, const GroupHom& g)
{
    return GroupHom(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()),
                    block_diagonal(f.matrix(), g.matrix()));
}

GroupHom pairing(const GroupHom& f, const GroupHom& g)
{
    if (!f.source().same_presentation(g.source()))
        throw CompositionMismatch("pairing maps with different sources");
    return GroupHom(f.source(), direct_sum(f.target(), g.target()), vstack(f.matrix(), g.matrix()));
}

GroupHom copairing(const GroupHom& f, const GroupHom& g)
{
    if (!f.target().same_presentation(g.target()))
        throw CompositionMismatch("copairing maps with different targets");
    return GroupHom(direct_sum(f.source(), g.source()), f.target(), hstack(f.matrix(), g.matrix()));
}

bool is_exact_at(const GroupHom& f, const GroupHom& g)
{
    if (!g.target().same_presentation(f.source()))
        throw CompositionMismatch("exactness needs target(g) == source(f)");
    // image(g) is contained in kernel(f)
    if (!compose(f, g).is_zero())
        return false;
    // kernel(f) is contained in image(g) + relations
    const LatticeSolver image(hstack(g.matrix(), f.source().relations()));
    const IntMatrix kernel = f.kernel_generators();
    for (std::size_t j = 0; j < kernel.cols(); ++j)
        if (!image.contains(kernel.column(j)))
            return false;
    return true;
}

} // namespace cubenori
