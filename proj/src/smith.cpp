#include "cubenori/smith.hpp"

#include <stdexcept>

namespace cubenori {

IntVector SmithForm::invariant_factors() const
{
    const std::size_t k = std::min(S.rows(), S.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i)
        d[i] = S(i, i);
    return d;
}

namespace {

// Working state of the reduction. Row operations are mirrored on U (left)
// and, inverted, on U_inverse (right); column operations likewise on V and
// V_inverse.
struct Reducer
{
    IntMatrix a;
    IntMatrix u;
    IntMatrix u_inv;
    IntMatrix v;
    IntMatrix v_inv;

    explicit Reducer(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          u_inv(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols()))
    {
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_columns(i, j);
    }

    void swap_columns(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        a.swap_columns(i, j);
        v.swap_columns(i, j);
        v_inv.swap_rows(i, j);
    }

    // row[target] += k * row[source]
    void add_row(std::size_t target, std::size_t source, const Integer& k)
    {
        a.add_row_multiple(target, source, k);
        u.add_row_multiple(target, source, k);
        u_inv.add_column_multiple(source, target, -k);
    }

    // col[target] += k * col[source]
    void add_column(std::size_t target, std::size_t source, const Integer& k)
    {
        a.add_column_multiple(target, source, k);
        v.add_column_multiple(target, source, k);
        v_inv.add_row_multiple(source, target, -k);
    }

    void negate_row(std::size_t i)
    {
        a.negate_row(i);
        u.negate_row(i);
        u_inv.negate_column(i);
    }

    // Minimal |entry| in the active block, lowest (row, col) on ties.
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const
    {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                const Integer& x = a(i, j);
                if (sgn(x) == 0)
                    continue;
                if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = x;
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        return found;
    }

    void run(std::size_t& rank)
    {
        const std::size_t limit = std::min(a.rows(), a.cols());
        std::size_t t = 0;
        Integer q;
        for (; t < limit; ++t) {
            std::size_t pr = 0;
            std::size_t pc = 0;
            if (!find_pivot(t, pr, pc))
                break;
            for (;;) {
                swap_rows(t, pr);
                swap_columns(t, pc);
                bool clean = true;
                for (std::size_t i = t + 1; i < a.rows(); ++i) {
                    if (sgn(a(i, t)) == 0)
                        continue;
                    mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                    add_row(i, t, -q);
                    if (sgn(a(i, t)) != 0)
                        clean = false;
                }
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (sgn(a(t, j)) == 0)
                        continue;
                    mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                    add_column(j, t, -q);
                    if (sgn(a(t, j)) != 0)
                        clean = false;
                }
                if (!clean) {
                    find_pivot(t, pr, pc);
                    continue;
                }
                // Divisibility: fold an offending row into the pivot row.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
                    for (std::size_t j = t + 1; j < a.cols(); ++j)
                        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                            add_row(t, i, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all)
                    break;
                find_pivot(t, pr, pc);
            }
            if (sgn(a(t, t)) < 0)
                negate_row(t);
        }
        rank = t;
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    Reducer r(m);
    SmithForm f;
    r.run(f.rank);
    f.S = std::move(r.a);
    f.U = std::move(r.u);
    f.V = std::move(r.v);
    f.U_inverse = std::move(r.u_inv);
    f.V_inverse = std::move(r.v_inv);
    return f;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    const SmithForm f = smith_normal_form(m);
    return f.V.select_columns(f.rank, m.cols());
}

LatticeSolver::LatticeSolver(const IntMatrix& generators)
    : ambient_(generators.rows()),
      generator_count_(generators.cols()),
      form_(smith_normal_form(generators))
{
}

std::optional<IntVector> LatticeSolver::solve(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("LatticeSolver::solve: vector length mismatch");
    const IntVector y = form_.U * v;
    IntVector z(generator_count_);
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (i < form_.rank) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), form_.S(i, i).get_mpz_t()))
                return std::nullopt;
            mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), form_.S(i, i).get_mpz_t());
        } else if (sgn(y[i]) != 0) {
            return std::nullopt;
        }
    }
    return form_.V * z;
}

bool LatticeSolver::contains(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("LatticeSolver::contains: vector length mismatch");
    const IntVector y = form_.U * v;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (i < form_.rank) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), form_.S(i, i).get_mpz_t()))
                return false;
        } else if (sgn(y[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool LatticeSolver::is_full() const
{
    if (form_.rank != ambient_)
        return false;
    for (std::size_t i = 0; i < form_.rank; ++i)
        if (form_.S(i, i) != 1)
            return false;
    return true;
}

std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b)
{
    return LatticeSolver(a).solve(b);
}

} // namespace cubenori
