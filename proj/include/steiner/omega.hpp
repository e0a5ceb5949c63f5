#pragma once

#include <string>

#include "chain_calculus.hpp"

namespace steiner {

// A coherent chain viewed as a cell of a given dimension; a chain of lower degree
// at a higher dimension is an iterated unit.
struct Cell {
    Chain chain;
    int dim = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell make_cell(const Adc& k, Chain chain, int dim)
{
    if (dim < degree(chain))
        throw Error(ErrorCode::GradingViolation,
                    "cell dimension " + std::to_string(dim) + " below degree of " + to_string(chain));
    if (!is_coherent(k, chain))
        throw Error(ErrorCode::NotCoherent, to_string(chain));
    return Cell{std::move(chain), dim};
}

inline Cell atom_cell(const Adc& k, std::uint32_t b) { return Cell{Chain::of(k.basis(), b), k.basis()->dim(b)}; }

inline Cell unit(const Cell& x, int m)
{
    if (m < x.dim)
        throw Error(ErrorCode::BadIndex, "unit below the cell dimension");
    return Cell{x.chain, m};
}

inline std::string to_string(const Cell& c) { return to_string(c.chain) + " @" + std::to_string(c.dim); }

inline void check_table_shape(const Adc& k, const SteinerTable& x)
{
    auto rows = static_cast<std::size_t>(x.dim) + 1;
    if (x.dim < 0 || x.minus.size() != rows || x.plus.size() != rows)
        throw Error(ErrorCode::MalformedTable, "row count");
    if (!(x.minus.back() == x.plus.back()))
        throw Error(ErrorCode::MalformedTable, "top rows differ");
    for (int j = 0; j <= x.dim; ++j) {
        for (const Chain* row : {&x.minus[j], &x.plus[j]}) {
            k.check_basis(*row);
            if (!row->is_zero() && (!row->value().is_homogeneous() || degree(*row) != j))
                throw Error(ErrorCode::MalformedTable, "row " + std::to_string(j) + " not of dimension " + std::to_string(j));
        }
        if (j > 0) {
            GroupElement expected = x.plus[j - 1].value() - x.minus[j - 1].value();
            if (!(k.boundary(x.minus[j]) == expected) || !(k.boundary(x.plus[j]) == expected))
                throw Error(ErrorCode::MalformedTable, "boundary condition fails at row " + std::to_string(j));
        }
    }
}

inline bool is_coherent_table(const Adc& k, const SteinerTable& x)
{
    return k.augment(x.minus[0]) == 1 && k.augment(x.plus[0]) == 1;
}

inline Cell chain_of_table(const Adc& k, const SteinerTable& x)
{
    check_table_shape(k, x);
    if (!is_coherent_table(k, x))
        throw Error(ErrorCode::NotCoherentTable, "augmentation of the bottom rows");
    GroupElement sum = x.plus[x.dim];
    for (int j = 0; j < x.dim; ++j)
        sum += x.plus[j].value() - boundary_sign(k, x.plus[j + 1], Sign::plus).value();
    return Cell{Chain(sum), x.dim};
}

inline SteinerTable table_of_chain(const Adc& k, const Cell& c)
{
    SteinerTable t;
    t.dim = c.dim;
    t.minus.resize(static_cast<std::size_t>(c.dim) + 1);
    t.plus.resize(static_cast<std::size_t>(c.dim) + 1);
    for (int j = 0; j < c.dim; ++j) {
        t.minus[j] = homogeneous_part(d(k, c.chain, j, Sign::minus), j);
        t.plus[j] = homogeneous_part(d(k, c.chain, j, Sign::plus), j);
    }
    t.minus[c.dim] = t.plus[c.dim] = homogeneous_part(c.chain, c.dim);
    return t;
}

inline SteinerTable table_unit(const SteinerTable& x, int m)
{
    if (m < x.dim)
        throw Error(ErrorCode::BadIndex, "unit below the table dimension");
    SteinerTable t = x;
    t.dim = m;
    t.minus.resize(static_cast<std::size_t>(m) + 1);
    t.plus.resize(static_cast<std::size_t>(m) + 1);
    return t;
}

// x *_k y, defined when the k-source of x is the k-target of y.
inline SteinerTable table_compose(const SteinerTable& x, const SteinerTable& y, int k)
{
    if (x.dim != y.dim || k < 0 || k >= x.dim)
        throw Error(ErrorCode::NotComposable, "dimension mismatch or bad level " + std::to_string(k));
    for (int j = 0; j < k; ++j)
        if (!(x.minus[j] == y.minus[j]) || !(x.plus[j] == y.plus[j]))
            throw Error(ErrorCode::NotComposable, "rows below level " + std::to_string(k) + " differ");
    if (!(x.minus[k] == y.plus[k]))
        throw Error(ErrorCode::NotComposable, "source of the left table is not the target of the right one");
    SteinerTable t = x;
    t.minus[k] = y.minus[k];
    for (int j = k + 1; j <= x.dim; ++j) {
        t.minus[j] = x.minus[j] + y.minus[j];
        t.plus[j] = x.plus[j] + y.plus[j];
    }
    return t;
}

inline Cell cell_compose(const Adc& k, const Cell& x, const Cell& y, int level)
{
    if (x.dim != y.dim || level < 0 || level >= x.dim)
        throw Error(ErrorCode::NotComposable, "dimension mismatch or bad level " + std::to_string(level));
    Chain z = d(k, x.chain, level, Sign::minus);
    if (!(z == d(k, y.chain, level, Sign::plus)))
        throw Error(ErrorCode::NotComposable,
                    to_string(x.chain) + " after " + to_string(y.chain) + " at level " + std::to_string(level));
    return Cell{positive_part(x.chain.value() - z.value() + y.chain.value()), x.dim};
}

} // namespace steiner
