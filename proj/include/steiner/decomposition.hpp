#pragma once

#include <string>
#include <variant>
#include <vector>

#include "omega.hpp"

namespace steiner {

struct ExpressionTree;

struct Generator {
    BasisElement element;
    int dim = 0;
};

struct Composite {
    int k = 0;
    std::vector<ExpressionTree> factors;
};

struct ExpressionTree {
    std::variant<Generator, Composite> node;

    bool is_generator() const { return std::holds_alternative<Generator>(node); }
    const Generator& generator() const { return std::get<Generator>(node); }
    const Composite& composite() const { return std::get<Composite>(node); }
};

struct Decomposition {
    int k = -1;
    std::vector<Cell> factors;
};

inline Chain sum_of(const Adc& k, const std::vector<std::uint32_t>& elements, std::size_t from, std::size_t to)
{
    std::vector<Term> terms;
    for (std::size_t i = from; i < to; ++i)
        terms.emplace_back(elements[i], 1);
    return terms.empty() ? Chain() : Chain(GroupElement(k.basis(), std::move(terms)));
}

// One step: split at the composition degree into factors beta_0 .. beta_m with
// c = beta_0 *_k beta_1 *_k ... *_k beta_m.
inline Decomposition decompose_once(const Adc& k, const Cell& c)
{
    OrderedForm form = ordered_form(k, c.chain);
    if (form.comp_degree < 0)
        throw Error(ErrorCode::NothingToDecompose, to_string(c.chain));
    const int level = form.comp_degree;
    const auto& top = form.top;
    Decomposition out;
    out.k = level;
    for (std::size_t i = 0; i < top.size(); ++i) {
        Chain b = Chain::of(k.basis(), top[i]);
        Chain before = d(k, sum_of(k, top, 0, i), level, Sign::minus);
        Chain after = d(k, sum_of(k, top, i + 1, top.size()), level, Sign::plus);
        Chain whisker = join(truncated_diff(before, d(k, b, level, Sign::plus)),
                             truncated_diff(after, d(k, b, level, Sign::minus)));
        out.factors.push_back(Cell{b + whisker + form.rest, c.dim});
    }
    return out;
}

inline ExpressionTree tree_of_chain(const Adc& k, const Chain& a)
{
    if (comp_degree(a) < 0) {
        std::uint32_t b = a.terms().front().first;
        return ExpressionTree{Generator{{k.basis(), b}, k.basis()->dim(b)}};
    }
    Decomposition step = decompose_once(k, Cell{a, degree(a)});
    Composite node{step.k, {}};
    for (const auto& f : step.factors)
        node.factors.push_back(tree_of_chain(k, f.chain));
    return ExpressionTree{std::move(node)};
}

inline ExpressionTree decompose_full(const Adc& k, const Cell& c)
{
    if (!is_coherent(k, c.chain))
        throw Error(ErrorCode::NotCoherent, to_string(c.chain));
    ExpressionTree t = tree_of_chain(k, c.chain);
    if (t.is_generator())
        std::get<Generator>(t.node).dim = c.dim;
    return t;
}

inline Cell evaluate(const Adc& k, const ExpressionTree& t, int target_dim)
{
    if (t.is_generator()) {
        const auto& g = t.generator();
        if (target_dim < g.dim)
            throw Error(ErrorCode::NotComposable, "generator " + g.element.id() + " above the target dimension");
        k.check_basis(GroupElement::of(g.element));
        return Cell{Chain::of(g.element), target_dim};
    }
    const auto& node = t.composite();
    if (node.factors.empty())
        throw Error(ErrorCode::MalformedInput, "composite without factors");
    Cell acc = evaluate(k, node.factors.front(), target_dim);
    for (std::size_t i = 1; i < node.factors.size(); ++i)
        acc = cell_compose(k, acc, evaluate(k, node.factors[i], target_dim), node.k);
    return acc;
}

inline std::string render(const ExpressionTree& t)
{
    if (t.is_generator()) {
        const auto& g = t.generator();
        return g.dim > g.element.dim() ? "1_{" + g.element.id() + "}" : g.element.id();
    }
    const auto& node = t.composite();
    std::string out;
    for (std::size_t i = 0; i < node.factors.size(); ++i) {
        if (i)
            out += " *_" + std::to_string(node.k) + " ";
        const auto& f = node.factors[i];
        out += f.is_generator() ? render(f) : "(" + render(f) + ")";
    }
    return out;
}

} // namespace steiner
