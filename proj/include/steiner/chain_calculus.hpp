#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "adc.hpp"

namespace steiner {

inline int degree(const GroupElement& a) { return a.top_dim(); }

// One less than the dimension of the second-highest support element.
inline int comp_degree(const GroupElement& a)
{
    if (a.size() < 2)
        return -1;
    return a.dim_of(a.terms()[a.size() - 2]) - 1;
}

inline Chain rest(const Chain& a, int k)
{
    return Chain(a.value().filter_dim([k](int d) { return d <= k; }));
}

inline Chain homogeneous_part(const Chain& a, int k)
{
    return Chain(a.value().filter_dim([k](int d) { return d == k; }));
}

inline Chain boundary_sign(const Adc& k, const Chain& x, Sign s)
{
    Parts parts = split_parts(k.boundary(x));
    return s == Sign::plus ? parts.pos : parts.neg;
}

// Source (minus) or target (plus) at level n, unrolled from the top degree down.
inline Chain d(const Adc& k, const Chain& a, int n, Sign s)
{
    Chain cur = a;
    for (int m = degree(a); m > n; --m)
        cur = boundary_sign(k, homogeneous_part(cur, m), s) + rest(cur, m - 1);
    return cur;
}

inline Integer augmentation(const Adc& k, const Chain& a)
{
    return k.augment(d(k, a, 0, Sign::plus));
}

inline bool is_coherent(const Adc& k, const Chain& a) { return augmentation(k, a) == 1; }

inline bool parallel(const Adc& k, const Chain& a, const Chain& b, int n)
{
    return d(k, a, n, Sign::minus) == d(k, b, n, Sign::minus) && d(k, a, n, Sign::plus) == d(k, b, n, Sign::plus);
}

struct OrderedForm {
    std::vector<std::uint32_t> top;
    Chain rest;
    int comp_degree = -1;
};

// Elements reachable from `from` in the generator graph, restricted to `targets`.
inline std::vector<char> reachable_among(const OrderRelation& rel, std::uint32_t from)
{
    std::vector<char> seen(rel.edges.size(), 0);
    std::vector<std::uint32_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        auto a = stack.back();
        stack.pop_back();
        for (auto b : rel.edges[a])
            if (!seen[b]) {
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    return seen;
}

inline OrderedForm ordered_form(const Adc& k, const Chain& a)
{
    if (!is_coherent(k, a))
        throw Error(ErrorCode::NotCoherent, to_string(a));
    OrderedForm form;
    form.comp_degree = comp_degree(a);
    form.rest = rest(a, form.comp_degree);
    const int c = form.comp_degree;
    std::vector<std::uint32_t> top;
    for (const auto& [b, coeff] : a.terms())
        if (k.basis()->dim(b) > c) {
            if (coeff != 1)
                throw Error(ErrorCode::NotCoherent, "repeated top element " + k.basis()->id(b));
            top.push_back(b);
        }
    if (top.size() == 1 || c < 0) {
        form.top = top;
        return form;
    }

    // b -> b' whenever b precedes b' in the closure of the level-c relation.
    const OrderRelation& rel = k.relation(c);
    std::size_t m = top.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indeg(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        auto seen = reachable_among(rel, top[i]);
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && seen[top[j]]) {
                succ[i].push_back(j);
                ++indeg[j];
            }
    }
    auto later = [&](std::size_t x, std::size_t y) { return k.basis()->id(top[x]) > k.basis()->id(top[y]); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
    for (std::size_t i = 0; i < m; ++i)
        if (indeg[i] == 0)
            ready.push(i);
    while (!ready.empty()) {
        auto i = ready.top();
        ready.pop();
        form.top.push_back(top[i]);
        for (auto j : succ[i])
            if (--indeg[j] == 0)
                ready.push(j);
    }
    if (form.top.size() != m)
        throw Error(ErrorCode::CycleDetected, "ordering the top of " + to_string(a));
    return form;
}

} // namespace steiner
