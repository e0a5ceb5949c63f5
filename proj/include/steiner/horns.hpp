#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "simplicial.hpp"

namespace steiner {

struct HornLevel {
    int k = 0;
    Cell a;     // k-cell
    Cell gamma; // (n-1)-cell
    Cell b;     // k-cell
};

struct HornFactorization {
    int n = 0;
    int i = 0;
    Sign alpha = Sign::plus;
    std::uint32_t missing = 0; // the face d^i
    Cell top;                  // d^alpha_{n-1} i_n as an (n-1)-cell
    std::vector<HornLevel> levels; // levels[k-1] for k = 1 .. n-1

    const HornLevel& level(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
};

inline Sign horn_sign(int i) { return i % 2 == 0 ? Sign::plus : Sign::minus; }

inline void check_horn_index(int n, int i)
{
    if (n < 2 || i < 0 || i > n)
        throw Error(ErrorCode::BadIndex, "horn (" + std::to_string(n) + ", " + std::to_string(i) + ")");
}

inline Cell compose_all(const Adc& k, const std::vector<Cell>& cells, std::size_t from, std::size_t to, int level)
{
    Cell acc = cells[from];
    for (std::size_t j = from + 1; j < to; ++j)
        acc = cell_compose(k, acc, cells[j], level);
    return acc;
}

inline Cell lower_to(const Adc& k, const Chain& chain, int dim) { return make_cell(k, chain, dim); }

inline HornFactorization gamma_family(const Oriental& o, int i)
{
    const int n = o.top.dim;
    check_horn_index(n, i);
    const Adc& k = o.complex;
    HornFactorization h;
    h.n = n;
    h.i = i;
    h.alpha = horn_sign(i);
    h.missing = k.at(face_id(n, {i}));
    h.top = Cell{d(k, o.top.chain, n - 1, h.alpha), n - 1};
    h.levels.resize(static_cast<std::size_t>(n - 1));

    Chain g = h.top.chain;
    for (int level = n - 1; level >= 1; --level) {
        HornLevel row;
        row.k = level;
        int cd = comp_degree(g);
        if (cd < level - 1) {
            row.gamma = Cell{g, n - 1};
            row.a = lower_to(k, d(k, g, level - 1, Sign::plus), level);
            row.b = lower_to(k, d(k, g, level - 1, Sign::minus), level);
        } else if (cd == level - 1) {
            Decomposition step = decompose_once(k, Cell{g, n - 1});
            std::vector<std::size_t> holders;
            for (std::size_t j = 0; j < step.factors.size(); ++j)
                if (step.factors[j].chain.contains(h.missing))
                    holders.push_back(j);
            if (holders.size() != 1)
                throw Error(ErrorCode::Internal, "missing face not in exactly one factor");
            std::size_t j = holders.front();
            row.gamma = step.factors[j];
            if (j == 0)
                row.a = lower_to(k, d(k, row.gamma.chain, level - 1, Sign::plus), level);
            else
                row.a = lower_to(k, compose_all(k, step.factors, 0, j, level - 1).chain, level);
            if (j + 1 == step.factors.size())
                row.b = lower_to(k, d(k, row.gamma.chain, level - 1, Sign::minus), level);
            else
                row.b = lower_to(k, compose_all(k, step.factors, j + 1, step.factors.size(), level - 1).chain, level);
        } else {
            throw Error(ErrorCode::Internal, "composition degree too high at level " + std::to_string(level));
        }
        g = row.gamma.chain;
        h.levels[static_cast<std::size_t>(level - 1)] = std::move(row);
    }
    return h;
}

// a_k *_{k-1} inner *_{k-1} b_k with a_k, b_k padded to the dimension of inner.
inline Cell wrap(const Adc& k, const HornLevel& row, const Cell& inner)
{
    Cell left = cell_compose(k, unit(row.a, inner.dim), inner, row.k - 1);
    return cell_compose(k, left, unit(row.b, inner.dim), row.k - 1);
}

inline Cell unfold(const Adc& k, const HornFactorization& h, const Cell& x)
{
    Cell acc = x;
    for (int level = 1; level <= h.n - 1; ++level)
        acc = wrap(k, h.level(level), acc);
    return acc;
}

inline bool is_unit_cell(const Cell& c) { return degree(c.chain) < c.dim; }

inline std::string render_cell(const Adc& k, const Cell& c) { return render(decompose_full(k, c)); }

struct HornEquation {
    int n = 0;
    int i = 0;
    Sign alpha = Sign::plus;
    std::string missing;
    std::string templ;
    std::string templ_reduced; // unit factors dropped
    std::string other_side;
    std::string equation;
    Chain rhs;
    bool substitution_ok = false;
};

inline HornEquation horn_equation(const Oriental& o, int i)
{
    const Adc& k = o.complex;
    HornFactorization h = gamma_family(o, i);
    HornEquation eq;
    eq.n = h.n;
    eq.i = i;
    eq.alpha = h.alpha;
    eq.missing = k.basis()->id(h.missing);
    eq.rhs = h.top.chain;

    auto group = [](const std::string& t) {
        return t.find(" *_") == std::string::npos ? t : "(" + t + ")";
    };
    std::string full = "x";
    std::string reduced = "x";
    for (int level = 1; level <= h.n - 1; ++level) {
        const auto& row = h.level(level);
        std::string op = " *_" + std::to_string(level - 1) + " ";
        std::string a = group(render_cell(k, row.a));
        std::string b = group(render_cell(k, row.b));
        full = a + op + (level == 1 ? full : "(" + full + ")") + op + b;
        bool keep_a = !is_unit_cell(row.a);
        bool keep_b = !is_unit_cell(row.b);
        if (keep_a || keep_b) {
            std::string inner = reduced == "x" ? reduced : "(" + reduced + ")";
            reduced = (keep_a ? a + op : "") + inner + (keep_b ? op + b : "");
        }
    }
    eq.templ = full;
    eq.templ_reduced = reduced;

    Sign other = opposite(h.alpha);
    eq.other_side = to_string(d(k, o.top.chain, h.n - 1, other));
    eq.equation = h.alpha == Sign::plus ? "y: " + eq.other_side + " -> " + eq.templ_reduced
                                        : "y: " + eq.templ_reduced + " -> " + eq.other_side;
    Cell x{Chain::of(k.basis(), h.missing), h.n - 1};
    eq.substitution_ok = unfold(k, h, x) == h.top;
    return eq;
}

inline bool admissible_support(const Simplex& v, int n, int i)
{
    for (int j : {i - 1, i, i + 1})
        if (j >= 0 && j <= n && std::find(v.vertices.begin(), v.vertices.end(), j) == v.vertices.end())
            return false;
    return true;
}

inline bool contains_vertex(const Simplex& v, int i)
{
    return std::find(v.vertices.begin(), v.vertices.end(), i) != v.vertices.end();
}

enum class Variant { plain, prime, doubleprime };

struct StratifiedComplex {
    SimplicialSet base;
    std::vector<char> marked;

    bool is_marked(const std::string& id) const { return marked.at(base.at(id)) != 0; }
};

inline StratifiedComplex stratify_standard(int n, int k, Variant variant)
{
    if (n < 0 || k < 0 || k > n)
        throw Error(ErrorCode::BadIndex, "stratification (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    StratifiedComplex s{standard_simplex(n), {}};
    s.marked.assign(s.base.size(), 0);
    for (std::uint32_t x = 0; x < s.base.size(); ++x) {
        const Simplex& v = s.base.simplex(x);
        if (v.dim == 0)
            continue;
        bool mark = admissible_support(v, n, k);
        if (v.dim == n - 1) {
            int removed = -1;
            for (int j = 0; j <= n; ++j)
                if (!contains_vertex(v, j))
                    removed = j;
            if (variant == Variant::doubleprime)
                mark = true;
            if (variant == Variant::prime && (removed == k - 1 || removed == k + 1))
                mark = true;
        }
        s.marked[x] = mark ? 1 : 0;
    }
    return s;
}

struct ComplicialCheck {
    int n = 0;
    int i = 0;
    int k = 0;
    std::string kind;
    bool ok = true;
    std::vector<std::string> violations;
};

// Every element of `c` other than the missing face must contain i and the
// admissible vertex set.
inline ComplicialCheck support_check(const SimplicialSet& s, const Chain& c, std::uint32_t missing, int n, int i)
{
    ComplicialCheck check;
    for (const auto& [x, coeff] : c.terms()) {
        if (x == missing)
            continue;
        const Simplex& v = s.simplex(x);
        if (!contains_vertex(v, i) || !admissible_support(v, n, i)) {
            check.ok = false;
            check.violations.push_back(v.id);
        }
    }
    return check;
}

// Position parity of vertex i inside v decides the sign.
inline Sign position_sign(const Simplex& v, int i)
{
    auto it = std::find(v.vertices.begin(), v.vertices.end(), i);
    return (it - v.vertices.begin()) % 2 == 0 ? Sign::plus : Sign::minus;
}

inline Chain inequality_bound(const Oriental& o, const HornFactorization& h)
{
    const Adc& k = o.complex;
    Chain bound = Chain::of(k.basis(), h.missing);
    for (const auto& [x, coeff] : h.top.chain.terms()) {
        if (x == h.missing)
            continue;
        const Simplex& v = o.simplicial.simplex(x);
        bound += d(k, Chain::of(k.basis(), x), h.n - 2, position_sign(v, h.i));
    }
    return bound;
}

inline std::vector<ComplicialCheck> complicial_checks(const Oriental& o, int i)
{
    const int n = o.top.dim;
    HornFactorization h = gamma_family(o, i);
    std::vector<ComplicialCheck> out;
    for (int level = 1; level <= n - 1; ++level) {
        auto c = support_check(o.simplicial, h.level(level).gamma.chain, h.missing, n, i);
        c.n = n;
        c.i = i;
        c.k = level;
        c.kind = "gamma";
        out.push_back(std::move(c));
    }
    auto top = support_check(o.simplicial, h.top.chain, h.missing, n, i);
    top.n = n;
    top.i = i;
    top.k = n - 1;
    top.kind = "top";
    out.push_back(std::move(top));

    ComplicialCheck ineq;
    ineq.n = n;
    ineq.i = i;
    ineq.k = n - 1;
    ineq.kind = "inequality";
    ineq.ok = leq(h.level(n - 1).gamma.chain, inequality_bound(o, h));
    if (!ineq.ok)
        ineq.violations.push_back(to_string(h.level(n - 1).gamma.chain));
    out.push_back(std::move(ineq));
    return out;
}

struct ComplicialReport {
    bool ok = true;
    std::vector<ComplicialCheck> checks;
};

inline ComplicialReport verify_complicial_props(int n_max)
{
    ComplicialReport report;
    for (int n = 2; n <= n_max; ++n) {
        Oriental o = oriental(n);
        for (int i = 0; i <= n; ++i)
            for (auto& c : complicial_checks(o, i)) {
                report.ok = report.ok && c.ok;
                report.checks.push_back(std::move(c));
            }
    }
    return report;
}

} // namespace steiner
