#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "table.hpp"

namespace steiner {

struct RawAdc {
    std::vector<std::pair<std::string, int>> basis;
    std::map<std::string, std::map<std::string, Integer>> diff;
    std::map<std::string, Integer> aug;
};

// Generator graph of the relation at one level: edge a -> b when
// <a>^-_level meets <b>^+_level. Indexed by basis position; elements below the
// level have no edges.
struct OrderRelation {
    int level = 0;
    std::vector<std::uint32_t> nodes;
    std::vector<std::vector<std::uint32_t>> edges;

    bool has_edge(std::uint32_t a, std::uint32_t b) const
    {
        const auto& out = edges.at(a);
        return std::binary_search(out.begin(), out.end(), b);
    }
};

class Adc {
public:
    static Adc validate(const RawAdc& raw) { return validate_on(Basis::make(raw.basis), raw); }

    // Validates differential and augmentation over an already interned basis;
    // raw.basis is ignored.
    static Adc validate_on(BasisPtr interned, const RawAdc& raw)
    {
        Adc k;
        k.basis_ = std::move(interned);
        const Basis& basis = *k.basis_;
        k.diff_.assign(basis.size(), GroupElement());
        k.aug_.assign(basis.size(), Integer(0));

        for (const auto& [id, image] : raw.diff) {
            std::uint32_t b = basis.at(id);
            std::vector<Term> terms;
            for (const auto& [target, c] : image) {
                std::uint32_t t = basis.at(target);
                if (basis.dim(t) != basis.dim(b) - 1)
                    throw Error(ErrorCode::GradingViolation, "boundary of " + id + " mentions " + target);
                terms.emplace_back(t, c);
            }
            k.diff_[b] = terms.empty() ? GroupElement() : GroupElement(k.basis_, std::move(terms));
        }
        for (const auto& [id, value] : raw.aug) {
            std::uint32_t b = basis.at(id);
            if (basis.dim(b) != 0)
                throw Error(ErrorCode::GradingViolation, "augmentation on " + id + " of positive dimension");
            k.aug_[b] = value;
        }
        for (std::uint32_t b = 0; b < basis.size(); ++b) {
            if (basis.dim(b) >= 2 && !k.boundary(k.diff_[b]).is_zero())
                throw Error(ErrorCode::BoundarySquareNonzero, basis.id(b));
            if (basis.dim(b) == 1 && k.augment(k.diff_[b]) != 0)
                throw Error(ErrorCode::AugmentationNonzeroOnBoundary, basis.id(b));
        }
        k.cache_ = std::make_shared<Cache>(basis.max_dim() + 1);
        return k;
    }

    const BasisPtr& basis() const { return basis_; }
    int max_dim() const { return basis_->max_dim(); }
    std::uint32_t at(const std::string& id) const { return basis_->at(id); }
    BasisElement element(const std::string& id) const { return {basis_, basis_->at(id)}; }
    Chain singleton(const std::string& id) const { return Chain::of(basis_, basis_->at(id)); }

    const GroupElement& boundary_of(std::uint32_t b) const { return diff_.at(b); }
    const Integer& augmentation_of(std::uint32_t b) const { return aug_.at(b); }

    // Linear extension of the differential; lowers every dimension by one.
    GroupElement boundary(const GroupElement& x) const
    {
        check_basis(x);
        GroupElement out;
        for (const auto& [b, c] : x.terms())
            if (!diff_[b].is_zero())
                out = combine(out, diff_[b], 1, c);
        return out;
    }

    // Augmentation on the dimension-zero part.
    Integer augment(const GroupElement& x) const
    {
        check_basis(x);
        Integer total = 0;
        for (const auto& [b, c] : x.terms())
            if (basis_->dim(b) == 0)
                total += c * aug_[b];
        return total;
    }

    const std::vector<SteinerTable>& atoms() const
    {
        std::call_once(cache_->atoms_once, [this] { build_atoms(); });
        return cache_->atoms;
    }

    const OrderRelation& relation(int level) const
    {
        if (level < 0 || level > max_dim())
            throw Error(ErrorCode::BadIndex, "order relation level " + std::to_string(level));
        auto i = static_cast<std::size_t>(level);
        std::call_once(cache_->level_once[i], [this, level, i] { cache_->levels[i] = build_relation(level); });
        return cache_->levels[i];
    }

    void check_basis(const GroupElement& x) const
    {
        if (!x.is_zero() && x.basis() != basis_)
            throw Error(ErrorCode::BasisMismatch, "element does not belong to this complex");
    }

private:
    struct Cache {
        explicit Cache(int levels)
            : level_once(static_cast<std::size_t>(std::max(levels, 0))),
              levels(static_cast<std::size_t>(std::max(levels, 0)))
        {
        }
        std::once_flag atoms_once;
        std::vector<SteinerTable> atoms;
        std::vector<std::once_flag> level_once;
        std::vector<OrderRelation> levels;
    };

    void build_atoms() const
    {
        auto& atoms = cache_->atoms;
        atoms.resize(basis_->size());
        for (std::uint32_t b = 0; b < basis_->size(); ++b) {
            int n = basis_->dim(b);
            SteinerTable t;
            t.dim = n;
            t.minus.resize(static_cast<std::size_t>(n) + 1);
            t.plus.resize(static_cast<std::size_t>(n) + 1);
            t.minus[n] = t.plus[n] = Chain::of(basis_, b);
            for (int k = n - 1; k >= 0; --k) {
                t.minus[k] = split_parts(boundary(t.minus[k + 1])).neg;
                t.plus[k] = split_parts(boundary(t.plus[k + 1])).pos;
            }
            atoms[b] = std::move(t);
        }
    }

    OrderRelation build_relation(int level) const
    {
        const auto& table = atoms();
        OrderRelation rel;
        rel.level = level;
        rel.edges.resize(basis_->size());
        // For each element c of dimension `level`, who has c in its source / target row.
        std::vector<std::vector<std::uint32_t>> in_minus(basis_->size());
        std::vector<std::vector<std::uint32_t>> in_plus(basis_->size());
        for (std::uint32_t b = basis_->dim_range(level).first; b < basis_->size(); ++b) {
            rel.nodes.push_back(b);
            for (const auto& t : table[b].minus[level].terms())
                in_minus[t.first].push_back(b);
            for (const auto& t : table[b].plus[level].terms())
                in_plus[t.first].push_back(b);
        }
        auto [lo, hi] = basis_->dim_range(level);
        for (std::uint32_t c = lo; c < hi; ++c)
            for (std::uint32_t a : in_minus[c])
                for (std::uint32_t b : in_plus[c])
                    rel.edges[a].push_back(b);
        for (auto& out : rel.edges) {
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return rel;
    }

    BasisPtr basis_;
    std::vector<GroupElement> diff_;
    std::vector<Integer> aug_;
    std::shared_ptr<Cache> cache_;
};

inline Adc validate_adc(const RawAdc& raw) { return Adc::validate(raw); }

struct BoundaryPair {
    Chain plus;
    Chain minus;
};

inline BoundaryPair boundary_pm(const Adc& k, const Chain& x)
{
    if (!x.value().is_homogeneous())
        throw Error(ErrorCode::NotHomogeneous, to_string(x));
    Parts parts = split_parts(k.boundary(x));
    return {parts.pos, parts.neg};
}

inline const SteinerTable& atom_table(const Adc& k, std::uint32_t b) { return k.atoms().at(b); }
inline const SteinerTable& atom_table(const Adc& k, const BasisElement& b) { return atom_table(k, b.index); }

struct UnitaryReport {
    bool ok = true;
    std::vector<std::string> violators;
};

inline UnitaryReport is_unitary(const Adc& k)
{
    UnitaryReport report;
    const auto& atoms = k.atoms();
    for (std::uint32_t b = 0; b < atoms.size(); ++b) {
        if (k.augment(atoms[b].minus[0]) != 1 || k.augment(atoms[b].plus[0]) != 1) {
            report.ok = false;
            report.violators.push_back(k.basis()->id(b));
        }
    }
    return report;
}

inline const OrderRelation& order_relation(const Adc& k, int n) { return k.relation(n); }

// Kahn elimination; if something survives, every survivor has a surviving
// predecessor, so walking predecessors must revisit a node.
inline std::vector<std::uint32_t> find_cycle(const OrderRelation& rel)
{
    std::size_t size = rel.edges.size();
    std::vector<std::vector<std::uint32_t>> preds(size);
    std::vector<std::size_t> indeg(size, 0);
    for (std::uint32_t a : rel.nodes)
        for (std::uint32_t b : rel.edges[a])
            if (a != b) {
                preds[b].push_back(a);
                ++indeg[b];
            }
    std::vector<std::uint32_t> queue;
    for (std::uint32_t a : rel.nodes)
        if (indeg[a] == 0)
            queue.push_back(a);
    std::vector<char> removed(size, 0);
    while (!queue.empty()) {
        std::uint32_t a = queue.back();
        queue.pop_back();
        removed[a] = 1;
        for (std::uint32_t b : rel.edges[a])
            if (a != b && --indeg[b] == 0)
                queue.push_back(b);
    }
    auto start = std::find_if(rel.nodes.begin(), rel.nodes.end(), [&](std::uint32_t a) { return !removed[a]; });
    if (start == rel.nodes.end())
        return {};
    std::vector<std::size_t> seen_at(size, SIZE_MAX);
    std::vector<std::uint32_t> walk;
    std::uint32_t cur = *start;
    while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        auto next = std::find_if(preds[cur].begin(), preds[cur].end(), [&](std::uint32_t p) { return !removed[p]; });
        cur = *next;
    }
    std::vector<std::uint32_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

struct LoopFreeReport {
    bool ok = true;
    int level = -1;
    std::vector<std::string> cycle;
};

inline LoopFreeReport is_loop_free(const Adc& k)
{
    LoopFreeReport report;
    for (int n = 0; n <= k.max_dim(); ++n) {
        auto cycle = find_cycle(k.relation(n));
        if (!cycle.empty()) {
            report.ok = false;
            report.level = n;
            for (auto b : cycle)
                report.cycle.push_back(k.basis()->id(b));
            return report;
        }
    }
    return report;
}

} // namespace steiner
