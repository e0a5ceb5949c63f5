#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "horns.hpp"
#include "morphisms.hpp"

namespace steiner {

inline constexpr std::uint64_t default_seed = 20240611;

struct ComposablePair {
    Cell x;
    Cell y;
    int k = 0;
};

// Random cells grown from the coherent atoms of a complex by composing pool
// members whose boundaries match.
class CellSampler {
public:
    CellSampler(Adc complex, std::uint64_t seed, std::size_t pool_cap = 3000)
        : k_(std::move(complex)), rng_(seed), cap_(pool_cap)
    {
        for (std::uint32_t b = 0; b < k_.basis()->size(); ++b) {
            Chain atom = Chain::of(k_.basis(), b);
            if (!is_coherent(k_, atom))
                continue;
            add(atom);
            for (int level = 0; level < k_.basis()->dim(b); ++level)
                for (Sign s : {Sign::minus, Sign::plus})
                    add(d(k_, atom, level, s));
        }
    }

    const Adc& complex() const { return k_; }
    std::size_t pool_size() const { return pool_.size(); }
    const std::vector<Chain>& pool() const { return pool_; }
    bool empty() const { return pool_.empty(); }

    ComposablePair next_pair()
    {
        if (pool_.empty())
            throw Error(ErrorCode::MalformedInput, "no coherent atoms to sample from");
        if (pick(2) == 0)
            if (auto w = whiskered())
                return *w;
        for (int attempt = 0; attempt < 400; ++attempt) {
            const Chain& x = pool_[pick(pool_.size())];
            int deg = degree(x);
            if (deg < 1)
                continue;
            int level = static_cast<int>(pick(static_cast<std::size_t>(deg)));
            Chain z = d(k_, x, level, Sign::minus);
            auto it = by_target_.find({level, to_string(z)});
            if (it == by_target_.end())
                continue;
            std::vector<std::size_t> candidates;
            for (auto j : it->second)
                if (!(pool_[j] == z))
                    candidates.push_back(j);
            if (candidates.empty())
                continue;
            const Chain& y = pool_[candidates[pick(candidates.size())]];
            int dim = std::max({deg, degree(y), level + 1});
            return {Cell{x, dim}, Cell{y, dim}, level};
        }
        const Chain& x = pool_[pick(pool_.size())];
        int dim = std::max(degree(x), 1);
        return {Cell{x, dim}, Cell{d(k_, x, 0, Sign::minus), dim}, 0};
    }

    Cell next()
    {
        ComposablePair p = next_pair();
        Cell c = cell_compose(k_, p.x, p.y, p.k);
        if (pool_.size() < cap_)
            add(c.chain);
        if (pick(4) == 0)
            c.dim += 1;
        return c;
    }

    std::size_t pick(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

private:
    // An atom b padded by the part of a pool member's k-boundary it does not cover,
    // on whichever side makes it composable with that member.
    std::optional<ComposablePair> whiskered()
    {
        for (int attempt = 0; attempt < 50; ++attempt) {
            const Chain x = pool_[pick(pool_.size())];
            int deg = degree(x);
            if (deg < 1)
                continue;
            int level = static_cast<int>(pick(static_cast<std::size_t>(deg)));
            Sign side = pick(2) == 0 ? Sign::minus : Sign::plus;
            Chain z = d(k_, x, level, side);
            Sign facing = opposite(side);
            std::vector<Chain> options;
            for (std::uint32_t b = 0; b < k_.basis()->size(); ++b) {
                if (k_.basis()->dim(b) <= level)
                    continue;
                Chain atom = Chain::of(k_.basis(), b);
                Chain edge = d(k_, atom, level, facing);
                if (!leq(edge, z))
                    continue;
                Chain y = atom + truncated_diff(z, edge);
                if (is_coherent(k_, y) && d(k_, y, level, facing) == z)
                    options.push_back(std::move(y));
            }
            if (options.empty())
                continue;
            Chain y = options[pick(options.size())];
            int dim = std::max({deg, degree(y), level + 1});
            if (side == Sign::minus)
                return ComposablePair{Cell{x, dim}, Cell{y, dim}, level};
            return ComposablePair{Cell{y, dim}, Cell{x, dim}, level};
        }
        return std::nullopt;
    }

    void add(const Chain& c)
    {
        if (!seen_.insert(to_string(c)).second)
            return;
        std::size_t idx = pool_.size();
        pool_.push_back(c);
        for (int level = 0; level < k_.max_dim(); ++level)
            by_target_[{level, to_string(d(k_, c, level, Sign::plus))}].push_back(idx);
    }

    Adc k_;
    std::mt19937_64 rng_;
    std::size_t cap_;
    std::vector<Chain> pool_;
    std::set<std::string> seen_;
    std::map<std::pair<int, std::string>, std::vector<std::size_t>> by_target_;
};

struct CheckRecord {
    std::string suite;
    int n = 0;
    int i = -1;
    int k = -1;
    std::string kind;
    bool ok = true;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what)
    {
        ++cases;
        if (!condition) {
            ok = false;
            if (failures.size() < 10)
                failures.push_back(what);
        }
    }
};

inline CheckRecord record(std::string suite, std::string kind, int n, int i = -1, int k = -1)
{
    CheckRecord rec;
    rec.suite = std::move(suite);
    rec.kind = std::move(kind);
    rec.n = n;
    rec.i = i;
    rec.k = k;
    return rec;
}

struct VerifyReport {
    std::vector<CheckRecord> checks;

    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.ok; });
    }
};

inline CheckRecord faces_check(int n)
{
    CheckRecord rec = record("faces", "face_formula", n);
    Oriental o = oriental(n);
    for (std::uint32_t x = 0; x < o.simplicial.size(); ++x) {
        Chain chain = Chain::of(o.complex.basis(), x);
        int dim = o.simplicial.simplex(x).dim;
        for (int level = 0; level <= dim; ++level)
            for (Sign s : {Sign::minus, Sign::plus})
                rec.expect(face_formula(o.simplicial, x, level, s) == d(o.complex, chain, level, s),
                           o.simplicial.simplex(x).id + " level " + std::to_string(level) + sign_char(s));
    }
    rec.expect(check_regular(o.simplicial).ok, "regularity");
    return rec;
}

// Properties every coherent cell must satisfy.
inline void cell_properties(CheckRecord& rec, const Adc& k, const Cell& c)
{
    const Chain& a = c.chain;
    const std::string tag = to_string(a);
    rec.expect(leq_one(a), "leq_one " + tag);
    for (int n = 1; n <= c.dim; ++n)
        for (Sign s : {Sign::minus, Sign::plus})
            for (Sign t : {Sign::minus, Sign::plus})
                rec.expect(d(k, d(k, a, n, s), n - 1, t) == d(k, a, n - 1, t), "globularity " + tag);
    for (int n = 1; n <= degree(a); ++n)
        rec.expect(rest(a, n - 1) == meet(d(k, a, n - 1, Sign::minus), d(k, a, n - 1, Sign::plus)), "rest-meet " + tag);

    int cd = comp_degree(a);
    if (cd >= 0) {
        OrderedForm form = ordered_form(k, a);
        for (Sign s : {Sign::minus, Sign::plus})
            for (std::size_t i = 0; i < form.top.size(); ++i) {
                Chain bi = d(k, Chain::of(k.basis(), form.top[i]), cd, s);
                rec.expect(disjoint(bi, form.rest), "fork-free rest " + tag);
                for (std::size_t j = i + 1; j < form.top.size(); ++j)
                    rec.expect(disjoint(bi, d(k, Chain::of(k.basis(), form.top[j]), cd, s)), "fork-free " + tag);
            }
        Decomposition step = decompose_once(k, c);
        for (const auto& f : step.factors)
            rec.expect(comp_degree(f.chain) < cd && is_coherent(k, f.chain), "strict descent " + tag);
    }

    SteinerTable t = table_of_chain(k, c);
    rec.expect(chain_of_table(k, t) == c, "phi psi " + tag);
    rec.expect(table_of_chain(k, chain_of_table(k, t)) == t, "psi phi " + tag);
    rec.expect(evaluate(k, decompose_full(k, c), c.dim) == c, "recomposition " + tag);
}

inline CheckRecord coherence_check(const Adc& k, int n, std::uint64_t seed, std::size_t samples)
{
    CheckRecord rec = record("coherence", "random_cells", n);
    rec.expect(is_unitary(k).ok, "unitary");
    rec.expect(is_loop_free(k).ok, "loop-free");
    if (!rec.ok)
        return rec;
    CellSampler sampler(k, seed);
    for (std::size_t s = 0; s < samples && !sampler.empty(); ++s) {
        try {
            cell_properties(rec, k, sampler.next());
        } catch (const Error& e) {
            rec.expect(false, e.what());
        }
    }
    return rec;
}

inline CheckRecord horns_check(const Oriental& o, int i)
{
    CheckRecord rec = record("horns", "recomposition", o.top.dim, i);
    const Adc& k = o.complex;
    try {
        HornFactorization h = gamma_family(o, i);
        HornEquation eq = horn_equation(o, i);
        rec.expect(eq.substitution_ok, "substitution");
        rec.expect(h.level(1).gamma.chain == Chain::of(k.basis(), h.missing), "gamma_1 is the missing face");
        Cell upper = h.top;
        for (int level = h.n - 1; level >= 1; --level) {
            const auto& row = h.level(level);
            rec.expect(wrap(k, row, row.gamma) == upper, "level " + std::to_string(level));
            rec.expect(row.gamma.chain.contains(h.missing), "gamma contains the missing face");
            rec.expect(comp_degree(row.gamma.chain) <= level - 2, "composition degree of gamma");
            for (const Cell* side : {&row.a, &row.b})
                rec.expect(!side->chain.contains(h.missing) && !side->chain.contains(k.at(face_id(h.n, {}))),
                           "sides avoid the horn's missing simplices");
            upper = row.gamma;
        }
    } catch (const Error& e) {
        rec.expect(false, e.what());
    }
    return rec;
}

inline VerifyReport run_suite(const std::string& suite, int max_n, std::uint64_t seed, std::size_t samples = 300)
{
    VerifyReport report;
    bool all = suite == "all";
    if (all || suite == "faces")
        for (int n = 0; n <= max_n; ++n)
            report.checks.push_back(faces_check(n));
    if (all || suite == "coherence") {
        for (int n = 1; n <= max_n; ++n)
            report.checks.push_back(coherence_check(oriental(n).complex, n, seed + static_cast<std::uint64_t>(n), samples));
        for (int n = 0; n <= max_n; ++n) {
            CheckRecord rec = record("coherence", "globe", n);
            Adc g = globe_adc(n);
            rec.expect(is_unitary(g).ok && is_loop_free(g).ok, "globe basis");
            report.checks.push_back(rec);
        }
    }
    if (all || suite == "horns")
        for (int n = 2; n <= max_n; ++n) {
            Oriental o = oriental(n);
            for (int i = 0; i <= n; ++i)
                report.checks.push_back(horns_check(o, i));
        }
    if (all || suite == "complicial") {
        auto props = verify_complicial_props(max_n);
        for (const auto& c : props.checks) {
            CheckRecord rec = record("complicial", c.kind, c.n, c.i, c.k);
            rec.expect(c.ok, c.kind);
            for (const auto& v : c.violations)
                rec.failures.push_back(v);
            report.checks.push_back(rec);
        }
    }
    return report;
}

} // namespace steiner
