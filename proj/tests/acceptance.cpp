// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <steiner/steiner.hpp>

using namespace steiner;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

Chain parse(const Adc& k, const std::vector<const char*>& ids)
{
    std::vector<Term> terms;
    for (const char* id : ids)
        terms.emplace_back(k.at(id), 1);
    return Chain(GroupElement(k.basis(), terms));
}

Outcome golden_decomposition()
{
    Oriental o = oriental(4);
    const Adc& k = o.complex;
    struct Case {
        Sign sign;
        std::vector<const char*> expected;
        std::string render;
    };
    const std::vector<Case> cases = {
        {Sign::minus, {"0234", "0124"}, "((234 *_0 12 *_0 01) *_1 0124) *_2 ((34 *_0 23 *_0 012) *_1 0234)"},
        {Sign::plus,
         {"1234", "0134", "0123"},
         "((1234 *_0 01) *_1 014) *_2 ((34 *_0 123 *_0 01) *_1 0134) *_2 ((34 *_0 0123) *_1 034)"},
    };
    Outcome out;
    for (const auto& c : cases) {
        Chain face = d(k, o.top.chain, 3, c.sign);
        Cell cell{face, 3};
        ExpressionTree tree = decompose_full(k, cell);
        bool chain_ok = face == parse(k, c.expected);
        bool eval_ok = evaluate(k, tree, 3) == cell;
        bool render_ok = render(tree) == c.render;
        if (!chain_ok || !eval_ok || !render_ok) {
            out.ok = false;
            out.detail += std::string(c.sign == Sign::minus ? "source" : "target") + " got " + render(tree) + "; ";
        }
    }
    if (out.ok)
        out.detail = "both faces evaluate back exactly and render verbatim";
    return out;
}

Outcome face_formula_oracle()
{
    std::size_t cases = 0;
    for (int n = 0; n <= 7; ++n) {
        CheckRecord rec = faces_check(n);
        cases += rec.cases;
        if (!rec.ok)
            return {false, "n = " + std::to_string(n) + ": " + rec.failures.front()};
    }
    return {true, std::to_string(cases) + " comparisons over n <= 7"};
}

Outcome round_trips()
{
    std::size_t cells = 0;
    Outcome out;
    for (int n = 1; n <= 5; ++n) {
        Adc k = oriental(n).complex;
        CellSampler sampler(k, default_seed + static_cast<std::uint64_t>(n));
        for (int s = 0; s < 250; ++s) {
            Cell c = sampler.next();
            ++cells;
            SteinerTable t = table_of_chain(k, c);
            bool ok = chain_of_table(k, t) == c && table_of_chain(k, chain_of_table(k, t)) == t &&
                      evaluate(k, decompose_full(k, c), c.dim) == c;
            if (!ok && out.ok) {
                out.ok = false;
                out.detail = "n = " + std::to_string(n) + " cell " + to_string(c);
            }
        }
    }
    if (cells < 1000)
        return {false, "only " + std::to_string(cells) + " cells"};
    if (out.ok)
        out.detail = std::to_string(cells) + " cells, all three identities exact";
    return out;
}

Outcome basis_certification()
{
    for (int n = 0; n <= 7; ++n) {
        Adc k = oriental(n).complex;
        if (!is_unitary(k).ok || !is_loop_free(k).ok)
            return {false, "oriental " + std::to_string(n)};
    }
    for (int n = 0; n <= 6; ++n) {
        Adc g = globe_adc(n);
        if (!is_unitary(g).ok || !is_loop_free(g).ok)
            return {false, "globe " + std::to_string(n)};
    }
    return {true, "orientals n <= 7 and globes n <= 6 unitary and loop-free"};
}

Outcome coherence_properties()
{
    std::size_t cases = 0;
    std::size_t cells = 0;
    for (int n = 2; n <= 5; ++n) {
        Adc k = oriental(n).complex;
        CellSampler sampler(k, default_seed * 3 + static_cast<std::uint64_t>(n));
        CheckRecord rec = record("coherence", "random_cells", n);
        for (int s = 0; s < 300; ++s) {
            cell_properties(rec, k, sampler.next());
            ++cells;
        }
        cases += rec.cases;
        if (!rec.ok)
            return {false, "n = " + std::to_string(n) + ": " + rec.failures.front()};
    }
    if (cells < 1000)
        return {false, "only " + std::to_string(cells) + " cells"};
    return {true, std::to_string(cells) + " cells, " + std::to_string(cases) + " property checks"};
}

Outcome horn_factorizations()
{
    Oriental o = oriental(4);
    const Adc& k = o.complex;
    HornFactorization h = gamma_family(o, 2);
    auto cell = [&](std::vector<const char*> ids, int dim) { return Cell{parse(k, ids), dim}; };
    struct Entry {
        const char* name;
        Cell got;
        Cell want;
    };
    const std::vector<Entry> table = {
        {"a_3", h.level(3).a, cell({"1234", "014"}, 3)},
        {"gamma_3", h.level(3).gamma, cell({"0134", "123"}, 3)},
        {"b_3", h.level(3).b, cell({"0123", "034"}, 3)},
        {"a_2", h.level(2).a, cell({"123", "01", "34"}, 2)},
        {"gamma_2", h.level(2).gamma, cell({"0134"}, 3)},
        {"b_2", h.level(2).b, cell({"04"}, 2)},
        {"gamma_1", h.level(1).gamma, cell({"0134"}, 3)},
        {"a_1", h.level(1).a, cell({"4"}, 1)},
        {"b_1", h.level(1).b, cell({"0"}, 1)},
    };
    for (const auto& e : table)
        if (!(e.got == e.want))
            return {false, std::string(e.name) + " = " + to_string(e.got)};
    int horns = 0;
    for (int n = 2; n <= 6; ++n) {
        Oriental on = oriental(n);
        for (int i = 0; i <= n; ++i) {
            CheckRecord rec = horns_check(on, i);
            ++horns;
            if (!rec.ok)
                return {false, "(" + std::to_string(n) + ", " + std::to_string(i) + "): " + rec.failures.front()};
        }
    }
    return {true, "(4, 2) table exact with a_1 = 1_{4}, b_1 = 1_{0} from the unit rule; " + std::to_string(horns) +
                      " horns recompose"};
}

Outcome complicial_support()
{
    ComplicialReport report = verify_complicial_props(6);
    std::size_t violations = 0;
    for (const auto& c : report.checks)
        violations += c.violations.size() + (c.ok ? 0 : 1);
    if (!report.ok || violations)
        return {false, std::to_string(violations) + " violations"};
    return {true, std::to_string(report.checks.size()) + " checks, zero violations"};
}

Outcome morphism_suite()
{
    for (int n = 1; n <= 5; ++n) {
        projection_p(n);
        AdcMorphism q = morphism_q(n);
        if (!is_quasi_rigid(q))
            return {false, "q(" + std::to_string(n) + ") not quasi-rigid"};
    }
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i <= n; ++i) {
            Adc horn = chains_of(build_complex({Shape::horn, n, i}));
            if (!is_quasi_rigid(inclusion_morphism(horn, oriental(n).complex)))
                return {false, "horn inclusion (" + std::to_string(n) + ", " + std::to_string(i) + ")"};
        }

    AdcMorphism p = projection_p(4);
    AdcMorphism q = morphism_q(3);
    Adc horn = chains_of(build_complex({Shape::horn, 4, 1}));
    AdcMorphism inc = inclusion_morphism(horn, p.source());
    AdcMorphism p_inc = compose(p, inc);
    std::size_t pairs = 0;
    for (const AdcMorphism* f : {&p, &q, &inc}) {
        CellSampler sampler(f->source(), default_seed + pairs);
        for (int s = 0; s < 200; ++s, ++pairs) {
            ComposablePair pr = sampler.next_pair();
            Cell xy = cell_compose(f->source(), pr.x, pr.y, pr.k);
            Cell image = apply_mu(*f, xy);
            if (!(image == cell_compose(f->target(), apply_mu(*f, pr.x), apply_mu(*f, pr.y), pr.k)))
                return {false, "composite " + to_string(xy)};
            if (f == &inc && !(apply_mu(p_inc, xy) == apply_mu(p, image)))
                return {false, "composite morphism on " + to_string(xy)};
        }
    }
    return {true, "p, q valid for n <= 5; q and horn inclusions quasi-rigid; " + std::to_string(pairs) +
                      " composable pairs preserved"};
}

Outcome globe_counts()
{
    for (int n = 0; n <= 6; ++n) {
        Adc g = globe_adc(n);
        const auto size = g.basis()->size();
        std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
            std::vector<Term> terms;
            for (std::uint32_t b = 0; b < size; ++b)
                if (mask >> b & 1)
                    terms.emplace_back(b, 1);
            Chain c(GroupElement(g.basis(), terms));
            if (!is_coherent(g, c))
                continue;
            for (int k = degree(c); k <= n; ++k)
                ++counts[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k <= n; ++k) {
            int want = k < n ? 2 * k + 2 : 2 * n + 1;
            if (counts[static_cast<std::size_t>(k)] != want)
                return {false, "globe " + std::to_string(n) + " dim " + std::to_string(k) + ": " +
                                   std::to_string(counts[static_cast<std::size_t>(k)])};
        }
    }
    return {true, "globes n <= 6 match 2k+2 below the top and 2n+1 at the top"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "golden decomposition", 1.0, golden_decomposition},
        {2, "face formula oracle", 10.0, face_formula_oracle},
        {3, "round trips", 30.0, round_trips},
        {4, "basis certification", 10.0, basis_certification},
        {5, "coherence properties", 30.0, coherence_properties},
        {6, "horn factorizations", 60.0, horn_factorizations},
        {7, "complicial support", 60.0, complicial_support},
        {8, "morphism suite", 30.0, morphism_suite},
        {9, "globe cell counts", 5.0, globe_counts},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.limit_seconds;
        bool ok = out.ok && in_time;
        failures += ok ? 0 : 1;
        std::printf("criterion %d %s: %s (%.3f s, limit %.0f s) %s%s\n", c.number, c.title.c_str(),
                    ok ? "PASS" : "FAIL", seconds, c.limit_seconds, out.detail.c_str(),
                    in_time ? "" : " [over time limit]");
        std::fflush(stdout);
    }
    return failures;
}
