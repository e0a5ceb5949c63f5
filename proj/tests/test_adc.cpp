#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace steiner;
using support::ch;

namespace {

RawAdc globe2_raw()
{
    RawAdc raw;
    raw.basis = {{"a-", 0}, {"a+", 0}, {"b-", 1}, {"b+", 1}, {"c", 2}};
    raw.diff["b-"] = {{"a+", 1}, {"a-", -1}};
    raw.diff["b+"] = {{"a+", 1}, {"a-", -1}};
    raw.diff["c"] = {{"b+", 1}, {"b-", -1}};
    raw.aug = {{"a-", 1}, {"a+", 1}};
    return raw;
}

// Two parallel edges pointing in opposite directions.
RawAdc looped_raw()
{
    RawAdc raw;
    raw.basis = {{"v", 0}, {"w", 0}, {"a", 1}, {"b", 1}};
    raw.diff["a"] = {{"v", 1}, {"w", -1}};
    raw.diff["b"] = {{"w", 1}, {"v", -1}};
    raw.aug = {{"v", 1}, {"w", 1}};
    return raw;
}

} // namespace

TEST_CASE("validation accepts well-formed complexes")
{
    CHECK_NOTHROW(validate_adc(globe2_raw()));
    CHECK_NOTHROW(oriental(1));
}

TEST_CASE("validation rejects bad augmentation and a non-zero square")
{
    RawAdc raw = globe2_raw();
    raw.diff["b+"] = {{"a+", 1}};
    try {
        validate_adc(raw);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AugmentationNonzeroOnBoundary);
    }
    RawAdc square;
    square.basis = {{"p", 0}, {"q", 0}, {"s", 1}, {"t", 2}};
    square.diff["s"] = {{"q", 1}, {"p", -1}};
    square.diff["t"] = {{"s", 1}};
    square.aug = {{"p", 1}, {"q", 1}};
    try {
        validate_adc(square);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundarySquareNonzero);
    }
}

TEST_CASE("validation rejects unknown ids")
{
    RawAdc raw = globe2_raw();
    raw.diff["c"] = {{"nope", 1}};
    try {
        validate_adc(raw);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownBasisId);
    }
}

TEST_CASE("boundary_pm splits the differential")
{
    Adc k2 = oriental(2).complex;
    auto p = boundary_pm(k2, ch(k2, "012"));
    CHECK(p.plus == ch(k2, "01+12"));
    CHECK(p.minus == ch(k2, "02"));

    Adc g = validate_adc(globe2_raw());
    auto q = boundary_pm(g, g.singleton("c"));
    CHECK(q.plus == g.singleton("b+"));
    CHECK(q.minus == g.singleton("b-"));

    Adc k4 = oriental(4).complex;
    auto r = boundary_pm(k4, ch(k4, "0124"));
    CHECK(r.plus == ch(k4, "124+014"));
    CHECK(r.minus == ch(k4, "024+012"));

    CHECK_THROWS_AS(boundary_pm(k4, ch(k4, "0124+01")), Error);
}

TEST_CASE("atom tables")
{
    Adc k2 = oriental(2).complex;
    const SteinerTable& t = atom_table(k2, k2.element("012"));
    CHECK(t.dim == 2);
    CHECK(t.minus == std::vector<Chain>{ch(k2, "0"), ch(k2, "02"), ch(k2, "012")});
    CHECK(t.plus == std::vector<Chain>{ch(k2, "2"), ch(k2, "01+12"), ch(k2, "012")});

    const SteinerTable& v = atom_table(k2, k2.element("1"));
    CHECK(v.minus == std::vector<Chain>{ch(k2, "1")});
    CHECK(v.plus == std::vector<Chain>{ch(k2, "1")});

    Adc k4 = oriental(4).complex;
    const SteinerTable& w = atom_table(k4, k4.element("0123"));
    CHECK(w.minus[1] == ch(k4, "03"));
    CHECK(w.plus[1] == ch(k4, "01+12+23"));
}

TEST_CASE("atom rows satisfy the boundary identity and are disjoint")
{
    Adc k = oriental(5).complex;
    for (std::uint32_t b = 0; b < k.basis()->size(); ++b) {
        const SteinerTable& t = atom_table(k, b);
        for (int j = 0; j < t.dim; ++j) {
            CHECK(t.plus[j].value() - t.minus[j].value() == k.boundary(t.plus[j + 1]));
            CHECK(disjoint(t.plus[j], t.minus[j]));
        }
    }
}

TEST_CASE("unitary bases")
{
    for (int n = 0; n <= 5; ++n)
        CHECK(is_unitary(oriental(n).complex).ok);
    CHECK(is_unitary(validate_adc(globe2_raw())).ok);

    RawAdc raw;
    raw.basis = {{"b0", 0}, {"b1", 0}, {"b2", 0}, {"e", 1}};
    raw.diff["e"] = {{"b1", 1}, {"b2", 1}, {"b0", -2}};
    raw.aug = {{"b0", 1}, {"b1", 1}, {"b2", 1}};
    auto report = is_unitary(validate_adc(raw));
    CHECK_FALSE(report.ok);
    CHECK(report.violators == std::vector<std::string>{"e"});
}

TEST_CASE("order relation and loop-freeness")
{
    Adc k4 = oriental(4).complex;
    const OrderRelation& rel = order_relation(k4, 2);
    CHECK(rel.has_edge(k4.at("0124"), k4.at("0234")));
    CHECK(rel.has_edge(k4.at("1234"), k4.at("0134")));
    CHECK(rel.has_edge(k4.at("0134"), k4.at("0123")));
    CHECK_FALSE(rel.has_edge(k4.at("0234"), k4.at("0124")));

    for (int n = 0; n <= 5; ++n)
        CHECK(is_loop_free(oriental(n).complex).ok);

    Adc looped = validate_adc(looped_raw());
    auto report = is_loop_free(looped);
    CHECK_FALSE(report.ok);
    CHECK(report.level == 0);
    REQUIRE(report.cycle.size() >= 2);
    const OrderRelation& zero = order_relation(looped, 0);
    for (std::size_t j = 0; j < report.cycle.size(); ++j) {
        const auto& from = report.cycle[j];
        const auto& to = report.cycle[(j + 1) % report.cycle.size()];
        CHECK(zero.has_edge(looped.at(from), looped.at(to)));
    }
}
