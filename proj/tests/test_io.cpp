#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include <steiner/io.hpp>

#include "support.hpp"

using namespace steiner;
using support::ch;
using io::Json;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("complexes round-trip")
{
    Adc k = oriental(3).complex;
    Json j = io::to_json(k);
    CHECK(j["basis"].size() == 15);
    CHECK(j["basis"][0] == Json{{"id", "0"}, {"dim", 0}});
    CHECK(j["d"]["012"]["12"] == 1);
    CHECK(j["d"]["012"]["02"] == -1);
    CHECK(j["d"]["012"]["01"] == 1);
    CHECK(j["e"]["3"] == 1);

    Adc back = io::adc_from_json(Json::parse(j.dump()));
    CHECK(io::to_json(back).dump() == j.dump());
    for (std::uint32_t b = 0; b < k.basis()->size(); ++b) {
        CHECK(back.basis()->id(b) == k.basis()->id(b));
        CHECK(io::to_json(back.boundary_of(b)) == io::to_json(k.boundary_of(b)));
    }
}

TEST_CASE("malformed complexes")
{
    CHECK(code_of([] { io::adc_from_json(Json::parse(R"({"d":{}})")); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { io::adc_from_json(Json::parse(R"({"basis":[{"id":"a"}]})")); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { io::adc_from_json(Json::parse(R"({"basis":[{"id":"a","dim":0}],"e":{"a":"x"}})")); }) ==
          ErrorCode::MalformedInput);
    CHECK(code_of([] {
              io::adc_from_json(Json::parse(R"({"basis":[{"id":"a","dim":0},{"id":"a","dim":0}],"e":{"a":1}})"));
          }) == ErrorCode::DuplicateBasisId);
    CHECK(code_of([] {
              io::adc_from_json(Json::parse(
                  R"({"basis":[{"id":"p","dim":0},{"id":"q","dim":0},{"id":"s","dim":1},{"id":"t","dim":2}],
                      "d":{"s":{"q":1,"p":-1},"t":{"s":1}},"e":{"p":1,"q":1}})"));
          }) == ErrorCode::BoundarySquareNonzero);
}

TEST_CASE("large coefficients survive as strings")
{
    Adc k = oriental(1).complex;
    Integer big = 1;
    big <<= 90;
    GroupElement x(k.basis(), {{k.at("01"), big}, {k.at("0"), -3}});
    Json j = io::to_json(x);
    CHECK(j["01"].is_string());
    CHECK(j["0"] == -3);
    CHECK(io::group_element_from_json(k.basis(), j) == x);
    CHECK_THROWS_AS(io::chain_from_json(k.basis(), j), Error);
}

TEST_CASE("tables and expression trees round-trip")
{
    Adc k = oriental(4).complex;
    Cell c{ch(k, "1234+0134+0123"), 3};
    SteinerTable t = table_of_chain(k, c);
    CHECK(io::table_from_json(k.basis(), Json::parse(io::to_json(t).dump())) == t);

    ExpressionTree tree = decompose_full(k, c);
    Json jt = io::to_json(tree);
    CHECK(jt["k"] == 2);
    CHECK(jt["factors"].size() == 3);
    ExpressionTree back = io::tree_from_json(k.basis(), Json::parse(jt.dump()));
    CHECK(render(back) == render(tree));
    CHECK(evaluate(k, back, 3) == c);

    ExpressionTree unit_tree = decompose_full(k, Cell{ch(k, "01"), 2});
    Json ju = io::to_json(unit_tree);
    CHECK(ju == Json{{"gen", "01"}, {"dim", 2}});
    CHECK(render(io::tree_from_json(k.basis(), ju)) == "1_{01}");
    CHECK_THROWS_AS(io::tree_from_json(k.basis(), Json::parse(R"({"k":0,"factors":[]})")), Error);
}

TEST_CASE("simplicial sets round-trip")
{
    SimplicialSet s = build_complex({Shape::horn, 3, 1});
    Json j = io::to_json(s);
    SimplicialSet back = io::simplicial_from_json(Json::parse(j.dump()));
    CHECK(io::to_json(back) == j);
    CHECK(back.size() == s.size());

    Json pinched = Json::parse(R"({"simplices":[{"id":"a","dim":0},{"id":"b","dim":0},
        {"id":"f","dim":1,"faces":["b","a"]},{"id":"t","dim":2,"faces":[null,"f","f"]}]})");
    SimplicialSet p = io::simplicial_from_json(pinched);
    CHECK_FALSE(p.face(p.at("t"), 0).has_value());
    CHECK(io::to_json(p)["simplices"][3]["faces"][0].is_null());
    CHECK_FALSE(check_regular(p).ok);
}

TEST_CASE("morphisms round-trip")
{
    AdcMorphism q = morphism_q(2);
    Json j = io::to_json(q);
    CHECK(j["images"]["0123"] == Json{{"y", 1}});
    CHECK(j["images"]["012"] == Json::object());
    AdcMorphism back = io::morphism_from_json(Json::parse(j.dump()));
    CHECK(io::to_json(back).dump() == j.dump());
    CHECK(is_quasi_rigid(back));
}

TEST_CASE("reports")
{
    Oriental o = oriental(2);
    Json eq = io::to_json(horn_equation(o, 0));
    CHECK(eq["equation"] == "y: 02 -> x *_0 01");
    CHECK(eq["alpha"] == "+");
    CHECK(eq["rhs"] == Json{{"01", 1}, {"12", 1}});
    CHECK(eq["substitution_ok"] == true);

    ComplicialCheck c;
    c.n = 4;
    c.i = 2;
    c.k = 3;
    c.kind = "gamma";
    CHECK(io::to_json(c).dump() == R"({"n":4,"i":2,"k":3,"kind":"gamma","ok":true})");
}
