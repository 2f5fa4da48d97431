#include "helpers.hpp"

using namespace ssu;

namespace {

std::string theta(const SelfSimilarSystem& s, const std::string& elem, const std::string& filter) {
    auto img = theta_apply(s, th::Q(s, elem), parse_filter(s, filter), 256);
    REQUIRE(img);
    return format_filter(s, *img);
}

}  // namespace

TEST_CASE("filters parse and format", "[filters]") {
    auto s = th::example("ex5.2");
    for (const char* t : {"lasso:/e", "lasso:e/f", "lasso:f.e/e.f"}) CHECK(format_filter(*s, parse_filter(*s, t)) == t);
    CHECK(format_filter(*s, parse_filter(*s, "lasso:e.f/e.f")) == "lasso:/e.f");
    auto z = th::example("ex5.1");
    for (const char* t : {"finite:e[1]/tail:v:+", "finite:e[1]/principal:TAIL(v,1)"})
        CHECK(format_filter(*z, parse_filter(*z, t)) == t);
    CHECK_THROWS_AS(parse_filter(*s, "/e"), ParseError);
    CHECK_THROWS_AS(parse_filter(*z, "finite:e[1]/tail:x:+"), ParseError);
    // a tail towards -infinity is not inside s(e[1])
    CHECK_THROWS_AS(parse_filter(*z, "finite:e[1]/tail:v:-"), DomainError);
}

TEST_CASE("membership of basic idempotents", "[filters]") {
    auto s = th::example("ex5.2");
    TightFilter f = parse_filter(*s, "lasso:e/f");
    CHECK(filter_contains(*s, f, th::Q(*s, "(e; {v,w}; 0; e)")));
    CHECK(filter_contains(*s, f, th::Q(*s, "(e.f.f; {w}; 0; e.f.f)")));
    CHECK_FALSE(filter_contains(*s, f, th::Q(*s, "(e.f.f; {v}; 0; e.f.f)")));
    CHECK_FALSE(filter_contains(*s, f, th::Q(*s, "(f; {v,w}; 0; f)")));
    CHECK(in_cylinder(*s, f, Path::omega(), th::S(*s, "{v}")));
}

TEST_CASE("theta on ex5.2", "[filters]") {
    auto s = th::example("ex5.2");
    CHECK(theta(*s, "(e; {w}; 1; f)", "lasso:f/e") == "lasso:e/f");
    CHECK(theta(*s, "(e; {v,w}; 0; w)", "lasso:/e") == "lasso:/e");
    CHECK(theta(*s, "(w; {v,w}; 1; w)", "lasso:e/f") == "lasso:f/e");
    CHECK_THROWS_AS(theta_apply(*s, th::Q(*s, "(e; {w}; 1; f)"), parse_filter(*s, "lasso:/f"), 64), DomainError);
}

TEST_CASE("theta on finite-type filters", "[filters]") {
    auto s = th::example("ex5.1");
    CHECK(theta(*s, "(e[1]; TAIL(v,1); 2; e[-1])", "finite:e[-1]/tail:v:+") == "finite:e[1]/tail:v:+");
}

TEST_CASE("theta composes and inverts on a sample", "[filters]") {
    auto s = th::example("ex5.3(3,-3)");
    Element a = th::Q(*s, "(e0; {v0,v1}; 1; e1)");
    Element b = th::Q(*s, "(e1.e0; {v1}; 2; e0)");
    Element ab = multiply(*s, a, b);
    REQUIRE_FALSE(ab.is_zero());
    TightFilter f = parse_filter(*s, "lasso:e0.e1/e0");
    auto fb = theta_apply(*s, b, f, 256);
    REQUIRE(fb);
    auto both = theta_apply(*s, a, *fb, 256);
    REQUIRE(both);
    CHECK(theta_apply(*s, ab, f, 256) == both);
    CHECK(theta_apply(*s, invert(*s, b), *fb, 256) == f);
}

TEST_CASE("path filters are enumerated in order", "[filters]") {
    auto s = th::example("ex5.2");
    auto all = enumerate_path_filters(*s, s->graph().full(), 3);
    CHECK(all.size() == 18);  // frozen from tests/oracle/derive.py
    CHECK(format_lasso(s->graph(), all.front()) == "/e");
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].prefix.size() + all[i - 1].cycle.size() <= all[i].prefix.size() + all[i].cycle.size());
    CHECK(enumerate_path_filters(*s, th::S(*s, "{v}"), 3).size() == 9);
}

TEST_CASE("fixed points on ex5.2", "[filters]") {
    auto s = th::example("ex5.2");
    auto one = fixed_points(*s, th::Q(*s, "(e; {v}; 0; w)"), Bounds{});
    CHECK(one.exhaustive);
    REQUIRE(one.points.size() == 1);
    CHECK(format_filter(*s, one.points[0].filter) == "lasso:/e");
    auto two = fixed_points(*s, th::Q(*s, "(e; {w}; 1; w)"), Bounds{});
    REQUIRE(two.points.size() == 1);
    CHECK(format_filter(*s, two.points[0].filter) == "lasso:/e.f");
    CHECK(fixed_points(*s, th::Q(*s, "(e; {v}; 0; f)"), Bounds{}).points.empty());
    // an idempotent fixes its whole domain, every germ trivial
    auto idem = fixed_points(*s, th::Q(*s, "(e; {v}; 0; e)"), Bounds{});
    CHECK_FALSE(idem.points.empty());
    for (const auto& p : idem.points) CHECK(p.classification == FixedPoint::Class::Trivial);
    CHECK_THROWS_AS(fixed_points(*s, Element::zero(), Bounds{}), DomainError);
}
