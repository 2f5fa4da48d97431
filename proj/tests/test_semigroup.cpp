#include "helpers.hpp"

#include <random>

using namespace ssu;

namespace {

std::string prod(const SelfSimilarSystem& s, const std::string& a, const std::string& b) {
    return th::F(s, multiply(s, th::Q(s, a), th::Q(s, b)));
}

}  // namespace

TEST_CASE("the domain constraint is enforced", "[semigroup]") {
    auto s = th::example("ex5.2");
    CHECK_NOTHROW(th::Q(*s, "(e; {w}; 1; f)"));
    CHECK_THROWS_AS(th::Q(*s, "(e; FIN{}; 1; f)"), ConstraintError);
    auto t = th::example("ex5.3-trivial");
    // {w} is not inside s(e0) = {v0,v1}
    CHECK_THROWS_AS(th::Q(*t, "(e0; {w}; 0; w)"), ConstraintError);
    CHECK_NOTHROW(th::Q(*t, "(w; {w}; 0; w)"));
    CHECK_THROWS_AS(th::Q(*t, "(w; {w}; 0; f)"), ConstraintError);
    CHECK(satisfies_constraint(*t, Quad{th::P(*t, "f"), th::S(*t, "{v0}"), 1, th::P(*t, "e1")}));
}

TEST_CASE("products on ex5.2 match the reference", "[semigroup]") {
    // frozen from tests/oracle/derive.py
    auto s = th::example("ex5.2");
    CHECK(prod(*s, "(e; {w}; 1; f)", "(f; {v}; 0; w)") == "(e; {w}; 1; w)");
    CHECK(prod(*s, "(w; {v,w}; 1; w)", "(e; {v,w}; 0; w)") == "(f; {v,w}; 1; w)");
    CHECK(prod(*s, "(e; {v}; 0; e.f)", "(e; {v,w}; 1; f)") == "(e; {v}; 1; f.e)");
    CHECK(prod(*s, "(w; {w}; 0; e)", "(e; {v,w}; 0; w)") == "(w; {w}; 0; w)");
    CHECK(prod(*s, "(w; {v,w}; 0; e)", "(f; {v,w}; 0; w)") == "0");
    CHECK(prod(*s, "(f; {v}; 1; e)", "(e.e; {w}; 1; f)") == "0");
    CHECK(prod(*s, "(e.f; {w}; 1; e)", "(w; {v}; 0; w)") == "(e.f; {w}; 1; e)");
}

TEST_CASE("products on ex5.3 match the reference", "[semigroup]") {
    struct Row {
        const char* name;
        const char* xy;
        const char* yx;
    };
    const char* x = "(e0; {v0,v1}; 1; e1)";
    const char* y = "(e1.e0; {v1}; 2; e0)";
    for (Row r : {Row{"ex5.3-trivial", "(e0.e1; {v0}; 3; e0)", "(e1.e0; {v1}; 3; e1)"},
                  Row{"ex5.3(3,-3)", "(e0.e1; {v0}; 5; e0)", "(e1.e0; {v1}; 3; e1)"},
                  Row{"ex5.3(2,1)", "(e0.e1; {v1}; 4; e0)", "(e1.e0; {v1}; 3; e1)"}}) {
        auto s = th::example(r.name);
        INFO(r.name);
        CHECK(prod(*s, x, y) == r.xy);
        CHECK(prod(*s, y, x) == r.yx);
    }
}

TEST_CASE("inverse and idempotents", "[semigroup]") {
    auto s = th::example("ex5.2");
    Element a = th::Q(*s, "(e; {w}; 1; f)");
    CHECK(th::F(*s, invert(*s, a)) == "(f; {v}; 1; e)");
    CHECK(is_idempotent(*s, multiply(*s, invert(*s, a), a)));
    CHECK(th::F(*s, multiply(*s, invert(*s, a), a)) == "(f; {v}; 0; f)");
    CHECK(is_idempotent(*s, th::Q(*s, "(e.f; {v}; 0; e.f)")));
    CHECK_FALSE(is_idempotent(*s, th::Q(*s, "(e; {v}; 0; f)")));
    CHECK_FALSE(is_idempotent(*s, Element::zero()));
}

TEST_CASE("the order on idempotents", "[semigroup]") {
    auto s = th::example("ex5.2");
    auto q = [&](const char* t) { return th::Q(*s, t); };
    CHECK(leq(*s, q("(e; {v}; 0; e)"), q("(e; {v,w}; 0; e)")));
    CHECK_FALSE(leq(*s, q("(e; {v,w}; 0; e)"), q("(e; {v}; 0; e)")));
    // alpha = beta gamma with r(gamma) inside B
    CHECK(leq(*s, q("(e.f; {v}; 0; e.f)"), q("(e; {w}; 0; e)")));
    CHECK_FALSE(leq(*s, q("(e.f; {v}; 0; e.f)"), q("(e; {v}; 0; e)")));
    CHECK(leq(*s, q("(f; {v,w}; 0; f)"), q("(w; {w}; 0; w)")));
    CHECK(intersects(*s, q("(e; {v}; 0; e)"), q("(w; {v}; 0; w)")));
    CHECK_FALSE(intersects(*s, q("(e; {v}; 0; e)"), q("(f; {v}; 0; f)")));
    CHECK_THROWS_AS(leq(*s, q("(e; {v}; 1; f)"), q("(e; {v}; 0; e)")), NotIdempotent);
}

TEST_CASE("the exhaustive sample of ex5.2 has 294 elements", "[semigroup]") {
    auto s = th::example("ex5.2");
    CHECK(enumerate_elements(*s, 2).size() == 294);
    CHECK_THROWS_AS(enumerate_elements(*th::example("ex5.1"), 1), Unsupported);
}

TEST_CASE("normalisation is a no-op on the bundled finite examples", "[semigroup]") {
    auto s = th::example("ex5.2");
    auto elems = enumerate_elements(*s, 1);
    for (const auto& a : elems)
        for (const auto& b : elems) REQUIRE(detail::multiply_unnormalized(*s, a, b) == multiply(*s, a, b));
}

TEST_CASE("axioms on a random sample of ex5.3", "[semigroup]") {
    auto s = th::example("ex5.3(2,1)");
    std::mt19937_64 rng(11);
    auto elems = enumerate_elements(*s, 2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const Element& a = elems[pick(rng)];
        const Element& b = elems[pick(rng)];
        const Element& c = elems[pick(rng)];
        REQUIRE(multiply(*s, multiply(*s, a, b), c) == multiply(*s, a, multiply(*s, b, c)));
        REQUIRE(multiply(*s, multiply(*s, a, invert(*s, a)), a) == a);
        REQUIRE(invert(*s, multiply(*s, a, b)) == multiply(*s, invert(*s, b), invert(*s, a)));
    }
}

TEST_CASE("semigroup expressions", "[semigroup]") {
    auto s = th::example("ex5.2");
    CHECK(th::F(*s, eval_semigroup(*s, "(e; {w}; 1; f) * (f; {v}; 0; w)")) == "(e; {w}; 1; w)");
    CHECK(th::F(*s, eval_semigroup(*s, "(e; {w}; 1; f)^-1 * (e; {w}; 1; f)")) == "(f; {v}; 0; f)");
    CHECK(th::F(*s, eval_semigroup(*s, "[(e; {w}; 1; f) * (f; {v}; 0; w)]^*")) == "(w; {v}; 1; e)");
    CHECK(th::F(*s, eval_semigroup(*s, "0 * (e; {w}; 1; f)")) == "0");
    CHECK_THROWS_AS(eval_semigroup(*s, "(e; {w}; 1)"), ParseError);
    CHECK_THROWS_AS(eval_semigroup(*s, "(e; {w}; 1; f) *"), ParseError);
    CHECK_THROWS_AS(eval_semigroup(*s, "(e; {w}; 2; f)"), ParseError);
}
