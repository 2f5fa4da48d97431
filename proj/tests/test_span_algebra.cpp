#include "helpers.hpp"

#include <random>

using namespace ssu;

namespace {

SpanElement M(const SelfSimilarSystem& s, const std::string& t, Rational c = 1) {
    return SpanElement::monomial(th::Q(s, t), c);
}

std::string alg(const SelfSimilarSystem& s, const std::string& t) { return format_algebra(s, eval_algebra(s, t)); }

// One vertex a fed by two loops p and q.
const char* kTwoInEdges = R"({
  "name": "two-in",
  "universe": {"kind": "finite", "vertices": ["a"]},
  "edges": [{"id": "p", "range": "a", "source": "FIN{a}"}, {"id": "q", "range": "a", "source": "FIN{a}"}],
  "group": {"kind": "finite_table", "elements": ["1"], "table": [["1"]], "identity": "1", "generators": []},
  "action": {"kind": "permutation", "generators": {}},
  "cocycle": "trivial"
})";

}  // namespace

TEST_CASE("span products follow the Cuntz-Krieger relations", "[span_algebra]") {
    auto s = th::example("ex5.2");
    // p_A s_e is s_e when r(e) lies in A and 0 otherwise
    CHECK(span_product(*s, M(*s, "(w; {v}; 0; w)"), M(*s, "(e; {v,w}; 0; w)")) == M(*s, "(e; {v,w}; 0; w)"));
    CHECK(span_product(*s, M(*s, "(w; {w}; 0; w)"), M(*s, "(e; {v,w}; 0; w)")).is_zero());
    // s_e^* s_e = p_{s(e)}
    CHECK(span_product(*s, M(*s, "(w; {v,w}; 0; e)"), M(*s, "(e; {v,w}; 0; w)")) == M(*s, "(w; {v,w}; 0; w)"));
    // s_e^* s_f = 0
    CHECK(span_product(*s, M(*s, "(w; {v,w}; 0; e)"), M(*s, "(f; {v,w}; 0; w)")).is_zero());
}

TEST_CASE("span elements keep rational coefficients", "[span_algebra]") {
    auto s = th::example("ex5.2");
    SpanElement x = M(*s, "(e; {v}; 1; f)", Rational(2, 3)) + M(*s, "(e; {v}; 1; f)", Rational(1, 3));
    CHECK(x == M(*s, "(e; {v}; 1; f)"));
    CHECK((x - x).is_zero());
    CHECK(x.scaled(0).is_zero());
    CHECK(span_star(*s, x.scaled(Rational(-1, 2))) == M(*s, "(f; {w}; 1; e)", Rational(-1, 2)));
}

TEST_CASE("span products are associative and star reverses them", "[span_algebra]") {
    auto s = th::example("ex5.2");
    auto elems = enumerate_elements(*s, 1);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_span = [&] {
        SpanElement x;
        for (int i = 0; i < 4; ++i) x = x + SpanElement::monomial(elems[pick(rng)], coef(rng));
        return x;
    };
    for (int i = 0; i < 200; ++i) {
        SpanElement a = random_span(), b = random_span(), c = random_span();
        REQUIRE(span_product(*s, span_product(*s, a, b), c) == span_product(*s, a, span_product(*s, b, c)));
        REQUIRE(span_star(*s, span_product(*s, a, b)) == span_product(*s, span_star(*s, b), span_star(*s, a)));
    }
}

TEST_CASE("the CK4 identity holds on test monomials", "[span_algebra]") {
    auto s = th::example("ex5.2");
    Ck4Result v = ck4_identity(*s, th::V(*s, "v"));
    CHECK(v.equal);
    CHECK(v.rhs.terms().size() == 1);
    CHECK(v.tests > 0);
    auto t = th::example("ex5.3-trivial");
    Ck4Result v0 = ck4_identity(*t, th::V(*t, "v0"), 2);
    CHECK(v0.equal);
    CHECK(v0.rhs == M(*t, "(e0; {v0,v1}; 0; e0)"));
    auto two = th::graph(kTwoInEdges);
    Ck4Result a = ck4_identity(*two, th::V(*two, "a"), 2);
    CHECK(a.equal);
    CHECK(a.rhs.terms().size() == 2);
    // orthogonality kills the cross term
    CHECK(span_product(*two, M(*two, "(w; {a}; 1; p)"), a.rhs) == M(*two, "(w; {a}; 1; p)"));
}

TEST_CASE("the crossed-product map", "[span_algebra]") {
    auto s = th::example("ex5.2");
    CrossedMonomial m = crossed_map(*s, th::Q(*s, "(e; {w}; 1; f)").quad());
    CHECK(m.ck == th::Q(*s, "(e; {w}; 0; e)").quad());
    CHECK(m.g == 1);
    CrossedMonomial q = crossed_map(*s, th::Q(*s, "(e.f; {v}; 0; e.f)").quad());
    CHECK(q.ck == th::Q(*s, "(e.f; {v}; 0; e.f)").quad());
    CHECK(q.g == 0);
    CrossedMonomial p = crossed_map(*s, th::Q(*s, "(w; {v}; 1; w)").quad());
    CHECK(p.ck == th::Q(*s, "(w; {v}; 0; w)").quad());
    CHECK(p.g == 1);
    CHECK(crossed_map(*s, Element::zero()).is_zero());
    CHECK(eta(*s, 1, th::Q(*s, "(e; {w}; 0; e.f)").quad()) == th::Q(*s, "(f; {v}; 0; f.e)").quad());
    auto nt = th::example("ex5.3(3,-3)");
    CHECK_THROWS_AS(crossed_map(*nt, th::Q(*nt, "(e0; {v0}; 0; e0)").quad()), NontrivialCocycle);
}

TEST_CASE("twisted convolution and its star", "[span_algebra]") {
    auto s = th::example("ex5.2");
    // (p_v delta_1)(p_v delta_1) = p_v p_w delta_0 = 0
    CHECK(alg(*s, "(w; {v}; 0; w) delta[1] * (w; {v}; 0; w) delta[1]") == "0");
    CHECK(alg(*s, "(w; {v}; 0; w) delta[1] * (w; {w}; 0; w) delta[1]") == "(w; {v}; 0; w) delta[0]");
    CHECK(alg(*s, "[(e; {w}; 0; e) delta[1]]^*") == "(f; {v}; 0; f) delta[1]");
    auto elems = enumerate_elements(*s, 1);
    for (const auto& a : elems) {
        CrossedSpan x = crossed_map(*s, a);
        REQUIRE(crossed_star(*s, crossed_star(*s, x)) == x);
        REQUIRE(crossed_map(*s, invert(*s, a)) == crossed_star(*s, x));
        for (const auto& b : elems)
            REQUIRE(crossed_map(*s, multiply(*s, a, b)) == crossed_product(*s, x, crossed_map(*s, b)));
    }
}

TEST_CASE("group relations as quadruple products", "[span_algebra]") {
    auto s = th::example("ex5.2");
    // u_g p_A = p_{g.A} u_g
    CHECK(multiply(*s, th::Q(*s, "(w; {v,w}; 1; w)"), th::Q(*s, "(w; {v}; 0; w)")) ==
          multiply(*s, th::Q(*s, "(w; {w}; 0; w)"), th::Q(*s, "(w; {v,w}; 1; w)")));
    // u_g s_e = s_{g.e} u_{phi(g,e)}
    CHECK(multiply(*s, th::Q(*s, "(w; {v,w}; 1; w)"), th::Q(*s, "(e; {v,w}; 0; w)")) ==
          multiply(*s, th::Q(*s, "(f; {v,w}; 0; w)"), th::Q(*s, "(w; {v,w}; 1; w)")));
}

TEST_CASE("algebra expressions", "[span_algebra]") {
    auto s = th::example("ex5.2");
    CHECK(alg(*s, "(w;{v,w};0;e)*(f;{v,w};0;w) + 2/3 (e; {v}; 1; f)") == "2/3 (e; {v}; 1; f)");
    CHECK(alg(*s, "(e; {v}; 1; f) - (e; {v}; 1; f)") == "0");
    CHECK(alg(*s, "(e; {w}; 1; f) delta[0]") == "(e; {w}; 0; e) delta[1]");
    CHECK(alg(*s, "1/2 + 1/3") == "5/6");
    CHECK_THROWS_AS(eval_algebra(*s, "(e; {v}; 1; f) +"), ParseError);
    auto nt = th::example("ex5.3(2,1)");
    CHECK_THROWS_AS(eval_algebra(*nt, "(e0; {v0}; 0; e0) delta[1]"), NontrivialCocycle);
}
