#include "helpers.hpp"

using namespace ssu;

TEST_CASE("bundled systems validate", "[action]") {
    for (const std::string name : {"ex5.1", "ex5.2", "ex5.3-trivial", "ex5.3(3,-3)", "ex5.3(2,1)", "ex5.3(0,1)"}) {
        auto s = th::example(name);
        INFO(name);
        CHECK(validate_system(*s, 6).is_holds());
    }
}

TEST_CASE("the swap acts on ex5.2", "[action]") {
    auto s = th::example("ex5.2");
    CHECK(s->act(1, th::V(*s, "v")) == th::V(*s, "w"));
    CHECK(s->act(1, th::E(*s, "e")) == th::E(*s, "f"));
    CHECK(s->act(0, th::P(*s, "e.f")) == th::P(*s, "e.f"));
    CHECK(s->act(1, th::P(*s, "e.f")) == th::P(*s, "f.e"));
    CHECK(s->act(1, th::S(*s, "{v}")) == th::S(*s, "{w}"));
    CHECK(s->cocycle(1, th::P(*s, "e.e.f")) == 1);
}

TEST_CASE("shifts act on ex5.1", "[action]") {
    auto s = th::example("ex5.1");
    const Universe& u = s->graph().universe();
    CHECK(s->act(3, Vertex{0, 2}) == Vertex{0, 5});
    CHECK(s->act(-2, Edge{0, 2}) == Edge{0, 0});
    CHECK(s->act(4, parse_set(u, "TAIL(v,0)")) == parse_set(u, "TAIL(v,4)"));
    CHECK(s->cocycle(7, Edge{0, 1}) == 7);
}

TEST_CASE("integer cocycles on the ex5.3 shape", "[action]") {
    // values frozen from tests/oracle/derive.py
    struct Row {
        const char* name;
        std::int64_t a, b;
    };
    for (Row r : {Row{"ex5.3-trivial", 2, -4}, Row{"ex5.3(3,-3)", 0, 0}, Row{"ex5.3(2,2)", 16, -16}}) {
        auto s = th::example(r.name);
        INFO(r.name);
        CHECK(s->cocycle(2, th::P(*s, "e0.e1.e0")) == r.a);
        CHECK(s->cocycle(-4, th::P(*s, "e1.e1")) == r.b);
    }
    auto s = th::example("ex5.3(2,1)");
    CHECK(s->cocycle(1, th::E(*s, "e0")) == 2);
    CHECK(s->cocycle(1, th::E(*s, "e1")) == 1);
    CHECK(s->cocycle(1, th::E(*s, "f")) == 1);
    CHECK(s->cocycle(2, th::E(*s, "e0")) == 3);  // phi(1, e1) + phi(1, e0)
    CHECK(s->cocycle(-1, th::E(*s, "e0")) == -1);
    CHECK(s->act(3, th::P(*s, "e0.e0")) == th::P(*s, "e1.e1"));  // phi(3, e0) = 5 is odd
}

TEST_CASE("action keys identify elements acting alike", "[action]") {
    auto trivial = th::example("ex5.3-trivial");
    CHECK(trivial->action_key(6) == trivial->action_key(0));
    CHECK(trivial->action_key(-3) == trivial->action_key(1));
    auto odd = th::example("ex5.3(2,1)");
    CHECK(odd->key_is_exact());
    CHECK(odd->action_key(6) == 6);
}

TEST_CASE("act_lasso follows the recursion", "[action]") {
    auto s = th::example("ex5.3(3,-3)");
    // 2.e0 = e0 and phi(2, e0) = 0, so the rest is untouched
    auto y = s->act_lasso(2, th::L(*s, "/e0"), 64);
    REQUIRE(y);
    CHECK(format_lasso(s->graph(), *y) == "/e0");
    // 1.f = f, then h = 1, 3, 3, ... and every odd h swaps e0 to e1
    auto z = s->act_lasso(1, th::L(*s, "f/e0"), 64);
    REQUIRE(z);
    CHECK(format_lasso(s->graph(), *z) == "f/e1");
    // with t0 + t1 = 3 the transported element grows without repeating
    auto g = th::example("ex5.3(2,1)");
    CHECK_FALSE(g->act_lasso(2, th::L(*g, "/e0"), 5).has_value());
}

TEST_CASE("validation reports the failing law", "[action]") {
    // swapping p and q moves s(p) = {a} to {b}, but s(q) = {a,b}
    auto bad_action = th::graph(R"({"name":"x","universe":{"kind":"finite","vertices":["a","b"]},
      "edges":[{"id":"p","range":"a","source":"FIN{a}"},{"id":"q","range":"b","source":"FIN{a,b}"}],
      "group":{"kind":"finite_table","elements":["0","1"],"table":[["0","1"],["1","0"]],"identity":"0","generators":["1"]},
      "action":{"kind":"permutation","generators":{"1":{"vertices":{"a":"b","b":"a"},"edges":{"p":"q","q":"p"}}}},
      "cocycle":"trivial"})");
    Verdict v = validate_system(*bad_action, 2);
    REQUIRE(v.is_fails());
    CHECK(v.witnesses.front().kind == "action_incompatible");

    auto bad_cocycle = th::graph(R"({"name":"y","universe":{"kind":"finite","vertices":["v","w"]},
      "edges":[{"id":"e","range":"v","source":"FIN{v,w}"},{"id":"f","range":"w","source":"FIN{v,w}"}],
      "group":{"kind":"finite_table","elements":["0","1"],"table":[["0","1"],["1","0"]],"identity":"0","generators":["1"]},
      "action":{"kind":"permutation","generators":{"1":{"vertices":{"v":"w","w":"v"},"edges":{"e":"f","f":"e"}}}},
      "cocycle":{"kind":"table","values":{"0":{"e":"0","f":"0"},"1":{"e":"0","f":"1"}}}})");
    Verdict c = validate_system(*bad_cocycle, 2);
    REQUIRE(c.is_fails());
    CHECK(c.witnesses.front().kind == "cocycle_law");
}

TEST_CASE("generator data must define a group action", "[action]") {
    // the generator of Z3 cannot act as a transposition
    CHECK_THROWS_AS(th::graph(R"({"name":"z","universe":{"kind":"finite","vertices":["a","b"]},
      "edges":[{"id":"p","range":"a","source":"FIN{a,b}"},{"id":"q","range":"b","source":"FIN{a,b}"}],
      "group":{"kind":"finite_table","elements":["0","1","2"],"table":[["0","1","2"],["1","2","0"],["2","0","1"]],"identity":"0","generators":["1"]},
      "action":{"kind":"permutation","generators":{"1":{"vertices":{"a":"b","b":"a"},"edges":{"p":"q","q":"p"}}}},
      "cocycle":"trivial"})"),
                    ParseError);
}

TEST_CASE("groups from tables", "[action]") {
    CHECK_THROWS_AS(Group::finite_table({"0", "1"}, {{0, 1}, {1, 1}}, 0, {1}, true), ParseError);
    Group z2 = Group::finite_table({"0", "1"}, {{0, 1}, {1, 0}}, 0, {1}, true);
    CHECK(z2.ball(3) == std::vector<GroupElem>{0, 1});
    CHECK(Group::integers().ball(2) == std::vector<GroupElem>{0, 1, -1, 2, -2});
    CHECK_THROWS_AS(Group::integers().multiply(INT64_MAX, 1), std::overflow_error);
}
