#include "helpers.hpp"

using namespace ssu;

namespace {

std::vector<std::string> cycle_names(const SelfSimilarSystem& s, const std::vector<GCycle>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(s.group().name(c.g) + ":" + format_path(s.graph(), c.gamma));
    return out;
}

Bounds short_paths(int len) {
    Bounds b;
    b.max_path_len = len;
    return b;
}

}  // namespace

TEST_CASE("G-cycles of ex5.2", "[analysis]") {
    auto s = th::example("ex5.2");
    auto one = find_g_cycles(*s, short_paths(1));
    CHECK(cycle_names(*s, one) == std::vector<std::string>{"0:e", "0:f", "1:e", "1:f"});
    for (const auto& c : one) CHECK(has_entrance(*s, c));
    // frozen from tests/oracle/derive.py
    CHECK(find_g_cycles(*s, short_paths(2)).size() == 12);
    CHECK(is_g_cycle(*s, 1, th::P(*s, "e.f")));
    CHECK_FALSE(is_g_cycle(*s, 0, Path::omega()));
}

TEST_CASE("entrances under both readings", "[analysis]") {
    auto s = th::example("ex5.2");
    GCycle c{1, th::P(*s, "e")};
    CHECK(has_entrance(*s, c));
    CHECK_FALSE(has_literal_entrance(*s, c));
    auto loop = th::graph(th::kSingleLoop);
    GCycle a{0, th::P(*loop, "a")};
    CHECK_FALSE(has_entrance(*loop, a));
    Verdict v = all_cycles_have_entrances(*loop, Bounds{});
    REQUIRE(v.is_fails());
    CHECK(v.witnesses.front().kind == "cycle_without_entrance");
    CHECK(all_cycles_have_entrances(*s, Bounds{}).is_holds());
    auto w = entrance_witness(*s, c);
    REQUIRE(w);
    CHECK(*w->get("edge") == "e");
    CHECK_FALSE(entrance_witness(*loop, a));
}

TEST_CASE("infinite paths generated by G-cycles", "[analysis]") {
    auto s = th::example("ex5.2");
    auto x = cycle_infinite_path(*s, {0, th::P(*s, "e")}, Bounds{});
    REQUIRE(x);
    CHECK(format_lasso(s->graph(), *x) == "/e");
    auto y = cycle_infinite_path(*s, {1, th::P(*s, "e")}, Bounds{});
    REQUIRE(y);
    CHECK(format_lasso(s->graph(), *y) == "/e.f");
}

TEST_CASE("G-cycles on ex5.3 obey the fixed-point law", "[analysis]") {
    auto s = th::example("ex5.3(2,1)");
    auto cs = find_g_cycles(*s, short_paths(1));
    REQUIRE_FALSE(cs.empty());
    // the (1, e0) cycle unwinds into e0.e1.e1.e0.e0.e0...
    GCycle c{1, th::P(*s, "e0")};
    REQUIRE(is_g_cycle(*s, c.g, c.gamma));
    Path::Storage acc;
    Path gam = c.gamma;
    GroupElem h = c.g;
    for (int i = 0; i < 6; ++i) {
        acc.insert(acc.end(), gam.edges().begin(), gam.edges().end());
        auto [next, nh] = s->act_with_cocycle(h, gam);
        gam = next;
        h = nh;
    }
    CHECK(format_path(s->graph(), Path(acc)) == "e0.e1.e1.e0.e0.e0");
}

TEST_CASE("G-cofinality", "[analysis]") {
    CHECK(check_g_cofinality(*th::example("ex5.2"), Bounds{}).is_holds());
    CHECK(check_g_cofinality(*th::example("ex5.1"), Bounds{}).is_holds());
    CHECK(check_g_cofinality(*th::graph(th::kSingleLoop), Bounds{}).is_holds());
    Verdict v = check_g_cofinality(*th::graph(th::kTwoLoops), Bounds{});
    REQUIRE(v.is_fails());
    CHECK(v.witnesses.front().kind == "cofinality_violation");
}

TEST_CASE("the three clauses of condition (*)", "[analysis]") {
    auto s = th::example("ex5.3-trivial");
    // 2 fixes every path into {v0,v1} when the cocycle is trivial
    CHECK(fixes_all_paths(*s, 2, th::S(*s, "{v0}"), Bounds{}).is_holds());
    CHECK(fixes_all_paths(*s, 1, th::S(*s, "{v0}"), Bounds{}).is_fails());
    Verdict sf = strongly_fixed_prefix_check(*s, 2, th::S(*s, "{v0}"), Bounds{});
    CHECK(sf.is_fails());
    CHECK(no_ultrafilter_check(*s, th::S(*s, "{v0}")).is_holds());
    auto z = th::example("ex5.1");
    Verdict nu = no_ultrafilter_check(*z, th::S(*z, "TAIL(v,0)"));
    REQUIRE(nu.is_fails());
    CHECK(nu.witnesses.front().kind == "free_ultrafilter");
    CHECK(no_ultrafilter_check(*z, th::S(*z, "FIN{v[1],v[2]}")).is_holds());
}

TEST_CASE("condition (*) on the ex5.3 family", "[analysis]") {
    auto trivial = th::example("ex5.3-trivial");
    Verdict v = check_condition_star(*trivial, Bounds{});
    REQUIRE(v.is_fails());
    const Witness& w = v.witnesses.front();
    CHECK(w.kind == "condition_star_violation");
    CHECK(*w.get("g") == "2");
    CHECK(*w.get("A") == "{v0}");
    CHECK(*w.get("clause") == "strongly_fixed_prefix");
    CHECK(check_condition_star(*th::example("ex5.3(3,-3)"), Bounds{}).is_holds());
    CHECK(check_condition_star(*th::example("ex5.3(2,1)"), Bounds{}).is_holds());
    CHECK(check_condition_star(*th::example("ex5.3(0,1)"), Bounds{}).is_holds());
}

TEST_CASE("the parity criterion agrees with condition (*)", "[analysis]") {
    struct Row {
        const char* name;
        bool expect;
    };
    for (Row r : {Row{"ex5.3-trivial", false}, Row{"ex5.3(3,-3)", true}, Row{"ex5.3(2,1)", true},
                  Row{"ex5.3(0,1)", true}}) {
        auto s = th::example(r.name);
        INFO(r.name);
        CHECK(parity_criterion_ex53(*s) == r.expect);
        CHECK(check_condition_star(*s, Bounds{}).is_holds() == r.expect);
    }
    CHECK_THROWS_AS(detect_ex53_shape(*th::example("ex5.2")), ShapeMismatch);
    Ex53Shape sh = detect_ex53_shape(*th::example("ex5.3(3,-3)"));
    CHECK(sh.t0 == 3);
    CHECK(sh.t1 == -3);
}

TEST_CASE("the closed form for phi(n, alpha)", "[analysis]") {
    // frozen from tests/oracle/derive.py
    struct Row {
        const char* name;
        std::int64_t a, b;
    };
    for (Row r : {Row{"ex5.3-trivial", 2, -4}, Row{"ex5.3(3,-3)", 0, 0}, Row{"ex5.3(2,2)", 16, -16}}) {
        auto s = th::example(r.name);
        INFO(r.name);
        auto x = phi_closed_form(*s, 2, th::P(*s, "e0.e1.e0"), Bounds{});
        CHECK(x.premise_met);
        CHECK(x.derived == r.a);
        CHECK(x.equal);
        auto y = phi_closed_form(*s, -4, th::P(*s, "e1.e1"), Bounds{});
        CHECK(y.derived == r.b);
        CHECK(y.equal);
    }
    auto s = th::example("ex5.3(2,2)");
    CHECK(phi_closed_form(*s, 2, th::P(*s, "e0.e1.e0"), Bounds{}).formula == "16");
    CHECK_THROWS_AS(phi_closed_form(*s, 3, th::P(*s, "e0"), Bounds{}), std::invalid_argument);
    CHECK_THROWS_AS(phi_closed_form(*s, 2, th::P(*s, "f"), Bounds{}), std::invalid_argument);
}

TEST_CASE("the full analysis of the bundled examples", "[analysis]") {
    auto r1 = analyze(*th::example("ex5.1"), Bounds{});
    CHECK(r1.minimal.is_holds());
    CHECK(r1.effective.is_holds());
    CHECK_FALSE(r1.minimal.witnesses.empty());
    CHECK_FALSE(r1.cycles.empty());

    auto r2 = analyze(*th::example("ex5.2"), short_paths(1));
    CHECK(r2.cofinality.is_holds());
    CHECK(r2.condition_star.is_holds());
    REQUIRE(r2.simple);
    CHECK(r2.simple->is_holds());
    CHECK(r2.cycles.size() == 4);
    CHECK(r2.cycle_has_entrance == std::vector<bool>(4, true));

    auto r3 = analyze(*th::example("ex5.3-trivial"), Bounds{});
    CHECK(r3.minimal.is_holds());
    CHECK(r3.effective.is_fails());
    CHECK_FALSE(r3.simple);
    CHECK_FALSE(r3.simple_reason.empty());

    auto r4 = analyze(*th::example("ex5.3(3,-3)"), Bounds{});
    CHECK(r4.effective.is_holds());
    CHECK_FALSE(r4.simple);  // nontrivial cocycle
}

TEST_CASE("results do not depend on the thread count", "[analysis]") {
    for (const std::string name : {"ex5.2", "ex5.3-trivial", "ex5.3(3,-3)"}) {
        auto s = th::example(name);
        INFO(name);
        Verdict a = check_condition_star(*s, Bounds{}, 1);
        Verdict b = check_condition_star(*s, Bounds{}, 3);
        CHECK(a.status == b.status);
        CHECK(a.witnesses == b.witnesses);
        CHECK(find_g_cycles(*s, Bounds{}, 1) == find_g_cycles(*s, Bounds{}, 4));
    }
}
