#include "ssu/document.hpp"

#include "ssu/errors.hpp"
#include "ssu/notation.hpp"

#include <map>
#include <regex>
#include <set>

namespace ssu {

namespace detail {
// Generated at configure time from data/instances.
const std::map<std::string, std::string>& embedded_instances();
}

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return obj.at(key);
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

std::int64_t integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(str(x, where));
    return out;
}

std::shared_ptr<const Universe> load_universe(const Json& j) {
    std::string kind = str(field(j, "kind", "universe"), "universe.kind");
    if (kind == "finite") return Universe::finite(string_list(field(j, "vertices", "universe"), "universe.vertices"));
    if (kind == "int_indexed")
        return Universe::int_indexed(string_list(field(j, "families", "universe"), "universe.families"));
    throw ParseError("universe.kind must be 'finite' or 'int_indexed'");
}

Vertex load_range(const Universe& u, const Json& j, const std::string& edge) {
    std::string text;
    if (j.is_array()) {
        if (j.size() != 1) throw NonSingletonRange("edge '" + edge + "' has a range of size " + std::to_string(j.size()));
        text = str(j[0], "range of " + edge);
    } else {
        text = str(j, "range of " + edge);
    }
    if (auto v = u.find_vertex(text)) return *v;
    VertexSet r = parse_set(u, text);
    auto single = r.as_singleton();
    if (!single) throw NonSingletonRange("edge '" + edge + "' has range " + text);
    return *single;
}

std::vector<EdgeFamily> load_edges(const std::shared_ptr<const Universe>& u, const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("edges: expected a nonempty list");
    std::vector<EdgeFamily> out;
    for (const auto& e : j) {
        EdgeFamily f;
        if (!u->is_finite()) {
            f.indexed = true;
            f.name = str(field(e, "family", "edge family"), "edge family");
            const Json& rule = field(e, "range_rule", f.name);
            auto rf = u->find_family(str(field(rule, "family", f.name), f.name));
            if (!rf) throw ParseError("edge family '" + f.name + "': unknown range family");
            f.range_family = *rf;
            f.range_offset = rule.contains("offset") ? integer(rule.at("offset"), f.name) : 0;
            f.source_expr = str(field(e, "source_expr", f.name), f.name);
            f.source = parse_set(*u, f.source_expr, true);
        } else {
            f.name = str(field(e, "id", "edge"), "edge");
            if (f.name.empty() || f.name == "w" || f.name.find_first_of(".;/[]() ") != std::string::npos)
                throw ParseError("edge id '" + f.name + "' is reserved or contains separators");
            f.range = load_range(*u, field(e, "range", f.name), f.name);
            f.source_expr = str(field(e, "source", f.name), f.name);
            f.source = parse_set(*u, f.source_expr);
        }
        out.push_back(std::move(f));
    }
    return out;
}

Group load_group(const Json& j) {
    std::string kind = str(field(j, "kind", "group"), "group.kind");
    bool amenable = j.contains("amenable") ? j.at("amenable").get<bool>() : false;
    if (kind == "integers") return Group::integers(amenable);
    if (kind != "finite_table") throw ParseError("group.kind must be 'integers' or 'finite_table'");
    auto names = string_list(field(j, "elements", "group"), "group.elements");
    auto index = [&](const std::string& n) -> std::uint32_t {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) throw ParseError("group: unknown element '" + n + "'");
        return static_cast<std::uint32_t>(it - names.begin());
    };
    std::vector<std::vector<std::uint32_t>> table;
    const Json& t = field(j, "table", "group");
    if (!t.is_array()) throw ParseError("group.table: expected a list of rows");
    for (const auto& row : t) {
        std::vector<std::uint32_t> r;
        for (const auto& x : string_list(row, "group.table")) r.push_back(index(x));
        table.push_back(std::move(r));
    }
    std::uint32_t identity = index(str(field(j, "identity", "group"), "group.identity"));
    std::vector<std::uint32_t> gens;
    if (j.contains("generators"))
        for (const auto& x : string_list(j.at("generators"), "group.generators")) gens.push_back(index(x));
    return Group::finite_table(names, std::move(table), identity, std::move(gens), amenable);
}

ActionData load_action(const Json& j, const Ultragraph& U, const Group& G) {
    ActionData a;
    const Universe& u = U.universe();
    std::string kind = str(field(j, "kind", "action"), "action.kind");
    if (U.indexed()) {
        if (kind != "shift") throw ParseError("indexed universes need a 'shift' action");
        a.vertex_shift.assign(u.size(), 0);
        a.edge_shift.assign(U.family_count(), 0);
        if (j.contains("vertex_shifts"))
            for (const auto& [k, v] : j.at("vertex_shifts").items()) {
                auto f = u.find_family(k);
                if (!f) throw ParseError("action: unknown vertex family '" + k + "'");
                a.vertex_shift[*f] = integer(v, "vertex shift");
            }
        if (j.contains("edge_shifts"))
            for (const auto& [k, v] : j.at("edge_shifts").items()) {
                bool found = false;
                for (std::uint32_t f = 0; f < U.family_count(); ++f)
                    if (U.family(f).name == k) {
                        a.edge_shift[f] = integer(v, "edge shift");
                        found = true;
                    }
                if (!found) throw ParseError("action: unknown edge family '" + k + "'");
            }
        return a;
    }
    if (kind != "permutation") throw ParseError("finite universes need a 'permutation' action");
    const Json gens = j.contains("generators") ? j.at("generators") : Json::object();
    std::set<std::string> given;
    for (const auto& [k, v] : gens.items()) given.insert(k);
    for (GroupElem g : G.generators()) {
        std::string gname = G.name(g);
        std::vector<std::uint32_t> vp(u.size()), ep(U.family_count());
        for (std::uint32_t i = 0; i < vp.size(); ++i) vp[i] = i;
        for (std::uint32_t i = 0; i < ep.size(); ++i) ep[i] = i;
        if (!gens.contains(gname)) throw ParseError("action: no permutation for generator '" + gname + "'");
        given.erase(gname);
        const Json& spec = gens.at(gname);
        if (spec.contains("vertices"))
            for (const auto& [k, v] : spec.at("vertices").items()) {
                auto from = u.find_vertex(k), to = u.find_vertex(str(v, "action"));
                if (!from || !to) throw ParseError("action: unknown vertex in generator '" + gname + "'");
                vp[static_cast<std::size_t>(from->index)] = static_cast<std::uint32_t>(to->index);
            }
        if (spec.contains("edges"))
            for (const auto& [k, v] : spec.at("edges").items()) {
                auto from = U.find_edge(k), to = U.find_edge(str(v, "action"));
                if (!from || !to) throw ParseError("action: unknown edge in generator '" + gname + "'");
                ep[from->family] = to->family;
            }
        a.generator_vertex_perm.push_back(std::move(vp));
        a.generator_edge_perm.push_back(std::move(ep));
    }
    if (!given.empty()) throw ParseError("action: '" + *given.begin() + "' is not a group generator");
    return a;
}

CocycleData load_cocycle(const Json& j, const Ultragraph& U, const Group& G) {
    CocycleData c;
    if (j.is_string()) {
        if (j.get<std::string>() != "trivial") throw ParseError("cocycle: only the 'trivial' shorthand exists");
        return c;
    }
    std::string kind = str(field(j, "kind", "cocycle"), "cocycle.kind");
    auto family_of = [&](const std::string& name) -> std::uint32_t {
        for (std::uint32_t f = 0; f < U.family_count(); ++f)
            if (U.family(f).name == name) return f;
        throw ParseError("cocycle: unknown edge '" + name + "'");
    };
    const Json& values = field(j, "values", "cocycle");
    if (kind == "trivial") return c;
    if (kind == "generator_values") {
        if (!G.is_integers()) throw ParseError("generator_values cocycles need the integer group");
        c.kind = CocycleData::Kind::GeneratorValues;
        c.generator_values.assign(U.family_count(), 1);
        std::set<std::uint32_t> seen;
        for (const auto& [k, v] : values.items()) {
            auto f = family_of(k);
            seen.insert(f);
            c.generator_values[f] = integer(v, "cocycle value");
        }
        if (seen.size() != U.family_count()) throw ParseError("cocycle: generator_values must list every edge");
        return c;
    }
    if (kind == "table") {
        if (G.is_integers()) throw ParseError("cocycle tables need a finite group");
        c.kind = CocycleData::Kind::Table;
        c.table.assign(G.order(), std::vector<GroupElem>(U.family_count(), -1));
        for (const auto& [gname, row] : values.items()) {
            GroupElem g = parse_group_elem(G, gname);
            for (const auto& [ename, h] : row.items()) c.table[g][family_of(ename)] = parse_group_elem(G, str(h, "cocycle"));
        }
        for (const auto& row : c.table)
            for (auto x : row)
                if (x < 0) throw ParseError("cocycle table must be fully explicit");
        return c;
    }
    throw ParseError("cocycle.kind must be 'trivial', 'table' or 'generator_values'");
}

}  // namespace

SystemPtr load_system(const Json& doc) {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    static const std::set<std::string> known{"name", "universe", "edges", "group", "action", "cocycle"};
    for (const auto& [k, v] : doc.items())
        if (!known.count(k)) throw ParseError("unknown top-level field '" + k + "'");
    try {
        auto u = load_universe(field(doc, "universe", "document"));
        Ultragraph U(u, load_edges(u, field(doc, "edges", "document")));
        Group G = load_group(field(doc, "group", "document"));
        Json action = doc.contains("action") ? doc.at("action")
                                             : Json{{"kind", U.indexed() ? "shift" : "permutation"}};
        ActionData a = load_action(action, U, G);
        CocycleData c = load_cocycle(doc.contains("cocycle") ? doc.at("cocycle") : Json("trivial"), U, G);
        std::string name = doc.contains("name") ? str(doc.at("name"), "name") : "unnamed";
        return std::make_shared<const SelfSimilarSystem>(name, std::move(U), std::move(G), std::move(a), std::move(c));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

SystemPtr load_system_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return load_system(doc);
}

Json system_to_document(const SelfSimilarSystem& sys) {
    const Ultragraph& U = sys.graph();
    const Universe& u = U.universe();
    const Group& G = sys.group();
    Json doc;
    doc["name"] = sys.name();
    if (u.is_finite())
        doc["universe"] = {{"kind", "finite"}, {"vertices", u.names()}};
    else
        doc["universe"] = {{"kind", "int_indexed"}, {"families", u.names()}};

    Json edges = Json::array();
    for (std::uint32_t f = 0; f < U.family_count(); ++f) {
        const EdgeFamily& fam = U.family(f);
        if (fam.indexed)
            edges.push_back({{"family", fam.name},
                             {"range_rule", {{"family", u.names()[fam.range_family]}, {"offset", fam.range_offset}}},
                             {"source_expr", fam.source_expr}});
        else
            edges.push_back({{"id", fam.name},
                             {"range", u.vertex_name(fam.range)},
                             {"source", format_set(u, fam.source, true)}});
    }
    doc["edges"] = edges;

    if (G.is_integers()) {
        doc["group"] = {{"kind", "integers"}, {"amenable", G.amenable()}};
    } else {
        Json table = Json::array();
        for (GroupElem a : G.elements()) {
            Json row = Json::array();
            for (GroupElem b : G.elements()) row.push_back(G.name(G.multiply(a, b)));
            table.push_back(row);
        }
        Json gens = Json::array();
        for (GroupElem g : G.generators()) gens.push_back(G.name(g));
        doc["group"] = {{"kind", "finite_table"}, {"elements", G.names()},   {"table", table},
                        {"identity", G.name(G.identity())}, {"generators", gens}, {"amenable", G.amenable()}};
    }

    const ActionData& a = sys.action_data();
    if (U.indexed()) {
        Json vs = Json::object(), es = Json::object();
        for (std::uint32_t f = 0; f < u.size(); ++f) vs[u.names()[f]] = a.vertex_shift[f];
        for (std::uint32_t f = 0; f < U.family_count(); ++f) es[U.family(f).name] = a.edge_shift[f];
        doc["action"] = {{"kind", "shift"}, {"vertex_shifts", vs}, {"edge_shifts", es}};
    } else {
        Json gens = Json::object();
        for (std::size_t k = 0; k < G.generators().size(); ++k) {
            Json vs = Json::object(), es = Json::object();
            for (std::uint32_t i = 0; i < u.size(); ++i)
                if (a.generator_vertex_perm[k][i] != i) vs[u.names()[i]] = u.names()[a.generator_vertex_perm[k][i]];
            for (std::uint32_t i = 0; i < U.family_count(); ++i)
                if (a.generator_edge_perm[k][i] != i) es[U.family(i).name] = U.family(a.generator_edge_perm[k][i]).name;
            gens[G.name(G.generators()[k])] = {{"vertices", vs}, {"edges", es}};
        }
        doc["action"] = {{"kind", "permutation"}, {"generators", gens}};
    }

    const CocycleData& c = sys.cocycle_data();
    switch (c.kind) {
        case CocycleData::Kind::Trivial: doc["cocycle"] = "trivial"; break;
        case CocycleData::Kind::GeneratorValues: {
            Json vals = Json::object();
            for (std::uint32_t f = 0; f < U.family_count(); ++f) vals[U.family(f).name] = c.generator_values[f];
            doc["cocycle"] = {{"kind", "generator_values"}, {"values", vals}};
            break;
        }
        case CocycleData::Kind::Table: {
            Json vals = Json::object();
            for (GroupElem g : G.elements())
                for (std::uint32_t f = 0; f < U.family_count(); ++f)
                    vals[G.name(g)][U.family(f).name] = G.name(c.table[g][f]);
            doc["cocycle"] = {{"kind", "table"}, {"values", vals}};
            break;
        }
    }
    return doc;
}

std::vector<Vertex> vertices_emitting_nothing(const SelfSimilarSystem& sys) {
    const Ultragraph& U = sys.graph();
    if (U.indexed()) {
        VertexSet covered = U.empty_set();
        for (std::uint32_t f = 0; f < U.family_count(); ++f) covered = covered.unite(U.family(f).source);
        // translation invariance: a family is covered everywhere iff some source meets it
        std::vector<Vertex> out;
        for (std::uint32_t vf = 0; vf < U.universe().size(); ++vf)
            if (covered.family_part(vf).empty()) out.push_back(Vertex{vf, 0});
        return out;
    }
    VertexSet covered = U.empty_set();
    for (const Edge& e : U.edges()) covered = covered.unite(U.source(e));
    return U.full().minus(covered).members();
}

std::vector<std::string> bundled_example_names() { return {"ex5.1", "ex5.2", "ex5.3-trivial", "ex5.3(t0,t1)"}; }

std::string bundled_example(const std::string& name) {
    const auto& files = detail::embedded_instances();
    static const std::map<std::string, std::string> fixed{
        {"ex5.1", "ex5_1"}, {"ex5.2", "ex5_2"}, {"ex5.3-trivial", "ex5_3_trivial"}};
    if (auto it = fixed.find(name); it != fixed.end()) return files.at(it->second);
    static const std::regex param(R"(ex5\.3\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::smatch m;
    if (std::regex_match(name, m, param)) {
        Json doc = Json::parse(files.at("ex5_3_trivial"));
        std::int64_t t0 = std::stoll(m[1]), t1 = std::stoll(m[2]);
        doc["name"] = "ex5.3(" + std::to_string(t0) + "," + std::to_string(t1) + ")";
        doc["cocycle"] = {{"kind", "generator_values"}, {"values", {{"e0", t0}, {"e1", t1}, {"f", 1}}}};
        return doc.dump(2) + "\n";
    }
    throw UnknownExample("no bundled example named '" + name + "'");
}

}  // namespace ssu
