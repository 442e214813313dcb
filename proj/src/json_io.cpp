#include "thue/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thue {

namespace {

int parse_id_key(const std::string& key) {
    try {
        size_t pos = 0;
        int id = std::stoi(key, &pos);
        if (pos != key.size() || id < 0)
            throw ParseError("bad id key '" + key + "'");
        return id;
    } catch (const std::exception&) {
        throw ParseError("bad id key '" + key + "'");
    }
}

// Two-pass colour reader: integer colours keep their value, strings are
// interned in first-appearance order above the largest integer seen.
struct ColourInterner {
    int next_id = 0;
    std::map<std::string, Colour> names;

    void scan(const json& v) {
        if (v.is_number_integer()) {
            int x = v.get<int>();
            if (x < 0)
                throw ParseError("negative colour value");
            next_id = std::max(next_id, x + 1);
        } else if (!v.is_string()) {
            throw ParseError("colour must be an integer or a string");
        }
    }
    Colour resolve(const json& v) {
        if (v.is_number_integer())
            return v.get<int>();
        auto [it, fresh] = names.insert({v.get<std::string>(), next_id});
        if (fresh)
            ++next_id;
        return it->second;
    }
};

} // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        j["edges"].push_back({g.edge(e).first, g.edge(e).second});
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges'");
    std::vector<int> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw ParseError("vertex ids must be integers");
        vs.push_back(v.get<int>());
    }
    std::sort(vs.begin(), vs.end());
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != static_cast<int>(i))
            throw ParseError("vertex ids must be dense 0..n-1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair [u,v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    try {
        return Graph(static_cast<int>(vs.size()), std::move(edges));
    } catch (const InvalidGraphError& err) {
        throw ParseError(std::string("invalid graph: ") + err.what());
    }
}

json colouring_to_json(const TotalColouring& c) {
    json j;
    j["vertex_colours"] = json::object();
    for (size_t v = 0; v < c.vertex_colours.size(); ++v)
        if (c.vertex_colours[v] != kNoColour)
            j["vertex_colours"][std::to_string(v)] = c.vertex_colours[v];
    j["edge_colours"] = json::object();
    for (size_t e = 0; e < c.edge_colours.size(); ++e)
        if (c.edge_colours[e] != kNoColour)
            j["edge_colours"][std::to_string(e)] = c.edge_colours[e];
    return j;
}

TotalColouring colouring_from_json(const json& j, const Graph& g) {
    if (!j.is_object())
        throw ParseError("colouring JSON must be an object");
    TotalColouring c;
    c.vertex_colours.assign(g.vertex_count(), kNoColour);
    c.edge_colours.assign(g.edge_count(), kNoColour);
    ColourInterner interner;
    const json empty = json::object();
    const json& vc = j.contains("vertex_colours") ? j["vertex_colours"] : empty;
    const json& ec = j.contains("edge_colours") ? j["edge_colours"] : empty;
    for (const auto& [key, val] : vc.items()) {
        (void)key;
        interner.scan(val);
    }
    for (const auto& [key, val] : ec.items()) {
        (void)key;
        interner.scan(val);
    }
    // resolve in id order so string interning is reproducible
    std::map<int, const json*> vmap, emap;
    for (const auto& [key, val] : vc.items())
        vmap[parse_id_key(key)] = &val;
    for (const auto& [key, val] : ec.items())
        emap[parse_id_key(key)] = &val;
    for (const auto& [id, val] : vmap) {
        if (id >= g.vertex_count())
            throw ParseError("vertex id out of range in colouring");
        c.vertex_colours[id] = interner.resolve(*val);
    }
    for (const auto& [id, val] : emap) {
        if (id >= g.edge_count())
            throw ParseError("edge id out of range in colouring");
        c.edge_colours[id] = interner.resolve(*val);
    }
    return c;
}

json sequence_to_json(const ColourSequence& s) {
    json j = json::array();
    for (Colour c : s)
        j.push_back(c);
    return j;
}

ColourSequence sequence_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("sequence JSON must be an array");
    ColourInterner interner;
    for (const auto& v : j)
        interner.scan(v);
    ColourSequence s;
    for (const auto& v : j)
        s.push_back(interner.resolve(v));
    return s;
}

json witness_to_json(const Witness& w) {
    json j;
    j["kind"] = witness_kind_name(w.kind);
    j["path"] = json::array();
    for (const auto& el : w.path.elements)
        j["path"].push_back({el.kind == ElementKind::Vertex ? "v" : "e", el.id});
    j["square"] = {{"start", w.square.start}, {"half_length", w.square.half_length}};
    return j;
}

json bounds_to_json(const BoundsReport& r) {
    json j;
    j["bounds"] = json::array();
    for (const auto& e : r.entries)
        j["bounds"].push_back({{"parameter", e.parameter},
                               {"kind", e.is_upper ? "upper" : "lower"},
                               {"value", e.value},
                               {"theorem", e.theorem},
                               {"note", e.note},
                               {"assumption", e.assumption}});
    j["inconsistencies"] = r.inconsistencies;
    return j;
}

std::string bounds_to_csv(const BoundsReport& r) {
    std::ostringstream os;
    os << "parameter,kind,value,theorem,note\n";
    for (const auto& e : r.entries)
        os << e.parameter << ',' << (e.is_upper ? "upper" : "lower") << ',' << e.value << ','
           << e.theorem << ",\"" << e.note << "\"\n";
    return os.str();
}

json lll_report_to_json(const LllReport& r) {
    json j;
    j["delta"] = r.delta;
    j["t_max"] = r.t_max;
    j["weights"] = {{"a", r.weights.a},
                    {"b", r.weights.b},
                    {"c", r.weights.c},
                    {"list_size", r.weights.list_size}};
    j["exponents"] = {{"num1", r.expo_num1},
                      {"num2", r.expo_num2},
                      {"num3", r.expo_num3},
                      {"den", r.expo_den}};
    j["constants"] = {{"rhs1", r.const1}, {"rhs2", r.const2}, {"rhs3", r.const3}};
    j["reference_constants"] = {{"rhs1", r.reference_const1},
                                {"rhs2", r.reference_const2},
                                {"rhs3", r.reference_const3}};
    j["rhs3_note"] = r.rhs3_note;
    j["all_margins_positive"] = r.all_margins_positive;
    j["violations"] = r.violations;
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"t", row.t},
                             {"probability", row.probability},
                             {"rhs1", row.rhs1},
                             {"rhs2", row.rhs2},
                             {"rhs3", row.rhs3},
                             {"margin1", row.margin1},
                             {"margin2", row.margin2},
                             {"margin3", row.margin3}});
    return j;
}

std::string lll_report_to_csv(const LllReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "t,probability,rhs1,rhs2,rhs3,margin1,margin2,margin3\n";
    for (const auto& row : r.rows)
        os << row.t << ',' << row.probability << ',' << row.rhs1 << ',' << row.rhs2 << ','
           << row.rhs3 << ',' << row.margin1 << ',' << row.margin2 << ',' << row.margin3 << '\n';
    return os.str();
}

ListAssignment list_assignment_from_json(const json& j, const Graph& g) {
    if (!j.is_object())
        throw ParseError("list assignment JSON must be an object");
    ListAssignment la;
    la.vertex_lists.assign(g.vertex_count(), {});
    la.edge_lists.assign(g.edge_count(), {});
    auto read = [&](const json& table, std::vector<std::vector<Colour>>& out, int limit,
                    const char* what) {
        for (const auto& [key, val] : table.items()) {
            int id = parse_id_key(key);
            if (id >= limit)
                throw ParseError(std::string(what) + " id out of range in list assignment");
            if (!val.is_array() || val.empty())
                throw ParseError("each colour list must be a non-empty array");
            for (const auto& v : val) {
                if (!v.is_number_integer() || v.get<int>() < 0)
                    throw ParseError("list colours must be non-negative integers");
                out[id].push_back(v.get<int>());
            }
        }
    };
    if (j.contains("vertex_lists"))
        read(j["vertex_lists"], la.vertex_lists, g.vertex_count(), "vertex");
    if (j.contains("edge_lists"))
        read(j["edge_lists"], la.edge_lists, g.edge_count(), "edge");
    for (const auto& l : la.vertex_lists)
        if (l.empty())
            throw ParseError("every vertex needs a non-empty colour list");
    for (const auto& l : la.edge_lists)
        if (l.empty())
            throw ParseError("every edge needs a non-empty colour list");
    return la;
}

json solve_result_to_json(const SolveResult& r, Mode mode) {
    json j;
    j["mode"] = mode_name(mode);
    if (r.solved) {
        j["value"] = r.value;
        j["certificate"] = colouring_to_json(r.certificate);
    } else {
        j["exhausted"] = true;
        j["lower"] = r.lower;
    }
    j["nodes_expanded"] = r.nodes;
    j["time_ms"] = r.time_ms;
    return j;
}

} // namespace thue
