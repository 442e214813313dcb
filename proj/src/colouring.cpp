#include "thue/colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace thue {

int TotalColouring::colours_used() const {
    std::set<Colour> s;
    for (Colour c : vertex_colours)
        if (c != kNoColour)
            s.insert(c);
    for (Colour c : edge_colours)
        if (c != kNoColour)
            s.insert(c);
    return static_cast<int>(s.size());
}

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::VertexSeq: return "vertex-seq";
    case WitnessKind::EdgeSeq: return "edge-seq";
    case WitnessKind::TotalSeq: return "total-seq";
    case WitnessKind::ProperViolation: return "proper-violation";
    }
    return "?";
}

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::Vertex: return "vertex";
    case Mode::Edge: return "edge";
    case Mode::WeakTotal: return "weak-total";
    case Mode::StrongTotal: return "strong-total";
    }
    return "?";
}

std::optional<Mode> mode_from_name(const std::string& s) {
    if (s == "vertex") return Mode::Vertex;
    if (s == "edge") return Mode::Edge;
    if (s == "weak-total") return Mode::WeakTotal;
    if (s == "strong-total") return Mode::StrongTotal;
    return std::nullopt;
}

namespace {

void require_vertex_colours(const Graph& g, const std::vector<Colour>& vc) {
    if (static_cast<int>(vc.size()) != g.vertex_count())
        throw IncompleteColouringError("vertex colour table size mismatch");
    for (Colour c : vc)
        if (c < 0)
            throw IncompleteColouringError("uncoloured vertex");
}

void require_edge_colours(const Graph& g, const std::vector<Colour>& ec) {
    if (static_cast<int>(ec.size()) != g.edge_count())
        throw IncompleteColouringError("edge colour table size mismatch");
    for (Colour c : ec)
        if (c < 0)
            throw IncompleteColouringError("uncoloured edge");
}

void require_total(const Graph& g, const TotalColouring& c) {
    require_vertex_colours(g, c.vertex_colours);
    require_edge_colours(g, c.edge_colours);
}

ColourSequence extract(const Graph&, const TotalColouring& c, const ElementPath& p,
                       WitnessKind kind) {
    ColourSequence seq;
    auto colour_of = [&](const ElementRef& el) {
        return el.kind == ElementKind::Vertex ? c.vertex_colours[el.id] : c.edge_colours[el.id];
    };
    switch (kind) {
    case WitnessKind::VertexSeq:
        for (const auto& el : p.elements)
            if (el.kind == ElementKind::Vertex)
                seq.push_back(colour_of(el));
        break;
    case WitnessKind::EdgeSeq:
        for (const auto& el : p.elements)
            if (el.kind == ElementKind::Edge)
                seq.push_back(colour_of(el));
        break;
    case WitnessKind::TotalSeq:
        for (const auto& el : p.elements)
            seq.push_back(colour_of(el));
        break;
    case WitnessKind::ProperViolation:
        seq.push_back(colour_of(p.elements.front()));
        seq.push_back(colour_of(p.elements.back()));
        break;
    }
    return seq;
}

// Detection per enumerated path. A square in any path's sequence shows up as
// a square spanning the whole sequence of its minimal enclosing path (all but
// at most one element at each end for total sequences), and that minimal path
// is itself enumerated, so checking these spans over all paths is complete.
struct SpanChecks {
    const std::vector<Colour>& vc;
    const std::vector<Colour>& ec;

    bool whole_vertex_square(const std::vector<VertexId>& pv) const {
        size_t len = pv.size();
        if (len % 2 != 0)
            return false;
        size_t h = len / 2;
        for (size_t i = 0; i < h; ++i)
            if (vc[pv[i]] != vc[pv[i + h]])
                return false;
        return true;
    }
    bool whole_edge_square(const std::vector<EdgeId>& pe) const {
        size_t len = pe.size();
        if (len == 0 || len % 2 != 0)
            return false;
        size_t h = len / 2;
        for (size_t i = 0; i < h; ++i)
            if (ec[pe[i]] != ec[pe[i + h]])
                return false;
        return true;
    }
    // alternating sequence has odd length 2k+1; candidate squares span
    // [0, 2k) or [1, 2k+1)
    bool end_trimmed_total_square(const std::vector<VertexId>& pv,
                                  const std::vector<EdgeId>& pe) const {
        size_t k = pe.size();
        if (k == 0)
            return false;
        auto col = [&](size_t pos) {
            return pos % 2 == 0 ? vc[pv[pos / 2]] : ec[pe[pos / 2]];
        };
        for (size_t a = 0; a <= 1; ++a) {
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i)
                ok = col(a + i) == col(a + k + i);
            if (ok)
                return true;
        }
        return false;
    }
};

Witness make_witness(const Graph& g, const std::vector<Colour>& vc,
                     const std::vector<Colour>& ec, WitnessKind kind, ElementPath path) {
    TotalColouring c{vc, ec};
    ColourSequence seq = extract(g, c, path, kind);
    auto sq = contains_square(seq);
    return Witness{kind, std::move(path), *sq};
}

} // namespace

ColourSequence total_sequence(const Graph& g, const TotalColouring& c, const ElementPath& p) {
    require_total(g, c);
    return extract(g, c, p, WitnessKind::TotalSeq);
}

std::optional<Witness> find_square_witness(const Graph& g,
                                           const std::vector<Colour>& vertex_colours,
                                           const std::vector<Colour>& edge_colours,
                                           WitnessKind kind,
                                           std::optional<int> max_elements) {
    SpanChecks sc{vertex_colours, edge_colours};
    PathEnumerator en(g, max_elements);
    while (en.next()) {
        bool hit = false;
        switch (kind) {
        case WitnessKind::VertexSeq:
            hit = sc.whole_vertex_square(en.vertices());
            break;
        case WitnessKind::EdgeSeq:
            hit = sc.whole_edge_square(en.edges());
            break;
        case WitnessKind::TotalSeq:
            hit = sc.end_trimmed_total_square(en.vertices(), en.edges());
            break;
        case WitnessKind::ProperViolation:
            break;
        }
        if (hit)
            return make_witness(g, vertex_colours, edge_colours, kind, en.to_element_path());
    }
    return std::nullopt;
}

std::optional<Witness> is_proper_total(const Graph& g, const TotalColouring& c) {
    require_total(g, c);
    const auto& vc = c.vertex_colours;
    const auto& ec = c.edge_colours;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (vc[u] == vc[v]) {
            ElementPath p;
            p.elements = {{ElementKind::Vertex, u}, {ElementKind::Edge, e}, {ElementKind::Vertex, v}};
            return Witness{WitnessKind::ProperViolation, std::move(p), Square{0, 1}};
        }
        if (ec[e] == vc[u]) {
            ElementPath p;
            p.elements = {{ElementKind::Vertex, u}, {ElementKind::Edge, e}};
            return Witness{WitnessKind::ProperViolation, std::move(p), Square{0, 1}};
        }
        if (ec[e] == vc[v]) {
            ElementPath p;
            p.elements = {{ElementKind::Edge, e}, {ElementKind::Vertex, v}};
            return Witness{WitnessKind::ProperViolation, std::move(p), Square{0, 1}};
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (ec[inc[i].edge] == ec[inc[j].edge]) {
                    ElementPath p;
                    p.elements = {{ElementKind::Edge, inc[i].edge},
                                  {ElementKind::Vertex, v},
                                  {ElementKind::Edge, inc[j].edge}};
                    return Witness{WitnessKind::ProperViolation, std::move(p), Square{0, 1}};
                }
    }
    return std::nullopt;
}

std::optional<Witness> is_nonrepetitive_vertex(const Graph& g,
                                               const std::vector<Colour>& vertex_colours) {
    require_vertex_colours(g, vertex_colours);
    return find_square_witness(g, vertex_colours, {}, WitnessKind::VertexSeq);
}

std::optional<Witness> is_nonrepetitive_edge(const Graph& g,
                                             const std::vector<Colour>& edge_colours) {
    require_edge_colours(g, edge_colours);
    return find_square_witness(g, {}, edge_colours, WitnessKind::EdgeSeq);
}

std::optional<Witness> is_weak_total_thue(const Graph& g, const TotalColouring& c) {
    require_total(g, c);
    return find_square_witness(g, c.vertex_colours, c.edge_colours, WitnessKind::TotalSeq);
}

std::optional<Witness> is_strong_total_thue(const Graph& g, const TotalColouring& c) {
    require_total(g, c);
    if (auto w = is_weak_total_thue(g, c))
        return w;
    if (auto w = is_nonrepetitive_vertex(g, c.vertex_colours))
        return w;
    if (auto w = is_nonrepetitive_edge(g, c.edge_colours))
        return w;
    return std::nullopt;
}

namespace {
void require_for_mode(const Graph& g, const TotalColouring& c, Mode mode) {
    switch (mode) {
    case Mode::Vertex:
        require_vertex_colours(g, c.vertex_colours);
        break;
    case Mode::Edge:
        require_edge_colours(g, c.edge_colours);
        break;
    default:
        require_total(g, c);
    }
}

bool path_hits(const SpanChecks& sc, const std::vector<VertexId>& vs,
               const std::vector<EdgeId>& es, Mode mode) {
    switch (mode) {
    case Mode::Vertex:
        return sc.whole_vertex_square(vs);
    case Mode::Edge:
        return sc.whole_edge_square(es);
    case Mode::WeakTotal:
        return sc.end_trimmed_total_square(vs, es);
    case Mode::StrongTotal:
        return sc.end_trimmed_total_square(vs, es) || sc.whole_vertex_square(vs) ||
               sc.whole_edge_square(es);
    }
    return false;
}
} // namespace

bool passes(const Graph& g, const TotalColouring& c, Mode mode) {
    require_for_mode(g, c, mode);
    SpanChecks sc{c.vertex_colours, c.edge_colours};
    PathEnumerator en(g);
    while (en.next())
        if (path_hits(sc, en.vertices(), en.edges(), mode))
            return false;
    return true;
}

PathChecker::PathChecker(const Graph& g) {
    PathEnumerator en(g);
    while (en.next())
        paths_.push_back({en.vertices(), en.edges()});
    std::stable_sort(paths_.begin(), paths_.end(),
                     [](const PathData& a, const PathData& b) { return a.vs.size() < b.vs.size(); });
}

bool PathChecker::passes(const TotalColouring& c, Mode mode) const {
    SpanChecks sc{c.vertex_colours, c.edge_colours};
    for (const PathData& p : paths_)
        if (path_hits(sc, p.vs, p.es, mode))
            return false;
    return true;
}

std::optional<Witness> find_violation_capped(const Graph& g, const TotalColouring& c, Mode mode,
                                             std::optional<int> max_elements) {
    switch (mode) {
    case Mode::Vertex:
        return find_square_witness(g, c.vertex_colours, {}, WitnessKind::VertexSeq, max_elements);
    case Mode::Edge:
        return find_square_witness(g, {}, c.edge_colours, WitnessKind::EdgeSeq, max_elements);
    case Mode::WeakTotal:
        return find_square_witness(g, c.vertex_colours, c.edge_colours, WitnessKind::TotalSeq,
                                   max_elements);
    case Mode::StrongTotal:
        if (auto w = find_square_witness(g, c.vertex_colours, c.edge_colours,
                                         WitnessKind::TotalSeq, max_elements))
            return w;
        if (auto w = find_square_witness(g, c.vertex_colours, {}, WitnessKind::VertexSeq,
                                         max_elements))
            return w;
        return find_square_witness(g, {}, c.edge_colours, WitnessKind::EdgeSeq, max_elements);
    }
    return std::nullopt;
}

bool reverify_witness(const Graph& g, const TotalColouring& c, const Witness& w) {
    if (!is_valid_element_path(g, w.path))
        return false;
    for (const auto& el : w.path.elements) {
        if (el.kind == ElementKind::Vertex &&
            (el.id >= static_cast<int>(c.vertex_colours.size()) ||
             c.vertex_colours[el.id] < 0))
            return false;
        if (el.kind == ElementKind::Edge &&
            (el.id >= static_cast<int>(c.edge_colours.size()) || c.edge_colours[el.id] < 0))
            return false;
    }
    ColourSequence seq = extract(g, c, w.path, w.kind);
    auto sq = contains_square(seq);
    return sq && *sq == w.square;
}

std::vector<Colour> to_subdivided_vertex_colours(const Subdivision& sd, const TotalColouring& c) {
    std::vector<Colour> vc(sd.original_vertex_count + sd.original_edge_count, kNoColour);
    for (int v = 0; v < sd.original_vertex_count; ++v)
        vc[v] = c.vertex_colours[v];
    for (int e = 0; e < sd.original_edge_count; ++e)
        vc[sd.edge_image(e)] = c.edge_colours[e];
    return vc;
}

TotalColouring from_subdivided_vertex_colours(const Subdivision& sd,
                                              const std::vector<Colour>& vc) {
    TotalColouring c;
    c.vertex_colours.assign(vc.begin(), vc.begin() + sd.original_vertex_count);
    c.edge_colours.assign(vc.begin() + sd.original_vertex_count,
                          vc.begin() + sd.original_vertex_count + sd.original_edge_count);
    return c;
}

} // namespace thue
