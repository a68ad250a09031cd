#include "rauzy/export.hpp"

#include <sstream>

namespace rauzy {

using nlohmann::json;

namespace {

std::string quoted(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r + "\"";
}

std::string vertex_label(const BoundaryGraph& g, int k)
{
    const auto& v = g.vertices[k];
    std::ostringstream os;
    if (k < int(g.names.size()) && !g.names[k].empty()) os << g.names[k] << "\\n";
    os << "[" << v.i << ",(" << v.x[0] << "," << v.x[1] << "," << v.x[2] << ")," << v.j << "]";
    return os.str();
}

const char* kind_name(ProductKind k)
{
    switch (k) {
    case ProductKind::Psi: return "psi";
    case ProductKind::Sl: return "sl";
    case ProductKind::Phi: return "phi";
    }
    return "?";
}

const char* phase_name(PhiPhase p)
{
    switch (p) {
    case PhiPhase::None: return "none";
    case PhiPhase::Equal: return "equal";
    case PhiPhase::LeftLow: return "left_low";
    case PhiPhase::RightLow: return "right_low";
    }
    return "?";
}

} // namespace

json to_json(const PrefixSuffixGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"prefix", e.prefix}, {"to", e.to}});
    return {{"edges", edges}};
}

std::string to_dot(const PrefixSuffixGraph& g)
{
    std::ostringstream os;
    os << "digraph Gamma {\n";
    for (int i = 1; i <= 3; ++i) os << "  " << i << ";\n";
    for (const auto& e : g.edges) os << "  " << e.from << " -> " << e.to << " [label=\"" << e.prefix << "\"];\n";
    os << "}\n";
    return os.str();
}

json to_json(const BoundaryGraph& g)
{
    json vs = json::array(), es = json::array();
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const auto& v = g.vertices[k];
        json o = {{"i", v.i}, {"x", {v.x[0], v.x[1], v.x[2]}}, {"j", v.j}};
        if (k < g.names.size() && !g.names[k].empty()) o["name"] = g.names[k];
        vs.push_back(o);
    }
    for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"p", e.p}, {"pp", e.pp}, {"to", e.to}});
    return {{"vertices", vs}, {"edges", es}};
}

std::string to_dot(const BoundaryGraph& g, const std::string& title)
{
    std::ostringstream os;
    os << "digraph " << quoted(title) << " {\n";
    for (int k = 0; k < int(g.vertices.size()); ++k) os << "  v" << k << " [label=\"" << vertex_label(g, k) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.p << "|" << e.pp << "\"];\n";
    os << "}\n";
    return os.str();
}

json to_json(const OrderedGraph& g)
{
    json ss = json::array(), es = json::array();
    for (const auto& s : g.states)
        ss.push_back({{"name", s.name},
                      {"number", s.number},
                      {"minus", s.minus},
                      {"vertex", {{"i", s.vertex.i}, {"x", {s.vertex.x[0], s.vertex.x[1], s.vertex.x[2]}}, {"j", s.vertex.j}}},
                      {"omax", s.omax()}});
    for (const auto& e : g.edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"p1", e.p1}, {"p2", e.p2}, {"order", e.order}});
    return {{"a", g.params.a}, {"b", g.params.b}, {"s_max", g.s_max}, {"states", ss}, {"edges", es}};
}

std::string to_dot(const OrderedGraph& g)
{
    std::ostringstream os;
    os << "digraph Gplus {\n";
    for (int k = 0; k < g.state_count(); ++k)
        os << "  s" << k << " [label=" << quoted(g.states[k].name) << (g.is_starting(k) ? ",shape=doublecircle" : "")
           << "];\n";
    for (const auto& e : g.edges)
        os << "  s" << e.from << " -> s" << e.to << " [label=\"" << e.p1 << "|" << e.p2 << " ; " << e.order
           << "\"];\n";
    os << "}\n";
    return os.str();
}

json to_json(const OrderedGraph& g, const ProductAutomaton& a)
{
    json ss = json::array(), es = json::array();
    for (int k = 0; k < int(a.states.size()); ++k) {
        const auto& s = a.states[k];
        ss.push_back({{"name", a.state_name(g, k)},
                      {"left", s.left},
                      {"right", s.right},
                      {"diverged", s.diverged},
                      {"phase", phase_name(s.phase)}});
    }
    for (const auto& e : a.edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"p", e.p}, {"pp", e.pp}, {"o", e.o}, {"oo", e.oo}});
    return {{"kind", kind_name(a.kind)}, {"starts", a.starts}, {"states", ss}, {"edges", es}};
}

std::string to_dot(const OrderedGraph& g, const ProductAutomaton& a)
{
    std::ostringstream os;
    os << "digraph " << kind_name(a.kind) << " {\n";
    std::vector<char> start(a.states.size(), 0);
    for (int s : a.starts) start[s] = 1;
    for (int k = 0; k < int(a.states.size()); ++k)
        os << "  q" << k << " [label=" << quoted(a.state_name(g, k)) << (start[k] ? ",shape=box" : "")
           << (a.states[k].diverged ? ",style=bold" : "") << "];\n";
    for (const auto& e : a.edges)
        os << "  q" << e.from << " -> q" << e.to << " [label=\"" << e.p << "," << e.o << " | " << e.pp << "," << e.oo
           << "\"];\n";
    os << "}\n";
    return os.str();
}

json to_json(const PerronData& d)
{
    json u = json::array();
    for (auto x : d.u) u.push_back(double(x));
    return {{"lambda", double(d.lambda)}, {"r", d.r()}, {"u", u}};
}

json info_json(const Embedding& emb)
{
    auto cplx = [](Cplx z) { return json{{"re", double(z.real())}, {"im", double(z.imag())}}; };
    return {{"a", emb.params().a},
            {"b", emb.params().b},
            {"beta", double(emb.beta())},
            {"alpha1", cplx(emb.alpha1())},
            {"alpha2", cplx(emb.alpha2())},
            {"max_abs_alpha", double(emb.max_abs_alpha())},
            {"D", double(emb.discriminant())},
            {"D_numerator_over_108", emb.discriminant_numerator()},
            {"conj_kind", emb.kind() == ConjKind::ComplexPair ? "complex" : "real"},
            {"B", double(emb.candidate_bound())},
            {"precision_bits", emb.precision_bits()},
            {"tol", double(emb.tol())}};
}

json to_json(const DigitSeq& d) { return {{"pre", d.pre}, {"period", d.period}}; }

json walk_json(const OrderedGraph& g, const Walk& w)
{
    const Lasso l = normalize(g, w);
    return {{"start", g.states[w.start].name},
            {"orders", w.orders},
            {"period", w.period},
            {"text", walk_to_string(g, w)},
            {"left_digits", to_json(left_digits(g, l))},
            {"right_digits", to_json(right_digits(g, l))}};
}

json to_json(const OrderedGraph& g, const Witness& w)
{
    return {{"left", walk_json(g, w.left)},
            {"right", walk_json(g, w.right)},
            {"t", double(w.t)},
            {"t_prime", double(w.t_prime)},
            {"digits", to_json(w.digits)},
            {"psi_distance", double(w.psi_distance)},
            {"digits_equal", w.digits_equal},
            {"addresses_distinct", w.addresses_distinct}};
}

json to_json(const OrderedGraph& g, const DiskEvidence& e)
{
    json ev = json::object();
    ev["graph_equal"] = e.graph_equal;
    auto pattern = [&](const PatternResult& r, int states) {
        json o = {{"ok", r.ok}, {"pruned_states", states}};
        if (!r.ok) o["reason"] = r.reason;
        if (r.left && r.right) o["pair"] = {walk_json(g, *r.left), walk_json(g, *r.right)};
        return o;
    };
    if (e.psi) ev["psi"] = pattern(*e.psi, e.psi_states);
    if (e.sl) ev["sl"] = pattern(*e.sl, e.sl_states);
    if (e.witness) ev["witness"] = to_json(g, *e.witness);
    return {{"a", g.params.a},
            {"b", g.params.b},
            {"result", e.result},
            {"mode", e.verified ? "verified" : "fast"},
            {"evidence", ev}};
}

} // namespace rauzy
