#include "rauzy/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rauzy/digraph.hpp"

namespace rauzy {

bool criterion(const Params& p) { return 2 * p.b - p.a <= 3; }

int ProductAutomaton::find(const ProductState& s) const
{
    for (int k = 0; k < int(states.size()); ++k)
        if (states[k] == s) return k;
    return -1;
}

int ProductAutomaton::add(const ProductState& s)
{
    const int k = find(s);
    if (k >= 0) return k;
    states.push_back(s);
    return static_cast<int>(states.size()) - 1;
}

std::string ProductAutomaton::state_name(const OrderedGraph& g, int k) const
{
    const auto& s = states[k];
    std::string n = g.states[s.left].name + (s.diverged ? "||" : "|") + g.states[s.right].name;
    if (s.phase == PhiPhase::LeftLow) n += " (1|max)";
    if (s.phase == PhiPhase::RightLow) n += " (max|1)";
    return n;
}

namespace {

/// Breadth-first closure from the start states with a successor generator.
template <class Succ>
void close(ProductAutomaton& a, Succ succ)
{
    std::map<std::tuple<int, int, bool, int>, int> index;
    auto key = [](const ProductState& s) { return std::make_tuple(s.left, s.right, s.diverged, int(s.phase)); };
    for (int k = 0; k < int(a.states.size()); ++k) index.emplace(key(a.states[k]), k);
    std::deque<int> queue(a.starts.begin(), a.starts.end());
    std::vector<char> done(a.states.size(), 0);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u < int(done.size()) && done[u]) continue;
        if (u >= int(done.size())) done.resize(u + 1, 0);
        done[u] = 1;
        const ProductState s = a.states[u];
        succ(s, [&](const ProductState& t, int p, int pp, int o, int oo) {
            auto [it, fresh] = index.emplace(key(t), int(a.states.size()));
            if (fresh) a.states.push_back(t);
            a.edges.push_back({u, it->second, p, pp, o, oo});
            if (fresh) queue.push_back(it->second);
        });
    }
}

} // namespace

ProductAutomaton build_product(const Embedding& emb, const OrderedGraph& g, ProductKind kind)
{
    ProductAutomaton a;
    a.kind = kind;
    const int r = g.state_count();
    auto out = [&](int s) {
        std::vector<const OrderedEdge*> v;
        for (int e : g.states[s].out) v.push_back(&g.edges[e]);
        return v;
    };
    if (kind == ProductKind::Psi) {
        for (int s = 0; s < r; ++s)
            for (int t = 0; t < r; ++t) {
                const auto& x = g.states[s].vertex;
                const auto& y = g.states[t].vertex;
                if (x.x == y.x && x.j == y.j && emb.gamma_srs_member(x.x, x.j))
                    a.starts.push_back(a.add({s, t, false}));
            }
        close(a, [&](const ProductState& s, auto emit) {
            for (const auto* e : out(s.left))
                for (const auto* f : out(s.right)) {
                    if (e->p2 != f->p2) continue;
                    const bool div = s.diverged || e->p1 != f->p1;
                    emit({e->to, f->to, div}, e->p1, f->p1, e->order, f->order);
                }
        });
    } else if (kind == ProductKind::Sl) {
        for (int s = 0; s < g.s_max; ++s) a.starts.push_back(a.add({s, s, false}));
        for (int s = 0; s < g.s_max; ++s)
            for (int t = 0; t < g.s_max; ++t)
                if (s != t) a.starts.push_back(a.add({s, t, true}));
        close(a, [&](const ProductState& s, auto emit) {
            for (const auto* e : out(s.left))
                for (const auto* f : out(s.right)) {
                    if (e->p1 != f->p1) continue;
                    const bool div = s.diverged || e->order != f->order;
                    emit({e->to, f->to, div}, e->p1, f->p1, e->order, f->order);
                }
        });
    } else {
        for (int s = 0; s < r; ++s) a.starts.push_back(a.add({s, s, false, PhiPhase::Equal}));
        for (int s = 0; s + 1 < g.s_max; ++s) {
            a.starts.push_back(a.add({s + 1, s, true, PhiPhase::LeftLow}));
            a.starts.push_back(a.add({s, s + 1, true, PhiPhase::RightLow}));
        }
        a.starts.push_back(a.add({0, g.s_max - 1, true, PhiPhase::LeftLow}));
        a.starts.push_back(a.add({g.s_max - 1, 0, true, PhiPhase::RightLow}));
        close(a, [&](const ProductState& s, auto emit) {
            const int ml = g.states[s.left].omax(), mr = g.states[s.right].omax();
            auto step = [&](int o, int oo, PhiPhase ph) {
                const auto& e = g.edge(s.left, o);
                const auto& f = g.edge(s.right, oo);
                emit({e.to, f.to, ph != PhiPhase::Equal, ph}, e.p1, f.p1, o, oo);
            };
            switch (s.phase) {
            case PhiPhase::Equal:
                for (int o = 1; o <= ml; ++o) step(o, o, PhiPhase::Equal);
                for (int o = 1; o < ml; ++o) {
                    step(o + 1, o, PhiPhase::LeftLow);
                    step(o, o + 1, PhiPhase::RightLow);
                }
                break;
            case PhiPhase::LeftLow: step(1, mr, PhiPhase::LeftLow); break;
            case PhiPhase::RightLow: step(ml, 1, PhiPhase::RightLow); break;
            case PhiPhase::None: break;
            }
        });
    }
    return a;
}

namespace {

Digraph as_digraph(const ProductAutomaton& a)
{
    Digraph d(static_cast<int>(a.states.size()));
    for (const auto& e : a.edges) d.add_edge(e.from, e.to);
    return d;
}

} // namespace

ProductAutomaton prune_admissible(const ProductAutomaton& a)
{
    const int n = static_cast<int>(a.states.size());
    const Digraph d = as_digraph(a);
    const auto reach = reachable_from(d, a.starts);
    const auto live = can_reach_cycle(d);
    std::vector<int> good;
    for (int k = 0; k < n; ++k)
        if (a.states[k].diverged && live[k]) good.push_back(k);
    const auto lead = reachable_from(d.reversed(), good);
    ProductAutomaton out;
    out.kind = a.kind;
    std::vector<int> map(n, -1);
    for (int k = 0; k < n; ++k)
        if (reach[k] && lead[k]) {
            map[k] = static_cast<int>(out.states.size());
            out.states.push_back(a.states[k]);
        }
    for (const auto& e : a.edges)
        if (map[e.from] >= 0 && map[e.to] >= 0) out.edges.push_back({map[e.from], map[e.to], e.p, e.pp, e.o, e.oo});
    for (int s : a.starts)
        if (map[s] >= 0 && std::find(out.starts.begin(), out.starts.end(), map[s]) == out.starts.end())
            out.starts.push_back(map[s]);
    return out;
}

namespace {

/// Edge indices of a path from `from` to a state on a cycle, followed by that cycle.
std::pair<std::vector<int>, std::vector<int>> path_to_cycle(const ProductAutomaton& a, int from)
{
    const int n = static_cast<int>(a.states.size());
    const Digraph d = as_digraph(a);
    int count = 0;
    const auto scc = scc_ids(d, &count);
    const auto cyc = on_cycle(d);
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < int(a.edges.size()); ++e) out[a.edges[e].from].push_back(e);

    auto bfs = [&](int src, auto accept, auto allowed) {
        std::vector<int> parent(n, -2);
        std::deque<int> q{src};
        parent[src] = -1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            for (int e : out[u]) {
                const int v = a.edges[e].to;
                if (!allowed(v)) continue;
                if (accept(v)) {
                    std::vector<int> path{e};
                    for (int x = u; parent[x] >= 0; x = a.edges[parent[x]].from) path.push_back(parent[x]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (parent[v] == -2) {
                    parent[v] = e;
                    q.push_back(v);
                }
            }
        }
        return std::vector<int>{};
    };
    std::vector<int> lead;
    int c = from;
    if (!cyc[from]) {
        lead = bfs(from, [&](int v) { return bool(cyc[v]); }, [](int) { return true; });
        if (lead.empty()) return {};
        c = a.edges[lead.back()].to;
    }
    const auto cycle = bfs(c, [&](int v) { return v == c; }, [&](int v) { return scc[v] == scc[c]; });
    return {lead, cycle};
}

} // namespace

PatternResult pattern_check(const OrderedGraph& g, const ProductAutomaton& a, const ProductAutomaton& phi)
{
    PatternResult res;
    const int n = static_cast<int>(a.states.size());
    std::vector<std::vector<int>> out(n), phi_out(phi.states.size());
    for (int e = 0; e < int(a.edges.size()); ++e) out[a.edges[e].from].push_back(e);
    for (int e = 0; e < int(phi.edges.size()); ++e) phi_out[phi.edges[e].from].push_back(e);

    using Node = std::pair<int, int>;
    std::map<Node, std::pair<Node, int>> parent;  // node -> (previous node, automaton edge)
    std::deque<Node> queue;
    auto fail = [&](int start_or_edge_end, const std::vector<int>& prefix, const std::string& why) {
        res.ok = false;
        res.reason = why;
        auto [lead, cycle] = path_to_cycle(a, start_or_edge_end);
        const int s0 = prefix.empty() ? start_or_edge_end : a.edges[prefix.front()].from;
        Walk l{a.states[s0].left, {}, {}}, r{a.states[s0].right, {}, {}};
        for (int e : prefix) {
            l.orders.push_back(a.edges[e].o);
            r.orders.push_back(a.edges[e].oo);
        }
        for (int e : lead) {
            l.orders.push_back(a.edges[e].o);
            r.orders.push_back(a.edges[e].oo);
        }
        for (int e : cycle) {
            l.period.push_back(a.edges[e].o);
            r.period.push_back(a.edges[e].oo);
        }
        if (l.period.empty()) l.period = r.period = {1};
        res.left = l;
        res.right = r;
    };
    for (int s : a.starts) {
        int f = -1;
        for (int k : phi.starts)
            if (phi.states[k].left == a.states[s].left && phi.states[k].right == a.states[s].right) f = k;
        if (f < 0) {
            fail(s, {}, "start pair " + a.state_name(g, s) + " is not identified by the numeration");
            return res;
        }
        if (parent.emplace(Node{s, f}, std::make_pair(Node{-1, -1}, -1)).second) queue.push_back({s, f});
    }
    while (!queue.empty()) {
        const auto [u, f] = queue.front();
        queue.pop_front();
        for (int e : out[u]) {
            const auto& ed = a.edges[e];
            int f2 = -1;
            for (int pe : phi_out[f])
                if (phi.edges[pe].o == ed.o && phi.edges[pe].oo == ed.oo) f2 = phi.edges[pe].to;
            if (f2 < 0) {
                std::vector<int> prefix{e};
                for (Node x{u, f}; parent.at(x).second >= 0; x = parent.at(x).first) prefix.push_back(parent.at(x).second);
                std::reverse(prefix.begin(), prefix.end());
                fail(ed.to, prefix,
                     "edge " + a.state_name(g, u) + " -" + std::to_string(ed.o) + "|" + std::to_string(ed.oo) + "-> " +
                         a.state_name(g, ed.to) + " leaves the identified pairs");
                return res;
            }
            if (parent.emplace(Node{ed.to, f2}, std::make_pair(Node{u, f}, e)).second) queue.push_back({ed.to, f2});
        }
    }
    return res;
}

Witness find_witness(const Embedding& emb, const OrderedGraph& g, const Numeration& num)
{
    const Params& p = g.params;
    if (criterion(p)) throw UsageError("no witness exists when 2b - a <= 3");
    const int m = 2 * p.b - p.a;
    const int s5 = g.state(5), s6m = g.state(6, true), last = g.state(g.s_max);
    Witness w;
    w.left = {s5, {2 + 3 * (m - 3)}, {2, 2 + 3 * (m - 4)}};
    w.right = {last, {1}, {2 + 3 * (m - 4), 2}};
    const Lasso l = normalize(g, w.left), r = normalize(g, w.right);
    if (state_at(g, l, 1) != s6m || state_at(g, r, 1) != s5 || state_at(g, r, 2) != s6m)
        throw VerificationError("witness walks do not pass through 5 and 6-");
    const DigitSeq dl = left_digits(g, l), dr = left_digits(g, r);
    const std::size_t n = std::max(dl.pre.size(), dr.pre.size()) + std::lcm(dl.period.size(), dr.period.size());
    w.digits_equal = true;
    for (std::size_t k = 0; k < n; ++k) w.digits_equal = w.digits_equal && dl.at(k) == dr.at(k);
    w.digits = dl;
    const NumberField& K = num.field();
    w.addresses_distinct = !NumberField::is_zero(K.sub(num.phi_exact(w.left), num.phi_exact(w.right)));
    w.t = num.phi(w.left);
    w.t_prime = num.phi(w.right);
    if (w.t > w.t_prime) {
        std::swap(w.left, w.right);
        std::swap(w.t, w.t_prime);
    }
    w.psi_distance = emb.norm(psi(emb, g, w.left) - psi(emb, g, w.right));
    return w;
}

DiskEvidence is_disklike(const Params& p, DiskMode mode)
{
    DiskEvidence ev;
    ev.result = criterion(p);
    if (mode == DiskMode::Fast) return ev;
    const Embedding emb(p);
    const OrderedGraph g = ordered_graph(p);
    bool verified;
    if (ev.result) {
        const FullBoundaryGraph full = build_full_boundary_graph(emb);
        ev.graph_equal = same_graph(full.graph, contact_graph(p).graph);
        const ProductAutomaton phi = build_product(emb, g, ProductKind::Phi);
        const ProductAutomaton aps = prune_admissible(build_product(emb, g, ProductKind::Psi));
        const ProductAutomaton asl = prune_admissible(build_product(emb, g, ProductKind::Sl));
        ev.psi_states = static_cast<int>(aps.states.size());
        ev.sl_states = static_cast<int>(asl.states.size());
        ev.psi = pattern_check(g, aps, phi);
        ev.sl = pattern_check(g, asl, phi);
        verified = ev.graph_equal && ev.psi->ok && ev.sl->ok;
    } else {
        const Numeration num(g, perron_data(g));
        ev.witness = find_witness(emb, g, num);
        const bool found = ev.witness->digits_equal && ev.witness->addresses_distinct &&
                           ev.witness->psi_distance < 1e-9L;
        verified = !found;
    }
    ev.verified = true;
    if (verified != ev.result)
        throw VerificationError("disk-likeness check disagrees with 2b - a <= 3 for (" + std::to_string(p.a) + "," +
                                std::to_string(p.b) + ")");
    return ev;
}

} // namespace rauzy
