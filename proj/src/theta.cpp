#include "thetaring/theta.hpp"

#include "thetaring/error.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <set>
#include <string>

namespace thetaring {

namespace {

    using Mask = std::uint64_t;

    constexpr Mask bit(int v) { return Mask{1} << v; }

    template <typename F>
    void for_each_bit(Mask m, F && f)
    {
        while (m) {
            int v = std::countr_zero(m);
            f(v);
            m &= m - 1;
        }
    }

    std::vector<Edge> path_edges(const Path & p)
    {
        std::vector<Edge> out;
        for (std::size_t i = 1; i < p.vertices.size(); ++i)
            out.push_back({std::min(p.vertices[i - 1], p.vertices[i]), std::max(p.vertices[i - 1], p.vertices[i])});
        return out;
    }

    std::vector<Edge> compute_chords(const Graph & g, const std::array<Path, 3> & paths)
    {
        std::set<Vertex> vs;
        std::set<Edge> on_paths;
        for (const auto & p : paths) {
            vs.insert(p.vertices.begin(), p.vertices.end());
            for (auto e : path_edges(p))
                on_paths.insert(e);
        }
        std::vector<Edge> chords;
        for (auto e : g.edges())
            if (vs.count(e.u) && vs.count(e.v) && !on_paths.count(e))
                chords.push_back(e);
        return chords;
    }

    bool path_order(const Path & a, const Path & b)
    {
        if (a.vertices.size() != b.vertices.size())
            return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    }

    // Lexicographic order on sorted vertex lists of two sets of equal size.
    bool lex_smaller(Mask a, Mask b)
    {
        Mask d = a ^ b;
        return d != 0 && (a & (d & (~d + 1))) != 0;
    }

    bool better(Mask candidate, Mask best)
    {
        if (best == 0)
            return true;
        int pc = std::popcount(candidate), pb = std::popcount(best);
        return pc < pb || (pc == pb && lex_smaller(candidate, best));
    }

    // Union of common neighbours of adjacent pairs across two interiors.
    Mask triangle_completers(const std::vector<Mask> & nb, Mask i1, Mask i2)
    {
        Mask out = 0;
        for_each_bit(i1, [&](int a) { for_each_bit(i2 & nb[a], [&](int b) { out |= nb[a] & nb[b]; }); });
        return out;
    }

    // reach[mask] = set of v such that some path from x has vertex set exactly mask and ends at v.
    std::vector<std::uint32_t> path_reach(const std::vector<Mask> & nb, int n, int x)
    {
        std::size_t total = std::size_t{1} << n;
        std::vector<std::uint32_t> reach(total, 0);
        reach[bit(x)] = static_cast<std::uint32_t>(bit(x));
        for (std::size_t mask = 0; mask < total; ++mask) {
            std::uint32_t ends = reach[mask];
            if (!ends)
                continue;
            for_each_bit(ends, [&](int v) {
                for_each_bit(nb[v] & ~Mask{mask}, [&](int w) { reach[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
            });
        }
        return reach;
    }

    Path rebuild_path(const std::vector<std::uint32_t> & reach, const std::vector<Mask> & nb, int x, int y, Mask interior)
    {
        Mask mask = interior | bit(x) | bit(y);
        std::vector<Vertex> rev{y};
        int cur = y;
        while (cur != x) {
            Mask rest = mask & ~bit(cur);
            int prev = -1;
            for_each_bit(rest & nb[cur], [&](int v) {
                if (prev < 0 && (reach[rest] & bit(v)))
                    prev = v;
            });
            mask = rest;
            cur = prev;
            rev.push_back(cur);
        }
        std::reverse(rev.begin(), rev.end());
        return {rev};
    }

    BruteForceResult global_search(const Graph & g)
    {
        int n = g.order();
        if (n > 20)
            throw PreconditionError(PreconditionError::Reason::too_large, "global theta search supports at most 20 vertices");
        auto nb = g.neighbor_masks();
        Mask full = n == 0 ? 0 : (bit(n) - 1);
        Mask best = 0;
        std::vector<char> is_interior(std::size_t{1} << n, 0);

        for (int x = 0; x < n; ++x) {
            if (g.degree(x) < 3)
                continue;
            auto reach = path_reach(nb, n, x);
            for (int y = x + 1; y < n; ++y) {
                if (g.adjacent(x, y) || g.degree(y) < 3)
                    continue;
                Mask ends = bit(x) | bit(y);
                std::vector<Mask> interiors;
                for (std::size_t mask = 0; mask <= full; ++mask)
                    if ((mask & ends) == ends && (reach[mask] & bit(y)))
                        interiors.push_back(mask & ~ends);
                for (Mask m : interiors)
                    is_interior[m] = 1;

                int best_size = best ? std::popcount(best) : INT_MAX;
                for (Mask i1 : interiors) {
                    int lb1 = std::countr_zero(i1);
                    for (Mask i2 : interiors) {
                        int lb2 = std::countr_zero(i2);
                        if (lb2 <= lb1 || (i1 & i2))
                            continue;
                        if (2 + std::popcount(i1) + std::popcount(i2) + 1 > best_size)
                            continue;
                        Mask above = full & ~(bit(lb2 + 1) - 1);
                        Mask avail = above & ~(i1 | i2 | ends) & ~triangle_completers(nb, i1, i2);
                        for (Mask sub = avail; sub; sub = (sub - 1) & avail) {
                            if (!is_interior[sub])
                                continue;
                            Mask s = ends | i1 | i2 | sub;
                            if (better(s, best)) {
                                best = s;
                                best_size = std::popcount(best);
                            }
                        }
                    }
                }
                for (Mask m : interiors)
                    is_interior[m] = 0;
            }
        }

        if (!best)
            return {true, std::nullopt};
        std::vector<Vertex> s;
        for_each_bit(best, [&](int v) { s.push_back(v); });
        return {false, bad_theta_spanning(g, s)};
    }

    bool passes_degree_filter(const std::vector<Mask> & nb, Mask s)
    {
        int high = 0;
        bool ok = true;
        for_each_bit(s, [&](int v) {
            int d = std::popcount(nb[v] & s);
            if (d < 2)
                ok = false;
            if (d >= 3)
                ++high;
        });
        return ok && high >= 2;
    }

    BruteForceResult subset_search(const Graph & g)
    {
        int n = g.order();
        auto nb = g.neighbor_masks();
        std::vector<int> comb;
        for (int size = 5; size <= n; ++size) {
            comb.resize(size);
            for (int i = 0; i < size; ++i)
                comb[i] = i;
            while (true) {
                Mask s = 0;
                for (int v : comb)
                    s |= bit(v);
                if (passes_degree_filter(nb, s))
                    if (auto t = bad_theta_spanning(g, comb))
                        return {false, std::move(t)};
                int i = size - 1;
                while (i >= 0 && comb[i] == n - size + i)
                    --i;
                if (i < 0)
                    break;
                ++comb[i];
                for (int j = i + 1; j < size; ++j)
                    comb[j] = comb[j - 1] + 1;
            }
        }
        return {true, std::nullopt};
    }

    struct Walk {
        Vertex end = -1;
        int length = 0;
    };

    // Follows degree-2 vertices from `from` through `first` until a vertex of other degree.
    Walk walk(const Graph & h, Vertex from, Vertex first)
    {
        Vertex prev = from, cur = first;
        int length = 1;
        while (h.degree(cur) == 2 && cur != from) {
            const auto & nb = h.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++length;
            if (length > h.order())
                break;
        }
        return {cur, length};
    }

    std::vector<Vertex> vertices_of_degree(const Graph & h, int d)
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < h.order(); ++v)
            if (h.degree(v) == d)
                out.push_back(v);
        return out;
    }

    bool degrees_only(const Graph & h, int high_degree, std::size_t high_count)
    {
        std::size_t high = 0;
        for (Vertex v = 0; v < h.order(); ++v) {
            if (h.degree(v) == high_degree)
                ++high;
            else if (h.degree(v) != 2)
                return false;
        }
        return high == high_count;
    }

    std::vector<std::array<Vertex, 3>> all_triangles(const Graph & h)
    {
        std::vector<std::array<Vertex, 3>> out;
        for (auto [u, v] : h.edges())
            for (Vertex w : h.neighbors(v))
                if (w > v && h.adjacent(u, w))
                    out.push_back({u, v, w});
        return out;
    }

} // namespace

std::vector<Vertex> ChordedTheta::vertex_set() const
{
    std::vector<Vertex> vs;
    for (const auto & p : paths)
        vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::size_t ChordedTheta::vertex_count() const
{
    return vertex_set().size();
}

bool is_valid_chorded_theta(const ChordedTheta & t, const Graph & g)
{
    if (t.x == t.y || !g.in_range(t.x) || !g.in_range(t.y) || g.adjacent(t.x, t.y))
        return false;
    std::set<Vertex> seen;
    for (const auto & p : t.paths) {
        if (!is_path_in(p, g) || p.front() != t.x || p.back() != t.y)
            return false;
        for (Vertex v : p.interior())
            if (!seen.insert(v).second)
                return false;
    }
    return t.chords == compute_chords(g, t.paths);
}

ChordedTheta make_chorded_theta(const Graph & g, std::array<Path, 3> paths)
{
    ChordedTheta t;
    t.x = paths[0].vertices.empty() ? -1 : paths[0].front();
    t.y = paths[0].vertices.empty() ? -1 : paths[0].back();
    t.paths = std::move(paths);
    t.chords = compute_chords(g, t.paths);
    if (!is_valid_chorded_theta(t, g))
        throw PreconditionError(PreconditionError::Reason::invalid_parameters, "paths do not form a chorded-theta");
    return t;
}

std::string_view to_string(WitnessKind kind) noexcept
{
    switch (kind) {
    case WitnessKind::theta: return "theta";
    case WitnessKind::prism: return "prism";
    case WitnessKind::pyramid: return "pyramid";
    case WitnessKind::theta_partial_wheel: return "theta_partial_wheel";
    case WitnessKind::generic_chorded_theta: return "generic_chorded_theta";
    }
    return "generic_chorded_theta";
}

void for_each_chorded_theta(const Graph & g, const std::function<bool(const ChordedTheta &)> & visit)
{
    int n = g.order();
    auto nb = g.neighbor_masks();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y) || g.degree(x) < 3 || g.degree(y) < 3)
                continue;
            std::vector<Path> found;
            std::vector<Vertex> cur{x};
            Mask used = bit(x);
            auto dfs = [&](auto && self, Vertex v) -> void {
                for_each_bit(nb[v] & ~used, [&](int w) {
                    cur.push_back(w);
                    if (w == y)
                        found.push_back({cur});
                    else {
                        used |= bit(w);
                        self(self, w);
                        used &= ~bit(w);
                    }
                    cur.pop_back();
                });
            };
            dfs(dfs, x);
            std::sort(found.begin(), found.end(), path_order);
            std::vector<Mask> inner;
            for (const auto & p : found) {
                Mask m = 0;
                for (Vertex v : p.interior())
                    m |= bit(v);
                inner.push_back(m);
            }
            for (std::size_t i = 0; i < found.size(); ++i)
                for (std::size_t j = i + 1; j < found.size(); ++j) {
                    if (inner[i] & inner[j])
                        continue;
                    for (std::size_t k = j + 1; k < found.size(); ++k) {
                        if ((inner[i] | inner[j]) & inner[k])
                            continue;
                        ChordedTheta t;
                        t.x = x;
                        t.y = y;
                        t.paths = {found[i], found[j], found[k]};
                        t.chords = compute_chords(g, t.paths);
                        if (!visit(t))
                            return;
                    }
                }
        }
}

std::vector<ChordedTheta> enumerate_chorded_thetas(const Graph & g)
{
    std::vector<ChordedTheta> out;
    for_each_chorded_theta(g, [&](const ChordedTheta & t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool is_simple_chorded_theta(const ChordedTheta & t, const Graph & g)
{
    (void)g;
    for (auto [u, v] : t.chords)
        for (const auto & p : t.paths) {
            const auto & vs = p.vertices;
            bool hu = std::find(vs.begin(), vs.end(), u) != vs.end();
            bool hv = std::find(vs.begin(), vs.end(), v) != vs.end();
            if (hu && hv)
                return false;
        }
    return true;
}

std::vector<std::array<Vertex, 3>> transversal_triangles(const ChordedTheta & t, const Graph & g)
{
    std::vector<std::array<Vertex, 3>> out;
    auto i1 = t.paths[0].interior(), i2 = t.paths[1].interior(), i3 = t.paths[2].interior();
    for (Vertex a : i1)
        for (Vertex b : i2) {
            if (!g.adjacent(a, b))
                continue;
            for (Vertex c : i3)
                if (g.adjacent(a, c) && g.adjacent(b, c))
                    out.push_back({a, b, c});
        }
    return out;
}

std::optional<ChordedTheta> bad_theta_spanning(const Graph & g, std::span<const Vertex> s)
{
    auto sub = induced_subgraph(g, s);
    const Graph & h = sub.graph;
    int m = h.order();
    if (m < 5)
        return std::nullopt;
    if (m > 24)
        throw PreconditionError(PreconditionError::Reason::too_large, "vertex set too large for exhaustive theta search");
    auto nb = h.neighbor_masks();
    Mask full = bit(m) - 1;
    if (!passes_degree_filter(nb, full))
        return std::nullopt;

    for (int x = 0; x < m; ++x) {
        if (h.degree(x) < 3)
            continue;
        std::vector<std::uint32_t> reach;
        for (int y = x + 1; y < m; ++y) {
            if (h.adjacent(x, y) || h.degree(y) < 3)
                continue;
            if (reach.empty())
                reach = path_reach(nb, m, x);
            Mask ends = bit(x) | bit(y);
            std::vector<Mask> interiors;
            std::vector<char> is_interior(std::size_t{1} << m, 0);
            for (std::size_t mask = 0; mask <= full; ++mask)
                if ((mask & ends) == ends && (reach[mask] & bit(y))) {
                    interiors.push_back(mask & ~ends);
                    is_interior[mask & ~ends] = 1;
                }
            for (Mask i1 : interiors)
                for (Mask i2 : interiors) {
                    if (std::countr_zero(i2) <= std::countr_zero(i1) || (i1 & i2))
                        continue;
                    Mask i3 = full & ~(ends | i1 | i2);
                    if (!i3 || std::countr_zero(i3) <= std::countr_zero(i2) || !is_interior[i3])
                        continue;
                    if (i3 & triangle_completers(nb, i1, i2))
                        continue;
                    std::array<Path, 3> paths;
                    Mask parts[3] = {i1, i2, i3};
                    for (int k = 0; k < 3; ++k) {
                        paths[k] = rebuild_path(reach, nb, x, y, parts[k]);
                        for (auto & v : paths[k].vertices)
                            v = sub.original[v];
                    }
                    std::sort(paths.begin(), paths.end(), path_order);
                    return make_chorded_theta(g, std::move(paths));
                }
        }
    }
    return std::nullopt;
}

BruteForceResult is_theta_ring_bruteforce(const Graph & g, SearchRoute route)
{
    if (route == SearchRoute::automatic)
        route = g.order() <= 16 ? SearchRoute::global : SearchRoute::by_subset;
    return route == SearchRoute::global ? global_search(g) : subset_search(g);
}

Graph make_theta(int a, int b, int c)
{
    if (a < 2 || b < 2 || c < 2)
        throw PreconditionError(PreconditionError::Reason::invalid_parameters, "theta paths need at least 2 edges each");
    std::vector<Edge> es;
    int next = 2;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            es.push_back({prev, next});
            prev = next++;
        }
        es.push_back({prev, 1});
    }
    return {next, es};
}

Graph make_prism(int l1, int l2, int l3)
{
    if (l1 < 1 || l2 < 1 || l3 < 1)
        throw PreconditionError(PreconditionError::Reason::invalid_parameters, "prism paths need at least 1 edge each");
    std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    int next = 6;
    int lengths[3] = {l1, l2, l3};
    for (int i = 0; i < 3; ++i) {
        Vertex prev = i;
        for (int j = 1; j < lengths[i]; ++j) {
            es.push_back({prev, next});
            prev = next++;
        }
        es.push_back({prev, 3 + i});
    }
    return {next, es};
}

Graph make_pyramid(int p1, int p2, int p3)
{
    int lengths[3] = {p1, p2, p3};
    if (p1 < 1 || p2 < 1 || p3 < 1 || std::count(lengths, lengths + 3, 1) > 1)
        throw PreconditionError(PreconditionError::Reason::invalid_parameters,
            "pyramid paths need at least 1 edge each and at most one of length 1");
    std::vector<Edge> es{{1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    for (int i = 0; i < 3; ++i) {
        Vertex prev = 0;
        for (int j = 1; j < lengths[i]; ++j) {
            es.push_back({prev, next});
            prev = next++;
        }
        es.push_back({prev, 1 + i});
    }
    return {next, es};
}

Graph make_theta_partial_wheel(int k, std::span<const int> attachments)
{
    using Reason = PreconditionError::Reason;
    if (k < 4)
        throw PreconditionError(Reason::invalid_parameters, "partial wheel rim needs at least 4 vertices");
    std::set<int> att(attachments.begin(), attachments.end());
    if (att.size() != attachments.size())
        throw PreconditionError(Reason::invalid_parameters, "repeated attachment");
    for (int a : att)
        if (a < 0 || a >= k)
            throw PreconditionError(Reason::invalid_parameters, "attachment outside the rim");
    bool far_pair = false;
    for (int a : att)
        for (int b : att) {
            int d = (b - a + k) % k;
            if (d >= 2 && d <= k - 2)
                far_pair = true;
        }
    if (!far_pair)
        throw PreconditionError(Reason::invalid_parameters, "centre must see two non-adjacent rim vertices");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        es.push_back({1 + i, 1 + (i + 1) % k});
    for (int a : att)
        es.push_back({0, 1 + a});
    return {k + 1, es};
}

bool is_theta_graph(const Graph & h)
{
    if (h.order() < 5 || !degrees_only(h, 3, 2))
        return false;
    auto ends = vertices_of_degree(h, 3);
    Vertex x = ends[0], y = ends[1];
    if (h.adjacent(x, y))
        return false;
    int covered = 2;
    for (Vertex w : h.neighbors(x)) {
        auto r = walk(h, x, w);
        if (r.end != y)
            return false;
        covered += r.length - 1;
    }
    return covered == h.order();
}

bool is_prism_graph(const Graph & h)
{
    if (h.order() < 6 || !degrees_only(h, 3, 6))
        return false;
    auto tris = all_triangles(h);
    if (tris.size() != 2)
        return false;
    std::set<Vertex> t1(tris[0].begin(), tris[0].end()), t2(tris[1].begin(), tris[1].end());
    for (Vertex v : t1)
        if (t2.count(v))
            return false;
    std::set<Vertex> hit;
    int covered = 6;
    for (Vertex a : t1) {
        Vertex out = -1;
        for (Vertex w : h.neighbors(a))
            if (!t1.count(w))
                out = w;
        auto r = walk(h, a, out);
        if (!t2.count(r.end) || !hit.insert(r.end).second)
            return false;
        covered += r.length - 1;
    }
    return covered == h.order();
}

bool is_pyramid_graph(const Graph & h)
{
    if (h.order() < 6 || !degrees_only(h, 3, 4))
        return false;
    auto tris = all_triangles(h);
    if (tris.size() != 1)
        return false;
    std::set<Vertex> tri(tris[0].begin(), tris[0].end());
    Vertex apex = -1;
    for (Vertex v : vertices_of_degree(h, 3))
        if (!tri.count(v))
            apex = v;
    if (apex < 0)
        return false;
    std::set<Vertex> hit;
    int covered = 4, unit = 0;
    for (Vertex w : h.neighbors(apex)) {
        auto r = walk(h, apex, w);
        if (!tri.count(r.end) || !hit.insert(r.end).second)
            return false;
        if (r.length == 1)
            ++unit;
        covered += r.length - 1;
    }
    return unit <= 1 && covered == h.order();
}

bool is_theta_partial_wheel_graph(const Graph & h)
{
    int n = h.order();
    if (n < 5)
        return false;
    for (Vertex z = 0; z < n; ++z) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (v != z)
                rest.push_back(v);
        auto rim = induced_subgraph(h, rest).graph;
        bool cycle = rim.is_connected();
        for (Vertex v = 0; v < rim.order() && cycle; ++v)
            cycle = rim.degree(v) == 2;
        if (!cycle)
            continue;
        const auto & nz = h.neighbors(z);
        for (std::size_t i = 0; i < nz.size(); ++i)
            for (std::size_t j = i + 1; j < nz.size(); ++j)
                if (!h.adjacent(nz[i], nz[j]))
                    return true;
    }
    return false;
}

WitnessKind classify_shape(const Graph & h)
{
    if (is_theta_graph(h))
        return WitnessKind::theta;
    if (is_prism_graph(h))
        return WitnessKind::prism;
    if (is_pyramid_graph(h))
        return WitnessKind::pyramid;
    if (is_theta_partial_wheel_graph(h))
        return WitnessKind::theta_partial_wheel;
    return WitnessKind::generic_chorded_theta;
}

std::optional<ForbiddenWitness> classify_forbidden(const Graph & g)
{
    auto bf = is_theta_ring_bruteforce(g);
    if (bf.theta_ring)
        return std::nullopt;
    ForbiddenWitness w;
    w.theta = std::move(*bf.witness);
    w.vertices = w.theta.vertex_set();
    w.kind = classify_shape(induced_subgraph(g, w.vertices).graph);
    return w;
}

} // namespace thetaring
