#include "thetaring/toric.hpp"

#include "thetaring/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace thetaring {

namespace {

    using Reason = PreconditionError::Reason;

    std::vector<Vertex> topological_order(const OrientedGraph & d)
    {
        int n = d.order();
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<std::pair<Vertex, int>>> out(n);
        for (int i = 0; i < d.size(); ++i) {
            ++indeg[d.arc(i).head];
            out[d.arc(i).tail].push_back({d.arc(i).head, i});
        }
        std::set<Vertex> ready;
        for (Vertex v = 0; v < n; ++v)
            if (!indeg[v])
                ready.insert(v);
        std::vector<Vertex> order;
        while (!ready.empty()) {
            Vertex v = *ready.begin();
            ready.erase(ready.begin());
            order.push_back(v);
            for (auto [w, e] : out[v])
                if (--indeg[w] == 0)
                    ready.insert(w);
        }
        return order;
    }

    bool acyclic_mask(int n, const std::vector<Edge> & edges, std::uint64_t reversed)
    {
        std::vector<std::uint64_t> in(n, 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if ((reversed >> i) & 1)
                in[u] |= std::uint64_t{1} << v;
            else
                in[v] |= std::uint64_t{1} << u;
        }
        std::uint64_t done = 0, all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        while (done != all) {
            std::uint64_t next = 0;
            for (int v = 0; v < n; ++v)
                if (!((done >> v) & 1) && (in[v] & ~done) == 0)
                    next |= std::uint64_t{1} << v;
            if (!next)
                return false;
            done |= next;
        }
        return true;
    }

    int mu_for_cycles(const OrientedGraph & d, const std::vector<Cycle> & cycles, std::size_t cap)
    {
        std::set<std::vector<int>> degrees;
        for (const auto & c : cycles)
            degrees.insert(multidegree(d, cycle_binomial(d, c).plus));
        int mu = 0;
        for (const auto & b : degrees)
            mu += fiber_components(fiber(d, b, cap)) - 1;
        return mu;
    }

    using Poly = std::map<Exponents, long long>;

    void add_term(Poly & p, const Exponents & e, long long c)
    {
        if ((p[e] += c) == 0)
            p.erase(e);
    }

    Exponents mono_mul(const Exponents & a, const Exponents & b)
    {
        Exponents out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = a[i] + b[i];
        return out;
    }

    // c * t^m * (t^plus - t^minus) added to p.
    void add_scaled(Poly & p, const Exponents & m, const Binomial & b, long long c)
    {
        add_term(p, mono_mul(m, b.plus), c);
        add_term(p, mono_mul(m, b.minus), -c);
    }

    Path hamiltonian_on(const OrientedGraph & d, const std::vector<Vertex> & vs)
    {
        std::vector<Vertex> path;
        for (Vertex v : vs) {
            if (path.empty() || d.points(v, path.front())) {
                path.insert(path.begin(), v);
                continue;
            }
            if (d.points(path.back(), v)) {
                path.push_back(v);
                continue;
            }
            // path.front() -> v and v -> path.back(): some consecutive pair switches.
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (d.points(path[i], v) && d.points(v, path[i + 1])) {
                    path.insert(path.begin() + static_cast<long>(i) + 1, v);
                    break;
                }
        }
        return {path};
    }

    Exponents parse_monomial(std::string_view s, int q)
    {
        Exponents e(q, 0);
        auto trim = [](std::string_view v) {
            while (!v.empty() && v.front() == ' ')
                v.remove_prefix(1);
            while (!v.empty() && v.back() == ' ')
                v.remove_suffix(1);
            return v;
        };
        s = trim(s);
        if (s == "1")
            return e;
        std::size_t i = 0;
        auto number = [&]() {
            std::size_t start = i;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9')
                ++i;
            if (start == i || i - start > 9)
                throw GraphError("malformed binomial near `" + std::string(s) + "`");
            return std::stoi(std::string(s.substr(start, i - start)));
        };
        if (s.empty())
            throw GraphError("empty monomial");
        while (i < s.size()) {
            if (s[i] != 't')
                throw GraphError("malformed binomial near `" + std::string(s) + "`");
            ++i;
            int var = number();
            if (i >= s.size() || s[i] != '^')
                throw GraphError("missing exponent in `" + std::string(s) + "`");
            ++i;
            int exp = number();
            if (var < 1 || var > q)
                throw GraphError("variable t" + std::to_string(var) + " out of range");
            e[var - 1] += exp;
        }
        return e;
    }

} // namespace

OrientedGraph::OrientedGraph(Graph base, std::vector<Arc> arcs) : base_(std::move(base)), arcs_(std::move(arcs))
{
    if (static_cast<int>(arcs_.size()) != base_.size())
        throw GraphError("orientation needs exactly one arc per edge");
    for (int i = 0; i < base_.size(); ++i) {
        auto [u, v] = base_.edges()[i];
        auto [t, h] = arcs_[i];
        if (!((t == u && h == v) || (t == v && h == u)))
            throw GraphError("arc " + std::to_string(i) + " does not orient edge " + std::to_string(i));
    }
}

OrientedGraph OrientedGraph::from_mask(const Graph & base, std::uint64_t reversed)
{
    std::vector<Arc> arcs;
    for (int i = 0; i < base.size(); ++i) {
        auto [u, v] = base.edges()[i];
        bool flip = i < 64 && ((reversed >> i) & 1);
        arcs.push_back(flip ? Arc{v, u} : Arc{u, v});
    }
    return {base, arcs};
}

bool OrientedGraph::points(Vertex u, Vertex v) const
{
    int e = base_.edge_index(u, v);
    if (e < 0)
        throw GraphError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
    return arcs_[e].tail == u;
}

OrientedGraph OrientedGraph::reversed() const
{
    std::vector<Arc> arcs;
    for (auto a : arcs_)
        arcs.push_back({a.head, a.tail});
    return {base_, arcs};
}

std::uint64_t OrientedGraph::reversal_mask() const
{
    std::uint64_t m = 0;
    for (int i = 0; i < size() && i < 64; ++i)
        if (arcs_[i].tail > arcs_[i].head)
            m |= std::uint64_t{1} << i;
    return m;
}

bool Binomial::coprime() const
{
    for (std::size_t i = 0; i < plus.size(); ++i)
        if (plus[i] > 0 && minus[i] > 0)
            return false;
    return true;
}

bool equal_up_to_sign(const Binomial & a, const Binomial & b)
{
    return a == b || a == b.negated();
}

int IncidenceMatrix::rank() const
{
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m[r][c] = at(r, c);
    // Fraction-free elimination; entries stay bounded by minors of a unimodular matrix.
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[pivot], m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k)
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

IncidenceMatrix incidence_matrix(const OrientedGraph & d)
{
    IncidenceMatrix a{d.order(), d.size(), std::vector<int>(static_cast<std::size_t>(d.order()) * d.size(), 0)};
    for (int e = 0; e < d.size(); ++e) {
        a.entries[static_cast<std::size_t>(d.arc(e).tail) * a.cols + e] = -1;
        a.entries[static_cast<std::size_t>(d.arc(e).head) * a.cols + e] = 1;
    }
    return a;
}

std::vector<int> multidegree(const OrientedGraph & d, const Exponents & u)
{
    if (static_cast<int>(u.size()) != d.size())
        throw GraphError("exponent vector length does not match edge count");
    std::vector<int> b(d.order(), 0);
    for (int e = 0; e < d.size(); ++e) {
        b[d.arc(e).tail] -= u[e];
        b[d.arc(e).head] += u[e];
    }
    return b;
}

Binomial cycle_binomial(const OrientedGraph & d, const Cycle & c)
{
    if (!is_cycle_in(c, d.base()))
        throw PreconditionError(Reason::not_a_cycle, "not a cycle of the base graph");
    Binomial b{Exponents(d.size(), 0), Exponents(d.size(), 0)};
    for (std::size_t i = 0; i < c.length(); ++i) {
        Vertex u = c[i], v = c[i + 1];
        int e = d.base().edge_index(u, v);
        (d.arc(e).tail == u ? b.plus : b.minus)[e] = 1;
    }
    return b;
}

std::vector<Binomial> generating_set(const OrientedGraph & d)
{
    std::vector<Binomial> out;
    for (const auto & c : chordless_cycles(d.base())) {
        auto b = cycle_binomial(d, c);
        if (std::none_of(out.begin(), out.end(), [&](const Binomial & o) { return equal_up_to_sign(o, b); }))
            out.push_back(std::move(b));
    }
    return out;
}

int height(const OrientedGraph & d)
{
    return d.size() - d.order() + d.base().component_count();
}

std::optional<Cycle> oriented_cycle(const OrientedGraph & d)
{
    int n = d.order();
    std::vector<std::vector<Vertex>> out(n);
    for (const auto & a : d.arcs())
        out[a.tail].push_back(a.head);
    std::vector<int> color(n, 0);
    std::vector<Vertex> stack;
    std::optional<Cycle> found;
    auto dfs = [&](auto && self, Vertex v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (Vertex w : out[v]) {
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                found = Cycle(std::vector<Vertex>(it, stack.end()));
                return true;
            }
            if (color[w] == 0 && self(self, w))
                return true;
        }
        stack.pop_back();
        color[v] = 2;
        return false;
    };
    for (Vertex v = 0; v < n; ++v)
        if (color[v] == 0 && dfs(dfs, v))
            return found;
    return std::nullopt;
}

bool has_oriented_cycle(const OrientedGraph & d)
{
    return topological_order(d).size() != static_cast<std::size_t>(d.order());
}

std::vector<Exponents> fiber(const OrientedGraph & d, const std::vector<int> & b, std::size_t cap)
{
    if (static_cast<int>(b.size()) != d.order())
        throw GraphError("multidegree length does not match vertex count");
    auto order = topological_order(d);
    if (order.size() != static_cast<std::size_t>(d.order()))
        throw UnsupportedOrientation();
    std::vector<Exponents> out;
    if (std::accumulate(b.begin(), b.end(), 0LL) != 0)
        return out;

    int n = d.order();
    std::vector<std::vector<int>> out_edges(n);
    for (int e = 0; e < d.size(); ++e)
        out_edges[d.arc(e).tail].push_back(e);
    std::vector<int> inflow(n, 0);
    Exponents u(d.size(), 0);

    // At each vertex in topological order the outflow is fixed by conservation;
    // split it over the out-edges in every possible way.
    auto visit = [&](auto && self, std::size_t idx) -> void {
        if (idx == order.size()) {
            if (out.size() >= cap)
                throw FiberCapExceeded(cap);
            out.push_back(u);
            return;
        }
        Vertex v = order[idx];
        int outflow = inflow[v] - b[v];
        if (outflow < 0)
            return;
        const auto & es = out_edges[v];
        if (es.empty()) {
            if (outflow == 0)
                self(self, idx + 1);
            return;
        }
        auto split = [&](auto && split_self, std::size_t j, int remaining) -> void {
            int e = es[j];
            Vertex h = d.arc(e).head;
            if (j + 1 == es.size()) {
                u[e] = remaining;
                inflow[h] += remaining;
                self(self, idx + 1);
                inflow[h] -= remaining;
                u[e] = 0;
                return;
            }
            for (int a = remaining; a >= 0; --a) {
                u[e] = a;
                inflow[h] += a;
                split_self(split_self, j + 1, remaining - a);
                inflow[h] -= a;
            }
            u[e] = 0;
        };
        split(split, 0, outflow);
    };
    visit(visit, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int fiber_components(const std::vector<Exponents> & fiber)
{
    std::vector<int> parent(fiber.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(fiber.size());
    std::size_t q = fiber.empty() ? 0 : fiber.front().size();
    for (std::size_t i = 0; i < q; ++i) {
        int first = -1;
        for (std::size_t k = 0; k < fiber.size(); ++k) {
            if (fiber[k][i] == 0)
                continue;
            if (first < 0) {
                first = static_cast<int>(k);
                continue;
            }
            int a = find(first), b = find(static_cast<int>(k));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components;
}

int minimal_generator_count(const OrientedGraph & d, std::size_t cap)
{
    if (has_oriented_cycle(d))
        throw UnsupportedOrientation();
    return mu_for_cycles(d, chordless_cycles(d.base()), cap);
}

bool is_binomial_ci(const OrientedGraph & d)
{
    return minimal_generator_count(d) == height(d);
}

int worker_count(int requested)
{
    if (requested > 0)
        return requested;
    if (const char * env = std::getenv("THETA_RING_THREADS")) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min(v, 256L));
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

CioResult cio_search(const Graph & g, CioMode mode, int threads)
{
    CioResult result;
    if (mode == CioMode::all_supported)
        result.warnings.push_back("all_supported mode currently skips orientations with oriented cycles, as acyclic_only does");
    int q = g.size();
    if (q > 40)
        throw PreconditionError(Reason::too_large, "orientation search supports at most 40 edges");
    if (g.order() > 64)
        throw PreconditionError(Reason::too_large, "orientation search supports at most 64 vertices");
    std::uint64_t total = q == 0 ? 1 : std::uint64_t{1} << (q - 1);
    auto cycles = chordless_cycles(g);
    int h = q - g.order() + g.component_count();
    result.height = h;

    std::atomic<std::uint64_t> best{total}, next{0}, examined{0}, skipped{0};
    constexpr std::uint64_t chunk = 64;
    auto work = [&]() {
        while (true) {
            std::uint64_t start = next.fetch_add(chunk);
            if (start >= total || start >= best.load())
                return;
            std::uint64_t stop = std::min(total, start + chunk);
            for (std::uint64_t idx = start; idx < stop && idx < best.load(); ++idx) {
                std::uint64_t mask = idx << 1;
                if (!acyclic_mask(g.order(), g.edges(), mask)) {
                    ++skipped;
                    continue;
                }
                ++examined;
                auto d = OrientedGraph::from_mask(g, mask);
                if (mu_for_cycles(d, cycles, default_fiber_cap) != h) {
                    std::uint64_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    return;
                }
            }
        }
    };
    int workers = static_cast<int>(std::min<std::uint64_t>(worker_count(threads), (total + chunk - 1) / chunk));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }

    result.examined = examined.load();
    result.skipped_cyclic = skipped.load();
    if (best.load() < total) {
        result.witness_found = true;
        result.index = best.load();
        auto d = OrientedGraph::from_mask(g, result.index << 1);
        result.mu = mu_for_cycles(d, cycles, default_fiber_cap);
        result.orientation = std::move(d);
    }
    return result;
}

Binomial combine_cycles(const OrientedGraph & d, const Cycle & c1, const Cycle & c2)
{
    const Graph & g = d.base();
    if (!is_cycle_in(c1, g) || !is_cycle_in(c2, g))
        throw PreconditionError(Reason::not_a_cycle, "both arguments must be cycles of the base graph");
    auto e1 = c1.edge_indices(g), e2 = c2.edge_indices(g);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    std::vector<int> shared, diff;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
    std::set_symmetric_difference(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(diff));
    auto fail = [](const std::string & why) { return PreconditionError(Reason::not_an_oriented_path, why); };
    if (shared.empty())
        throw fail("cycles share no edge");

    std::map<Vertex, int> in, out;
    for (int e : shared) {
        ++out[d.arc(e).tail];
        ++in[d.arc(e).head];
    }
    std::set<Vertex> path_vertices;
    int sources = 0;
    for (int e : shared)
        for (Vertex v : {d.arc(e).tail, d.arc(e).head}) {
            path_vertices.insert(v);
            if (in[v] > 1 || out[v] > 1)
                throw fail("shared edges are not an oriented path");
        }
    for (Vertex v : path_vertices)
        if (in[v] == 0)
            ++sources;
    if (sources != 1 || path_vertices.size() != shared.size() + 1)
        throw fail("shared edges are not a single oriented path");
    std::set<Vertex> common;
    for (Vertex v : c1.vertices())
        if (c2.contains(v))
            common.insert(v);
    if (common != path_vertices)
        throw fail("cycles meet outside their shared path");

    // The symmetric difference is a single cycle through the remaining edges.
    std::map<Vertex, std::vector<Vertex>> adj;
    for (int e : diff) {
        auto [u, v] = g.edges()[e];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Vertex> walk{adj.begin()->first};
    Vertex prev = -1;
    while (true) {
        Vertex cur = walk.back();
        const auto & nb = adj[cur];
        if (nb.size() != 2)
            throw std::logic_error("symmetric difference of the cycles is not a cycle");
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        if (nxt == walk.front())
            break;
        prev = cur;
        walk.push_back(nxt);
    }
    if (walk.size() != diff.size())
        throw std::logic_error("symmetric difference of the cycles is not a cycle");
    Cycle c3(walk);

    Exponents on_path(d.size(), 0);
    for (int e : shared)
        on_path[e] = 1;
    auto oriented = [&](const Cycle & c) {
        auto b = cycle_binomial(d, c);
        return b.plus[shared.front()] ? b : b.negated();
    };
    auto b1 = oriented(c1), b2 = oriented(c2);
    Exponents a1(d.size()), a2(d.size());
    for (int i = 0; i < d.size(); ++i) {
        a1[i] = b1.plus[i] - on_path[i];
        a2[i] = b2.plus[i] - on_path[i];
    }
    Poly lhs, rhs;
    add_scaled(lhs, a2, b1, 1);
    add_scaled(lhs, a1, b2, -1);
    Binomial target{mono_mul(a1, b2.minus), mono_mul(a2, b1.minus)};
    add_scaled(rhs, Exponents(d.size(), 0), target, 1);
    if (lhs != rhs)
        throw std::logic_error("cycle combination identity failed");
    auto b3 = cycle_binomial(d, c3);
    if (!equal_up_to_sign(b3, target))
        throw std::logic_error("combined binomial differs from the cycle binomial of the symmetric difference");
    return b3;
}

Path hamiltonian_oriented_path(const OrientedGraph & d)
{
    if (!d.base().is_complete())
        throw PreconditionError(Reason::not_complete, "base graph is not complete");
    std::vector<Vertex> all(d.order());
    std::iota(all.begin(), all.end(), 0);
    return hamiltonian_on(d, all);
}

std::vector<Binomial> chordal_ci_generators(const OrientedGraph & d)
{
    const Graph & g = d.base();
    if (!g.is_connected())
        throw PreconditionError(Reason::not_connected, "base graph is not connected");
    if (!is_chordal(g).chordal)
        throw PreconditionError(Reason::not_chordal, "base graph is not chordal");
    std::vector<char> alive(g.order(), 1);
    std::vector<Binomial> out;
    for (int round = 0; round < g.order(); ++round) {
        Vertex x = -1;
        std::vector<Vertex> nb;
        for (Vertex v = 0; v < g.order() && x < 0; ++v) {
            if (!alive[v])
                continue;
            nb.clear();
            for (Vertex w : g.neighbors(v))
                if (alive[w])
                    nb.push_back(w);
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    clique = g.adjacent(nb[i], nb[j]);
            if (clique)
                x = v;
        }
        if (x < 0)
            throw std::logic_error("chordal graph without a simplicial vertex");
        auto path = hamiltonian_on(d, nb).vertices;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            out.push_back(cycle_binomial(d, Cycle({x, path[i], path[i + 1]})));
        alive[x] = 0;
    }
    if (static_cast<int>(out.size()) != g.size() - g.order() + 1)
        throw std::logic_error("chordal generator count differs from q - n + 1");
    return out;
}

std::string to_string(const Binomial & b)
{
    auto side = [](const Exponents & e) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                s += "t" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        return s.empty() ? std::string("1") : s;
    };
    return side(b.plus) + " - " + side(b.minus);
}

Binomial parse_binomial(std::string_view text, int q)
{
    auto cut = text.find(" - ");
    if (cut == std::string_view::npos)
        throw GraphError("binomial must have the form `lhs - rhs`");
    return {parse_monomial(text.substr(0, cut), q), parse_monomial(text.substr(cut + 3), q)};
}

OrientedGraph parse_orientation(std::istream & in, const Graph & base)
{
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };
    if (!next_line())
        throw ParseError(lineno + 1, "missing header `n m`");
    {
        std::istringstream ss(line);
        long long n = -1, m = -1;
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw ParseError(lineno, "header must be `n m`");
        if (n != base.order() || m != base.size())
            throw ParseError(lineno, "header does not match the graph");
    }
    std::vector<std::optional<Arc>> arcs(base.size());
    for (int k = 0; k < base.size(); ++k) {
        if (!next_line())
            throw ParseError(lineno + 1, "expected " + std::to_string(base.size()) + " arc lines");
        std::istringstream ss(line);
        long long i = -1, t = -1, h = -1;
        std::string extra;
        if (!(ss >> i >> t >> h) || (ss >> extra))
            throw ParseError(lineno, "arc line must be `i tail head`");
        if (i < 0 || i >= base.size())
            throw ParseError(lineno, "edge index out of range");
        if (arcs[i])
            throw ParseError(lineno, "edge index given twice");
        auto [u, v] = base.edges()[i];
        if (!((t == u && h == v) || (t == v && h == u)))
            throw ParseError(lineno, "arc does not match edge " + std::to_string(i));
        arcs[i] = Arc{static_cast<Vertex>(t), static_cast<Vertex>(h)};
    }
    if (next_line())
        throw ParseError(lineno, "unexpected content after the arc lines");
    std::vector<Arc> list;
    for (auto & a : arcs)
        list.push_back(*a);
    return {base, list};
}

OrientedGraph parse_orientation(std::string_view text, const Graph & base)
{
    std::istringstream in{std::string(text)};
    return parse_orientation(in, base);
}

std::string to_orientation_text(const OrientedGraph & d)
{
    std::ostringstream out;
    out << d.order() << ' ' << d.size() << '\n';
    for (int i = 0; i < d.size(); ++i)
        out << i << ' ' << d.arc(i).tail << ' ' << d.arc(i).head << '\n';
    return out.str();
}

} // namespace thetaring
