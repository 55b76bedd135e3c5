#include "quadforest/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace qf {

int BitRow::count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitRow::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

bool BitRow::intersects(const BitRow& o) const {
    size_t m = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < m; ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::vector<int> BitRow::to_vector() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet::VertexSet(std::initializer_list<int> init) : ids(init) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

VertexSet::VertexSet(std::vector<int> v) : ids(std::move(v)) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids.begin(), ids.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) ids.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it != ids.end() && *it == v) ids.erase(it);
}

VertexSet VertexSet::unite(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
                   std::back_inserter(r.ids));
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
                          std::back_inserter(r.ids));
    return r;
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, BitRow(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" +
                             std::to_string(v));
        if (u == v)
            throw GraphError("loop edge rejected: " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    q.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto c = components();
    int m = 0;
    for (int x : c) m = std::max(m, x + 1);
    return m;
}

bool Graph::connected() const { return n_ <= 1 || component_count() == 1; }

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g, const VertexSet& s) {
    for (int v : s.ids)
        if (v < 0 || v >= g.n()) throw GraphError("delete_vertices: id out of range");
    std::vector<int> old2new(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!s.contains(v)) old2new[v] = next++;
    Graph h;
    h.n_ = next;
    h.adj_.assign(next, BitRow(next));
    for (int u = 0; u < g.n(); ++u) {
        if (old2new[u] == -1) continue;
        for (int w : g.neighbors(u)) {
            if (old2new[w] == -1) continue;
            h.adj_[old2new[u]].set(old2new[w]);
        }
    }
    return {std::move(h), std::move(old2new)};
}

std::pair<Graph, std::vector<int>> identify(const Graph& g, const std::vector<VertexSet>& groups) {
    std::vector<int> group_of(g.n(), -1);
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        for (int v : groups[gi].ids) {
            if (v < 0 || v >= g.n()) throw GraphError("identify: id out of range");
            if (group_of[v] != -1) throw GraphError("identify: groups not disjoint");
            group_of[v] = static_cast<int>(gi);
        }
        for (int u : groups[gi].ids)
            for (int w : groups[gi].ids)
                if (u < w && g.adjacent(u, w)) throw LoopWouldForm(u, w);
    }
    // The merged vertex takes the slot of its smallest member.
    std::vector<int> old2new(g.n(), -1);
    std::vector<int> group_new(groups.size(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        int gi = group_of[v];
        if (gi == -1) {
            old2new[v] = next++;
        } else if (group_new[gi] == -1) {
            group_new[gi] = next++;
            old2new[v] = group_new[gi];
        } else {
            old2new[v] = group_new[gi];
        }
    }
    Graph h;
    h.n_ = next;
    h.adj_.assign(next, BitRow(next));
    for (int u = 0; u < g.n(); ++u)
        for (int w : g.neighbors(u)) {
            int a = old2new[u], b = old2new[w];
            if (a == b) throw LoopWouldForm(u, w);
            h.adj_[a].set(b);
            h.adj_[b].set(a);
        }
    return {std::move(h), std::move(old2new)};
}

Graph graph_with_edge(const Graph& g, int u, int v) {
    if (u == v) throw GraphError("add_edge: loop rejected");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw GraphError("add_edge: endpoint out of range");
    if (g.adjacent(u, v)) return g;
    Graph h = g;
    h.adj_[u].set(v);
    h.adj_[v].set(u);
    return h;
}

bool induces_forest(const Graph& g, const VertexSet& s) {
    // union-find over edges inside S
    std::vector<int> parent(g.n());
    for (int v : s.ids) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u : s.ids)
        for (int w : g.neighbors(u)) {
            if (w <= u || !s.contains(w)) continue;
            int a = find(u), b = find(w);
            if (a == b) return false;
            parent[a] = b;
        }
    return true;
}

std::optional<std::vector<int>> find_cycle_in_subset(const Graph& g, const VertexSet& s) {
    // DFS keeping the active path so the returned cycle is genuine.
    std::vector<int> state(g.n(), 0), par(g.n(), -1);
    std::optional<std::vector<int>> found;
    auto dfs = [&](auto&& self, int u, int from) -> bool {
        state[u] = 1;
        par[u] = from;
        for (int w : g.neighbors(u)) {
            if (!s.contains(w) || w == from) continue;
            if (state[w] == 1) {  // ancestor on the active path
                std::vector<int> cyc{w};
                for (int x = u; x != w; x = par[x]) cyc.push_back(x);
                found = cyc;
                return true;
            }
            if (state[w] == 0 && self(self, w, u)) return true;
        }
        state[u] = 2;
        return false;
    };
    for (int root : s.ids)
        if (state[root] == 0 && dfs(dfs, root, -1)) return found;
    return std::nullopt;
}

}  // namespace qf
