#include "vhh/forest.hpp"
#include "vhh/util.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

namespace vhh {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;  // smaller label wins: canonical reps
        return true;
    }
};

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

} // namespace

bool Forest::is_spanning_tree() const {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    Dsu dsu(n);
    for (auto [a, b] : edges)
        if (!dsu.unite(a, b)) return false;
    return true;
}

std::vector<Forest> enumerate_forests(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_forests: n >= 1");
    if (n > 7) {
        throw NumericRefusal("enumerate_forests: n > 7 refused", count_forests(n));
    }
    const auto pairs = all_pairs(n);
    std::vector<Forest> out;
    std::vector<std::pair<int, int>> current;

    // depth-first include/exclude over the ordered edge list; a cycle-closing
    // edge can never become acyclic again, so pruning at include is complete
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == pairs.size()) {
            out.push_back(Forest{n, current});
            return;
        }
        self(self, idx + 1);
        Dsu dsu(n);
        bool acyclic = true;
        for (auto [a, b] : current)
            if (!dsu.unite(a, b)) acyclic = false;
        if (acyclic && dsu.unite(pairs[idx].first, pairs[idx].second)) {
            current.push_back(pairs[idx]);
            self(self, idx + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long long count_forests(int n) {
    // f(n) = sum_k C(n-1, k-1) k^{k-2} f(n-k): split off the component of
    // the lowest-labeled vertex.
    std::vector<long long> f(static_cast<size_t>(n) + 1, 0);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1; k <= m; ++k) {
            long long binom = 1;
            for (int i = 0; i < k - 1; ++i) binom = binom * (m - 1 - i) / (i + 1);
            long long trees = 1;
            for (int i = 0; i < k - 2; ++i) trees *= k;
            total += binom * trees * f[static_cast<size_t>(m - k)];
        }
        f[static_cast<size_t>(m)] = total;
    }
    return f[static_cast<size_t>(n)];
}

long long count_spanning_trees_cayley(int n) {
    if (n == 1) return 1;
    long long t = 1;
    for (int i = 0; i < n - 2; ++i) t *= n;
    return t;
}

std::vector<std::pair<int, int>> Jungle::all_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

bool Jungle::connected() const {
    Dsu dsu(n);
    int comps = n;
    for (auto [a, b] : all_edges())
        if (dsu.unite(a, b)) --comps;
    return comps == 1;
}

void Jungle::validate() const {
    Dsu dsu(n);
    for (const auto& layer : layers) {
        for (auto [a, b] : layer) {
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw StructuralError("jungle: bad edge endpoints");
            if (!dsu.unite(a, b)) throw StructuralError("jungle: cycle within nested forests");
        }
    }
}

Jungle random_jungle(int n, int max_layers, std::mt19937_64& rng,
                     bool force_connected) {
    auto pairs = all_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    Jungle j;
    j.n = n;
    j.layers.assign(static_cast<size_t>(max_layers), {});
    Dsu dsu(n);
    for (auto [a, b] : pairs) {
        const bool take = force_connected || (rng() & 1);
        if (!take) continue;
        if (dsu.find(a) == dsu.find(b)) continue;
        dsu.unite(a, b);
        const size_t layer = rng() % static_cast<unsigned>(max_layers);
        j.layers[layer].push_back({a, b});
    }
    return j;
}

std::vector<Jungle> enumerate_jungles(int n, int max_layers) {
    std::vector<Jungle> out;
    for (const auto& forest : enumerate_forests(n)) {
        const size_t m = forest.edges.size();
        std::vector<int> assign(m, 0);
        while (true) {
            Jungle j;
            j.n = n;
            j.layers.assign(static_cast<size_t>(max_layers), {});
            for (size_t i = 0; i < m; ++i)
                j.layers[static_cast<size_t>(assign[i])].push_back(forest.edges[i]);
            out.push_back(std::move(j));
            // odometer over layer assignments
            size_t pos = 0;
            while (pos < m && assign[pos] == max_layers - 1) assign[pos++] = 0;
            if (pos == m) break;
            ++assign[pos];
        }
        if (m == 0 && max_layers > 0) continue;  // empty forest emitted once above
    }
    return out;
}

std::vector<std::vector<double>> interpolation_matrix(
    const Jungle& jungle, const std::vector<double>& w_last) {
    jungle.validate();
    const int n = jungle.n;
    const int m = jungle.num_layers();

    struct Adj {
        int to;
        double w;
    };
    std::vector<std::vector<Adj>> adj(static_cast<size_t>(n));
    size_t last_idx = 0;
    for (int layer = 0; layer < m; ++layer) {
        for (auto [a, b] : jungle.layers[static_cast<size_t>(layer)]) {
            double w = 1.0;  // earlier layers are fully interpolated
            if (layer == m - 1) {
                if (last_idx >= w_last.size())
                    throw std::invalid_argument("interpolation_matrix: too few weights");
                w = w_last[last_idx++];
                if (w < 0.0 || w > 1.0)
                    throw std::invalid_argument("interpolation_matrix: weights must lie in [0,1]");
            }
            adj[static_cast<size_t>(a)].push_back({b, w});
            adj[static_cast<size_t>(b)].push_back({a, w});
        }
    }
    if (last_idx != w_last.size())
        throw std::invalid_argument("interpolation_matrix: too many weights");

    std::vector<std::vector<double>> x(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int src = 0; src < n; ++src) {
        // min weight along the unique path: DFS over the forest
        std::vector<int> stack{src};
        std::vector<double> best(static_cast<size_t>(n), -1.0);
        best[static_cast<size_t>(src)] = 1.0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& e : adj[static_cast<size_t>(v)]) {
                if (best[static_cast<size_t>(e.to)] >= 0.0) continue;
                best[static_cast<size_t>(e.to)] =
                    std::min(best[static_cast<size_t>(v)], e.w);
                stack.push_back(e.to);
            }
        }
        for (int dst = 0; dst < n; ++dst)
            x[static_cast<size_t>(src)][static_cast<size_t>(dst)] =
                (best[static_cast<size_t>(dst)] >= 0.0) ? best[static_cast<size_t>(dst)] : 0.0;
    }
    return x;
}

double min_eigenvalue(const std::vector<std::vector<double>>& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd mat(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            mat(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    return solver.eigenvalues().minCoeff();
}

GNTree build_gn_tree(const GNInput& input) {
    input.jungle.validate();
    const int n = input.jungle.n;
    const int m = input.jungle.num_layers();
    const int fpv = input.fields_per_vertex;

    // contraction scale per field; 0 = external
    std::vector<int> scale_of(static_cast<size_t>(n * fpv), 0);
    auto fid = [&](int v, int f) { return static_cast<size_t>(v * fpv + f); };
    for (const auto& c : input.contractions) {
        for (auto [v, f] : {std::pair{c.u, c.field_u}, std::pair{c.v, c.field_v}}) {
            if (v < 0 || v >= n || f < 0 || f >= fpv)
                throw StructuralError("gn-tree: field out of range at vertex " +
                                      std::to_string(v));
            if (scale_of[fid(v, f)] != 0)
                throw StructuralError("gn-tree: field contracted twice: vertex " +
                                      std::to_string(v) + " field " + std::to_string(f));
            if (c.scale < 1 || c.scale > m)
                throw StructuralError("gn-tree: contraction scale out of range");
            scale_of[fid(v, f)] = c.scale;
        }
    }

    GNTree tree;
    tree.r_max = m;
    tree.connected = input.jungle.connected();

    Dsu dsu(n);
    std::vector<int> prev_node_of_rep(static_cast<size_t>(n), -1);
    for (int r = 0; r <= m; ++r) {
        if (r > 0) {
            for (auto [a, b] : input.jungle.layers[static_cast<size_t>(r - 1)])
                dsu.unite(a, b);
            for (const auto& c : input.contractions) {
                if (c.scale == r && dsu.find(c.u) != dsu.find(c.v))
                    throw StructuralError(
                        "gn-tree: contraction at scale " + std::to_string(r) +
                        " joins disconnected vertices " + std::to_string(c.u) + " and " +
                        std::to_string(c.v) + " (field " + std::to_string(c.field_u) + ")");
            }
        }
        std::vector<int> e_of_rep(static_cast<size_t>(n), 0);
        std::vector<char> is_seen(static_cast<size_t>(n), 0);
        std::vector<int> seen;
        for (int v = 0; v < n; ++v) {
            const int rep = dsu.find(v);
            if (!is_seen[static_cast<size_t>(rep)]) {
                is_seen[static_cast<size_t>(rep)] = 1;
                seen.push_back(rep);
            }
            for (int f = 0; f < fpv; ++f) {
                const int sc = scale_of[fid(v, f)];
                if (sc == 0 || sc > r) ++e_of_rep[static_cast<size_t>(rep)];
            }
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> node_of_rep(static_cast<size_t>(n), -1);
        for (int rep : seen) {
            GNNode node;
            node.scale = r;
            node.component = rep;
            node.e_count = e_of_rep[static_cast<size_t>(rep)];
            node.parent = -1;
            node_of_rep[static_cast<size_t>(rep)] = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back(node);
        }
        if (r > 0) {
            // each previous-scale component has exactly one parent here
            for (int v = 0; v < n; ++v) {
                const int prev = prev_node_of_rep[static_cast<size_t>(v)];
                if (prev < 0) continue;
                tree.nodes[static_cast<size_t>(prev)].parent =
                    node_of_rep[static_cast<size_t>(dsu.find(v))];
            }
        }
        prev_node_of_rep.assign(static_cast<size_t>(n), -1);
        for (int rep : seen)
            prev_node_of_rep[static_cast<size_t>(rep)] = node_of_rep[static_cast<size_t>(rep)];
    }
    return tree;
}

InductionCheck verify_induction(const GNInput& input) {
    const GNTree tree = build_gn_tree(input);
    const int m = input.jungle.num_layers();
    const int n = input.jungle.n;
    const int fpv = input.fields_per_vertex;

    InductionCheck chk;

    // per-field tally: external fields carry scale m+1
    std::vector<int> scale_of(static_cast<size_t>(n * fpv), m + 1);
    for (const auto& c : input.contractions) {
        scale_of[static_cast<size_t>(c.u * fpv + c.field_u)] = c.scale;
        scale_of[static_cast<size_t>(c.v * fpv + c.field_v)] = c.scale;
    }
    long long lhs = 0;
    for (int s : scale_of) lhs += 2LL * s;  // gamma^{-r_f/2} in quarter units
    long long rhs = 0;
    for (const auto& node : tree.nodes) rhs += 2LL * node.e_count;
    chk.lhs_fields_q4 = -lhs;
    chk.rhs_fields_q4 = -rhs;
    chk.fields_ok = (lhs == rhs);

    chk.tree_applicable = tree.connected;
    if (tree.connected) {
        long long lhs_t = 0;
        for (int layer = 0; layer < m; ++layer)
            lhs_t += 8LL * (layer + 1) *
                     static_cast<long long>(input.jungle.layers[static_cast<size_t>(layer)].size());
        const long long rhs_t =
            -4LL * (2LL * m + 2LL) + 8LL * static_cast<long long>(tree.nodes.size());
        chk.lhs_tree_q4 = lhs_t;
        chk.rhs_tree_q4 = rhs_t;
        chk.tree_ok = (lhs_t == rhs_t);
    }
    return chk;
}

GNInput random_gn_input(const Jungle& jungle, std::mt19937_64& rng) {
    GNInput input;
    input.jungle = jungle;
    input.fields_per_vertex = 4;
    const int n = jungle.n;
    const int m = jungle.num_layers();
    std::vector<char> used(static_cast<size_t>(n * 4), 0);

    Dsu dsu(n);
    for (int r = 1; r <= m; ++r) {
        for (auto [a, b] : jungle.layers[static_cast<size_t>(r - 1)]) dsu.unite(a, b);
        const int tries = static_cast<int>(rng() % 3);
        for (int t = 0; t < tries; ++t) {
            const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
            const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (dsu.find(u) != dsu.find(v)) continue;
            int fu = -1, fv = -1;
            for (int f = 0; f < 4; ++f)
                if (!used[static_cast<size_t>(u * 4 + f)]) { fu = f; break; }
            for (int f = 3; f >= 0; --f)
                if (!used[static_cast<size_t>(v * 4 + f)] && !(v == u && f == fu)) { fv = f; break; }
            if (fu < 0 || fv < 0) continue;
            used[static_cast<size_t>(u * 4 + fu)] = 1;
            used[static_cast<size_t>(v * 4 + fv)] = 1;
            input.contractions.push_back({u, fu, v, fv, r});
        }
    }
    return input;
}

std::string to_string(PowerClass c) {
    switch (c) {
        case PowerClass::relevant: return "relevant";
        case PowerClass::marginal: return "marginal";
        case PowerClass::irrelevant: return "irrelevant";
    }
    return "?";
}

PowerCount power_count(int e_count) {
    if (e_count < 2 || e_count % 2 != 0)
        throw StructuralError("power_count: external field count must be even and >= 2");
    PowerCount pc;
    pc.exponent_q4 = 8 - 2 * e_count;
    if (e_count == 2) pc.cls = PowerClass::relevant;
    else if (e_count == 4) pc.cls = PowerClass::marginal;
    else pc.cls = PowerClass::irrelevant;
    return pc;
}

} // namespace vhh
