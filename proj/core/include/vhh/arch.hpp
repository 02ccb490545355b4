#pragma once

#include "vhh/report.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace vhh {

// Parallel edges are meaningful; identity is the id field, never the
// endpoint pair. The (j, s_plus, s_minus) labels ride along for ring index
// extraction; r2() is their sum, twice the half-integer combined index.
struct Edge {
    int id = 0;
    int a = 0, b = 0;
    int j = 0;
    int s_plus = 0, s_minus = 0;
    int r2() const { return j + s_plus + s_minus; }
};

struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;
    int add_edge(int a, int b, int j = 0, int s_plus = 0, int s_minus = 0);
    // y-z connectivity with the listed edge ids removed.
    bool connected_without(int y, int z, const std::vector<int>& removed_ids) const;
    // y-z connectivity with one vertex (and its edges) removed.
    bool connected_without_vertex(int y, int z, int v) const;
};

// Irreducibility in the y-z channel: deleting any single edge (resp. any
// pair of edges) leaves y and z connected. Brute force by construction.
bool is_1pi(const Multigraph& g, int y, int z);
bool is_2pi(const Multigraph& g, int y, int z);
// No internal vertex whose removal separates y from z.
bool one_vertex_irreducible(const Multigraph& g, int y, int z);

// Edmonds-Karp with unit edge capacities (parallel edges each count once).
int max_flow_edges(const Multigraph& g, int y, int z);
// Unit vertex capacities on internal vertices via vertex splitting.
int max_flow_vertices(const Multigraph& g, int y, int z);

// A half-edge left over after the tree is built, owned by a vertex.
struct Field {
    int vertex = 0;
    int slot = 0;
};

// Tree with two marked external vertices. extra_fields[v] counts the
// leftover fields at v beyond the tree lines. Packets F_0..F_p group the
// leftover fields by the branch hanging at each vertex of the y-z path.
struct DecoratedTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int y = 0, z = 1;
    std::vector<int> extra_fields;

    std::vector<int> path() const;  // y..z vertex list; StructuralError if y==z
    int branch_of(int v) const;     // path position whose branch holds v
    std::vector<std::vector<Field>> packets() const;
};

// Straight path on n vertices, y and z at the ends, uniform leftover count.
DecoratedTree path_tree(int n, int leftover_per_vertex);

// Loop line from field f (packet `start`) to field g (packet `arrive`).
struct Arch {
    Field f, g;
    int start = 0, arrive = 0;
};

// Ordered arches with nondecreasing arrivals ending at F_p; arch u draws f
// from packets 0..k_{u-1} and must move forward (start < arrive).
struct ArchSystem {
    std::vector<Arch> arches;
    std::vector<int> flyover;  // q_u = arches with start <= start_u, arrive > arrive_u
    double weight = 1.0;       // product of 1/(q_u+1)
    bool minimal = true;       // no arch is flown over
};

void flyover_weights(ArchSystem& sys);

// All admissible systems; fields already marked in `used` are skipped
// (vertex*max_slots + slot indexing, see field_key). Throws NumericRefusal
// carrying the running count when `cap` is exceeded.
std::vector<ArchSystem> enumerate_arch_systems(const DecoratedTree& tree,
                                               bool minimal_only = false,
                                               const std::vector<char>* used = nullptr,
                                               long long cap = 4000000);

// Second-level systems on top of `base`: admissible among the fields base
// leaves free, minimal, strictly covering every internal path vertex i
// (some arch has start < i < arrive), and completing the realized graph to
// two-line irreducibility (edge max-flow >= 3 between y and z). The flow
// filter implements the outcome contract of the second expansion; the
// deletion oracles stay independent of it.
std::vector<ArchSystem> enumerate_strict_systems(const DecoratedTree& tree,
                                                 const ArchSystem& base,
                                                 long long cap = 4000000);

size_t field_key(const DecoratedTree& tree, const Field& f);
std::vector<char> mark_used(const DecoratedTree& tree, const ArchSystem& sys,
                            const std::vector<char>* base = nullptr);

// Tree edges first (ids 0..n-2), then the arch edges of each level in order.
Multigraph realize(const DecoratedTree& tree,
                   const std::vector<const ArchSystem*>& levels);

// A contracted two-point insertion: the ring must leave at least two of its
// attachment edges unused.
struct BipedNode {
    int vertex = 0;
    std::vector<int> external_edge_ids;
};

struct Ring {
    bool found = false;
    std::vector<int> path1, path2;    // edge-id sequences, share only y and z
    std::vector<int> verts1, verts2;  // vertex sequences including endpoints
    int r_ring = 0;        // max edge r2 over the ring, minimized over rings
    int s_plus_ring = 0;   // labels of the extremal edge (largest r2,
    int s_minus_ring = 0;  // smallest id among ties)
    int j_ring = 0;
    int r_rt_x2 = 0;       // j_ring + s_plus_ring + s_minus_ring, exactly
    std::string certificate;  // set when no admissible ring exists
};

// Threshold scan certified by unit-vertex-capacity max-flow, then the
// lexicographically smallest admissible pair (sorted edge ids) at the
// minimal threshold.
Ring find_ring(const Multigraph& g, int y, int z,
               const std::vector<BipedNode>& bipeds);
// Exhaustive two-path search over all simple y-z paths (oracle).
Ring find_ring_bruteforce(const Multigraph& g, int y, int z,
                          const std::vector<BipedNode>& bipeds);

// Random graph on n vertices that is 2PI and one-vertex-irreducible in the
// y=0, z=1 channel, with random edge labels.
Multigraph random_2pi_graph(int n, std::mt19937_64& rng);

// All tree shapes (isomorphism classes) on n vertices.
std::vector<std::vector<std::pair<int, int>>> tree_shapes(int n);

BoundReport arch_suite(std::mt19937_64& rng);

} // namespace vhh
