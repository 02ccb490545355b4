#pragma once

#include "vhh/report.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace vhh {

// Acyclic edge set over labeled vertices 0..n-1.
struct Forest {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool is_spanning_tree() const;
};

// All forests on n labeled vertices (n <= 7; larger inputs are refused and
// the refusal carries the count that would have been produced).
std::vector<Forest> enumerate_forests(int n);

// Independent count via the component recurrence (oracle for the above).
long long count_forests(int n);

long long count_spanning_trees_cayley(int n);  // n^{n-2}

// Nested forest sequence; layer k holds the edges added at scale k (1-based).
// The union up to any layer must stay acyclic.
struct Jungle {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> layers;

    int num_layers() const { return static_cast<int>(layers.size()); }
    std::vector<std::pair<int, int>> all_edges() const;
    bool connected() const;
    void validate() const;  // throws StructuralError on cycles/bad endpoints
};

Jungle random_jungle(int n, int max_layers, std::mt19937_64& rng,
                     bool force_connected = false);

// All (final forest, layer assignment) pairs with at most max_layers layers.
std::vector<Jungle> enumerate_jungles(int n, int max_layers);

// Interpolation-weight matrix: entry (i,j) is 1 on the diagonal, 0 for
// disconnected pairs, otherwise the minimum effective weight along the unique
// path in the final forest. Edges of layers before the last are pinned at 1;
// `w_last` gives the weights of the last layer's edges in enumeration order.
std::vector<std::vector<double>> interpolation_matrix(
    const Jungle& jungle, const std::vector<double>& w_last);

// Minimum eigenvalue via a dense selfadjoint solve.
double min_eigenvalue(const std::vector<std::vector<double>>& m);

// Fields and their contraction history on top of a jungle. Fields are
// numbered 0..fields_per_vertex-1 at each vertex; any field not named in a
// contraction is external.
struct Contraction {
    int u = 0, field_u = 0;
    int v = 0, field_v = 0;
    int scale = 1;  // layer at which the pair contracts
};

struct GNInput {
    Jungle jungle;
    int fields_per_vertex = 4;
    std::vector<Contraction> contractions;
};

// One scale-r connected component with its external-field count.
struct GNNode {
    int scale = 0;
    int component = 0;   // representative vertex
    int e_count = 0;     // fields still uncontracted at this scale
    int parent = -1;     // index into the node list, -1 at the root level
};

struct GNTree {
    std::vector<GNNode> nodes;
    int r_max = 0;
    bool connected = false;
};

// Throws StructuralError naming the field when a contraction joins vertices
// that are not yet in a common component at its scale.
GNTree build_gn_tree(const GNInput& input);

// The two exponent identities, tracked in exact quarter-integer units.
struct InductionCheck {
    bool fields_ok = false;     // product over fields vs product over nodes
    bool tree_ok = false;       // product over tree edges vs node count
    bool tree_applicable = false;  // second identity needs a connected jungle
    long long lhs_fields_q4 = 0, rhs_fields_q4 = 0;
    long long lhs_tree_q4 = 0, rhs_tree_q4 = 0;
};
InductionCheck verify_induction(const GNInput& input);

// Deterministic random field assignment for property tests.
GNInput random_gn_input(const Jungle& jungle, std::mt19937_64& rng);

enum class PowerClass { relevant, marginal, irrelevant };
std::string to_string(PowerClass c);

struct PowerCount {
    int exponent_q4 = 0;  // 4 * (2 - e/2)
    PowerClass cls = PowerClass::irrelevant;
};
// e must be even and >= 2; otherwise StructuralError.
PowerCount power_count(int e_count);

} // namespace vhh
