#ifndef QFR_QUIVER_HPP
#define QFR_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

namespace qfr {

struct Arrow {
    std::string id;
    int tail;  // 1-based vertex
    int head;

    bool is_loop() const { return tail == head; }
};

/// Finite directed multigraph with named arrows. Vertices are 1..vertex_count.
/// Validated on construction; immutable afterwards.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(const std::string& id) const;
    bool has_arrow(const std::string& id) const;

    /// Arrow indices leaving the given vertex.
    const std::vector<std::size_t>& out_arrows(int vertex) const;

    bool is_connected() const;  // underlying undirected graph
    std::vector<std::vector<int>> connected_components() const;
    void check_vertex(int v, const char* who) const;

private:
    int vertex_count_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::size_t>> out_;  // per vertex, 0-based position
};

/// Nonempty arrow walk in traversal order: head(arrows[k]) = tail(arrows[k+1]).
struct Path {
    std::vector<std::string> arrow_ids;

    std::size_t length() const { return arrow_ids.size(); }
};

/// Geodesic distance along directed arrows; d(i,i) = 0; nullopt = unreachable.
std::optional<int> distance(const Quiver& q, int i, int j);

/// True iff the arrow-id word of p contains no consecutive square factor ww.
/// This is the concrete membership test for the class of the path being
/// nonzero in the path algebra modulo squares of positive-length paths.
/// Throws PreconditionError when p is not composable in q.
bool is_reduced_path(const Quiver& q, const Path& p);

struct PathwayCount {
    long count = 0;
    bool truncated = false;  // the length bound cut off an extensible square-free prefix
};

/// Counts pathways (square-free nontrivial paths) from i to j. Enumeration
/// stops as soon as `cap` pathways are found; `truncated` reports only
/// length-bound pruning witnessed before that point.
PathwayCount count_pathways(const Quiver& q, int i, int j, long cap, int max_len);

/// Collects the pathways themselves (same enumeration as count_pathways).
std::vector<Path> enumerate_pathways(const Quiver& q, int i, int j, long cap, int max_len,
                                     bool* truncated = nullptr);

bool has_loop(const Quiver& q);

struct KroneckerPair {
    int i, j;     // i < j
    long forward;  // cycle-free nontrivial paths i -> j
    long backward; // cycle-free nontrivial paths j -> i
};

/// Number of vertex-simple nontrivial directed paths i -> j (i != j).
long count_simple_paths(const Quiver& q, int i, int j);

/// All unordered pairs {i,j} whose cycle-free path counts m, n satisfy
/// m + n >= k_min. The pair geometry of a k-generalized path Kronecker
/// subquiver.
std::vector<KroneckerPair> detect_local_path_kronecker(const Quiver& q, int k_min);

/// Center of a 1-step star: one hub, every other vertex a leaf carrying
/// exactly one arrow to or from the hub, no loops, no leaf-leaf arrows.
/// For the two-vertex single-arrow quiver both vertices qualify; the smaller
/// id is returned.
std::optional<int> is_one_step_star_shaped(const Quiver& q);

enum class Route {
    /// A loop or a local path-Kronecker pair (k >= 2) exists, so generic
    /// points have trivial unipotent stabilizer and the quotient dimension is
    /// the free-action count dim V - dim G.
    TrivialStabilizer,
    /// At most two pathways between any two vertices: the unipotent invariants
    /// are exactly the per-arrow diagonal (Cartan) coordinates.
    CartanDiagonal,
    /// Enumeration limits prevented a decision.
    Undetermined,
};

std::string route_name(Route r);

struct ClassificationCaps {
    long cap = 3;
    int max_len = 0;  // 0 = derive max(8, 3 * |Q_1|)

    int effective_max_len(const Quiver& q) const;
};

struct ClassificationReport {
    bool has_loop = false;
    std::vector<KroneckerPair> kronecker_pairs;       // pairs with m + n >= 2
    std::vector<int> one_step_star_centers;
    bool at_most_two_pathways = false;
    bool truncation_warning = false;
    Route route = Route::Undetermined;
    std::vector<std::string> warnings;
    std::vector<std::vector<int>> component_vertices;  // nonempty iff disconnected
    std::vector<ClassificationReport> components;
};

/// Full structural classification; deterministic for fixed quiver and caps.
/// A disconnected quiver yields per-component sub-reports plus a warning.
ClassificationReport classify(const Quiver& q, const ClassificationCaps& caps = {});

// Fixture quivers used across tests, reports, and the self-check battery.
Quiver jordan_quiver(int loops);
Quiver a2_quiver();
Quiver kronecker_quiver(int arrows);
Quiver mixed_kronecker_quiver();            // 1 -> 2 and 2 -> 1
Quiver star_quiver_one_step(int legs_in, int legs_out);
Quiver two_route_square_quiver();           // 1 -> 2 -> 3 and 1 -> 4 -> 3

} // namespace qfr

#endif
