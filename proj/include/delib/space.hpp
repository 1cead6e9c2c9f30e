#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace delib {

enum class SpaceKind { Line, Hypercube, Star, GeneralGraph };

// A finite decision space: an enumerated set of alternatives with a metric.
// Line and Hypercube use closed-form distances; Star and GeneralGraph carry
// an all-pairs shortest-path table (unit edge weights).
//
// Immutable after construction; safe for concurrent reads.
class DecisionSpace {
public:
    // Uniform grid {i/n : 0 <= i < n} on [0,1), d(u,v) = |u-v|.
    static DecisionSpace line(int n_points);
    // Vertices are all k-bit strings (id == bit pattern), Hamming metric.
    static DecisionSpace hypercube(int dim);
    // Vertex 0 is the center, vertices 1..k the leaves.
    static DecisionSpace star(int leaves);
    // Undirected unit-weight graph; vertex ids 0..n-1. Throws on a
    // disconnected graph.
    static DecisionSpace general_graph(int n_vertices,
                                       const std::vector<std::pair<int, int>>& edges);
    // Edge-list text: one "u v" pair per line, 0-based ids. Lines starting
    // with '#' and blank lines are skipped.
    static DecisionSpace parse_edge_list(std::istream& in);
    static DecisionSpace load_edge_list(const std::string& path);

    SpaceKind kind() const { return kind_; }
    int size() const { return size_; }
    // Hypercube dimension (0 for other kinds).
    int dim() const { return dim_; }

    bool is_median_graph() const { return median_graph_; }

    double distance(int a, int b) const;

    // Line only: the grid coordinate i/n of an alternative.
    double line_coord(int a) const;

    // Line only: grid alternative minimizing |coord - p|, exact-midpoint
    // ties to the lower index. p must lie in [0,1).
    int nearest_alternative(double p) const;

    // Unique vertex on all three pairwise shortest paths. Closed form on
    // Line (middle value) and Hypercube (bitwise majority); brute-force
    // path intersection elsewhere. Throws if the space is not flagged as a
    // median graph or the intersection is not a single vertex.
    int median3(int u, int v, int w) const;

    // True iff x lies on some shortest path from u to v.
    bool on_shortest_path(int u, int x, int v) const;

private:
    DecisionSpace() = default;
    void check_id(int a) const;

    SpaceKind kind_ = SpaceKind::Line;
    int size_ = 0;
    int dim_ = 0;
    bool median_graph_ = false;
    std::vector<std::vector<int>> dist_;  // Star / GeneralGraph only
};

// Brute-force check of the median-graph property: every vertex triple has
// exactly one vertex common to all three pairwise shortest-path sets.
// Intended for desk-scale spaces (up to a few hundred vertices).
bool validate_median_graph(const DecisionSpace& space);

// Distance from a (possibly continuous, line case) bliss point to an
// alternative. For discrete spaces the bliss value holds an alternative id.
double bliss_distance(const DecisionSpace& space, double bliss, int alt);

// Alternative a bliss point maps to: nearest grid point on the line,
// identity on discrete spaces.
int snap_bliss(const DecisionSpace& space, double bliss);

}  // namespace delib
