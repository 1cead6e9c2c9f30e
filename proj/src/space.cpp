#include "delib/space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace delib {

namespace {

std::vector<std::vector<int>> bfs_all_pairs(int n,
                                            const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0) {
                throw std::runtime_error("graph is disconnected");
            }
        }
    }
    return dist;
}

}  // namespace

DecisionSpace DecisionSpace::line(int n_points) {
    if (n_points < 1) throw std::invalid_argument("line needs at least 1 point");
    DecisionSpace s;
    s.kind_ = SpaceKind::Line;
    s.size_ = n_points;
    s.median_graph_ = true;
    return s;
}

DecisionSpace DecisionSpace::hypercube(int dim) {
    if (dim < 1 || dim > 30) throw std::invalid_argument("hypercube dim out of range");
    DecisionSpace s;
    s.kind_ = SpaceKind::Hypercube;
    s.size_ = 1 << dim;
    s.dim_ = dim;
    s.median_graph_ = true;
    return s;
}

DecisionSpace DecisionSpace::star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(leaves);
    for (int l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
    DecisionSpace s = general_graph(leaves + 1, edges);
    s.kind_ = SpaceKind::Star;
    return s;
}

DecisionSpace DecisionSpace::general_graph(int n_vertices,
                                           const std::vector<std::pair<int, int>>& edges) {
    if (n_vertices < 1) throw std::invalid_argument("graph needs at least 1 vertex");
    std::vector<std::vector<int>> adj(n_vertices);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    DecisionSpace s;
    s.kind_ = SpaceKind::GeneralGraph;
    s.size_ = n_vertices;
    s.dist_ = bfs_all_pairs(n_vertices, adj);
    s.median_graph_ = validate_median_graph(s);
    return s;
}

DecisionSpace DecisionSpace::parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) {
            throw std::invalid_argument("malformed edge line: " + line);
        }
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id: " + line);
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    if (max_id < 0) throw std::invalid_argument("edge list is empty");
    return general_graph(max_id + 1, edges);
}

DecisionSpace DecisionSpace::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

void DecisionSpace::check_id(int a) const {
    if (a < 0 || a >= size_) throw std::invalid_argument("alternative id out of space");
}

double DecisionSpace::distance(int a, int b) const {
    check_id(a);
    check_id(b);
    switch (kind_) {
        case SpaceKind::Line:
            return std::abs(line_coord(a) - line_coord(b));
        case SpaceKind::Hypercube:
            return static_cast<double>(
                std::popcount(static_cast<unsigned>(a) ^ static_cast<unsigned>(b)));
        default:
            return static_cast<double>(dist_[a][b]);
    }
}

double DecisionSpace::line_coord(int a) const {
    if (kind_ != SpaceKind::Line) throw std::invalid_argument("line_coord: not a line space");
    check_id(a);
    return static_cast<double>(a) / static_cast<double>(size_);
}

int DecisionSpace::nearest_alternative(double p) const {
    if (kind_ != SpaceKind::Line) {
        throw std::invalid_argument("nearest_alternative: not a line space");
    }
    if (p < 0.0 || p >= 1.0) throw std::invalid_argument("point outside [0,1)");
    double scaled = p * size_;
    int lo = static_cast<int>(std::floor(scaled));
    int idx = (scaled - lo <= 0.5) ? lo : lo + 1;  // midpoint ties to lower index
    return std::clamp(idx, 0, size_ - 1);
}

bool DecisionSpace::on_shortest_path(int u, int x, int v) const {
    return distance(u, x) + distance(x, v) <= distance(u, v) + 1e-9;
}

int DecisionSpace::median3(int u, int v, int w) const {
    check_id(u);
    check_id(v);
    check_id(w);
    if (!median_graph_) throw std::runtime_error("median3: space is not a median graph");
    switch (kind_) {
        case SpaceKind::Line: {
            // middle of the three grid indices
            int lo = std::min({u, v, w});
            int hi = std::max({u, v, w});
            return u + v + w - lo - hi;
        }
        case SpaceKind::Hypercube: {
            unsigned a = u, b = v, c = w;
            return static_cast<int>((a & b) | (a & c) | (b & c));
        }
        default: {
            int found = -1;
            for (int x = 0; x < size_; ++x) {
                if (on_shortest_path(u, x, v) && on_shortest_path(u, x, w) &&
                    on_shortest_path(v, x, w)) {
                    if (found >= 0) {
                        throw std::runtime_error("median3: intersection not unique");
                    }
                    found = x;
                }
            }
            if (found < 0) throw std::runtime_error("median3: empty path intersection");
            return found;
        }
    }
}

bool validate_median_graph(const DecisionSpace& space) {
    const int n = space.size();
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            for (int w = v; w < n; ++w) {
                int count = 0;
                for (int x = 0; x < n && count < 2; ++x) {
                    if (space.on_shortest_path(u, x, v) &&
                        space.on_shortest_path(u, x, w) &&
                        space.on_shortest_path(v, x, w)) {
                        ++count;
                    }
                }
                if (count != 1) return false;
            }
        }
    }
    return true;
}

double bliss_distance(const DecisionSpace& space, double bliss, int alt) {
    if (space.kind() == SpaceKind::Line) {
        return std::abs(bliss - space.line_coord(alt));
    }
    return space.distance(snap_bliss(space, bliss), alt);
}

int snap_bliss(const DecisionSpace& space, double bliss) {
    if (space.kind() == SpaceKind::Line) {
        return space.nearest_alternative(std::clamp(bliss, 0.0, 1.0 - 1e-9));
    }
    return static_cast<int>(std::llround(bliss));
}

}  // namespace delib
