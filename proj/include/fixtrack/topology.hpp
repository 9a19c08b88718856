/* topology.hpp
 *
 * Weighted communication graph of n followers plus optional leader links,
 * and the spectral quantities the observer gain conditions are stated in:
 * Laplacian L, incidence D, grounded matrix Q = L + B, and for directed
 * graphs the scaled symmetrization Q = (H'P + PH)/2 with p = H^{-T} 1.
 */
#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace fixtrack {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ObserverMode { undirected_ct, directed_ct, dat };

std::string to_string(ObserverMode mode);

struct Topology {
    int n = 0;
    Matrix adjacency;     // n x n, a(i,j) >= 0 is the weight of the link on
                          // which agent i receives from agent j; zero diagonal
    Vector leader_links;  // length n, a_i0 >= 0; all zero when leaderless
    bool directed = false;

    // zero-edge graph with room for n agents
    static Topology empty(int n, bool directed = false);

    // undirected edge i--j (1-based agent ids), both directions
    Topology& add_edge(int i, int j, double w = 1.0);
    // directed edge carrying information from `from` to `to` (1-based)
    Topology& add_directed_edge(int from, int to, double w = 1.0);
    Topology& link_leader(int i, double w = 1.0);

    void validate() const;  // throws std::invalid_argument on broken invariants
    bool has_leader_link() const;
    int edge_count() const;        // undirected edge count (i<j pairs)
    double max_row_degree() const; // max over i of sum_j a(i,j) + a_i0
};

Matrix laplacian(const Topology& topo);

// Node-by-edge matrix with one column per undirected edge, +1 at the lower
// agent index and -1 at the higher (fixed orientation); D*D' = L for unit
// weights. Rejects directed topologies.
Matrix incidence(const Topology& topo);

// Q = L + B for a connected undirected graph with at least one leader link.
Matrix grounded_matrix(const Topology& topo);

struct SpectralData {
    Matrix laplacian;
    Matrix h;         // L + B (directed case only, else empty)
    Matrix grounded;  // Q
    Vector p;         // directed case only
    double p_max = 0.0;
    double lambda1_Q = 0.0;
    double lambda2_L = 0.0;
};

// Solves H'p = 1, builds P = diag(p) and Q = (H'P + PH)/2; requires a
// leader-rooted spanning tree.
SpectralData directed_weights(const Topology& topo);

// Everything validate_gains() needs for the given mode.
SpectralData spectral_data(const Topology& topo, ObserverMode mode);

struct CheckItem {
    std::string condition;
    bool pass = false;
    std::string reason;
};

struct AssumptionReport {
    std::vector<CheckItem> items;
    bool ok() const;
    std::string summary() const;
};

AssumptionReport check_assumptions(const Topology& topo, ObserverMode mode);

// Symmetric eigenvalue helpers; both reject non-symmetric input.
double smallest_eigenvalue(const Matrix& m);
double second_smallest_eigenvalue(const Matrix& m);

// Reachability checks used by the assumptions.
bool followers_connected(const Topology& topo);   // undirected sense
bool leader_spanning_tree(const Topology& topo);  // leader reaches every follower

}  // namespace fixtrack
