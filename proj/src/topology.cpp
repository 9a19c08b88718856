#include "fixtrack/topology.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace fixtrack {

std::string to_string(ObserverMode mode) {
    switch (mode) {
        case ObserverMode::undirected_ct: return "undirected_ct";
        case ObserverMode::directed_ct: return "directed_ct";
        case ObserverMode::dat: return "dat";
    }
    return "?";
}

Topology Topology::empty(int n, bool directed) {
    if (n <= 0) throw std::invalid_argument("Topology: agent count must be positive");
    Topology t;
    t.n = n;
    t.adjacency = Matrix::Zero(n, n);
    t.leader_links = Vector::Zero(n);
    t.directed = directed;
    return t;
}

static void check_agent_index(const Topology& t, int i) {
    if (i < 1 || i > t.n) throw std::invalid_argument("Topology: agent index out of range");
}

Topology& Topology::add_edge(int i, int j, double w) {
    check_agent_index(*this, i);
    check_agent_index(*this, j);
    if (i == j) throw std::invalid_argument("Topology: self-loops not allowed");
    adjacency(i - 1, j - 1) = w;
    adjacency(j - 1, i - 1) = w;
    return *this;
}

Topology& Topology::add_directed_edge(int from, int to, double w) {
    check_agent_index(*this, from);
    check_agent_index(*this, to);
    if (from == to) throw std::invalid_argument("Topology: self-loops not allowed");
    adjacency(to - 1, from - 1) = w;  // `to` receives from `from`
    return *this;
}

Topology& Topology::link_leader(int i, double w) {
    check_agent_index(*this, i);
    leader_links(i - 1) = w;
    return *this;
}

void Topology::validate() const {
    if (n <= 0) throw std::invalid_argument("Topology: agent count must be positive");
    if (adjacency.rows() != n || adjacency.cols() != n)
        throw std::invalid_argument("Topology: adjacency must be n x n");
    if (leader_links.size() != n)
        throw std::invalid_argument("Topology: leader_links must have length n");
    for (int i = 0; i < n; ++i) {
        if (adjacency(i, i) != 0.0)
            throw std::invalid_argument("Topology: adjacency diagonal must be zero");
        if (leader_links(i) < 0.0 || !std::isfinite(leader_links(i)))
            throw std::invalid_argument("Topology: leader link weights must be >= 0");
        for (int j = 0; j < n; ++j) {
            const double a = adjacency(i, j);
            if (a < 0.0 || !std::isfinite(a))
                throw std::invalid_argument("Topology: weights must be >= 0");
            if (!directed && a != adjacency(j, i))
                throw std::invalid_argument("Topology: undirected adjacency must be symmetric");
        }
    }
}

bool Topology::has_leader_link() const { return (leader_links.array() > 0.0).any(); }

int Topology::edge_count() const {
    int m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacency(i, j) > 0.0) ++m;
    return m;
}

double Topology::max_row_degree() const {
    double best = 0.0;
    for (int i = 0; i < n; ++i)
        best = std::max(best, adjacency.row(i).sum() + leader_links(i));
    return best;
}

Matrix laplacian(const Topology& topo) {
    topo.validate();
    Matrix l = -topo.adjacency;
    for (int i = 0; i < topo.n; ++i) l(i, i) = topo.adjacency.row(i).sum();
    return l;
}

Matrix incidence(const Topology& topo) {
    topo.validate();
    if (topo.directed)
        throw std::invalid_argument("incidence: defined for undirected topologies only");
    Matrix d(topo.n, topo.edge_count());
    int col = 0;
    for (int i = 0; i < topo.n; ++i) {
        for (int j = i + 1; j < topo.n; ++j) {
            if (topo.adjacency(i, j) > 0.0) {
                d.col(col).setZero();
                d(i, col) = 1.0;   // oriented min-index -> max-index
                d(j, col) = -1.0;
                ++col;
            }
        }
    }
    return d;
}

bool followers_connected(const Topology& topo) {
    if (topo.n == 1) return true;
    std::vector<char> seen(topo.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int i = q.front();
        q.pop();
        for (int j = 0; j < topo.n; ++j) {
            if (!seen[j] && (topo.adjacency(i, j) > 0.0 || topo.adjacency(j, i) > 0.0)) {
                seen[j] = 1;
                ++count;
                q.push(j);
            }
        }
    }
    return count == topo.n;
}

bool leader_spanning_tree(const Topology& topo) {
    // walk along information flow: from a reached sender j to every i with a(i,j) > 0
    std::vector<char> reached(topo.n, 0);
    std::queue<int> q;
    for (int i = 0; i < topo.n; ++i) {
        if (topo.leader_links(i) > 0.0) {
            reached[i] = 1;
            q.push(i);
        }
    }
    while (!q.empty()) {
        const int j = q.front();
        q.pop();
        for (int i = 0; i < topo.n; ++i) {
            if (!reached[i] && topo.adjacency(i, j) > 0.0) {
                reached[i] = 1;
                q.push(i);
            }
        }
    }
    for (int i = 0; i < topo.n; ++i)
        if (!reached[i]) return false;
    return true;
}

Matrix grounded_matrix(const Topology& topo) {
    topo.validate();
    if (topo.directed)
        throw std::invalid_argument("grounded_matrix: requires an undirected topology");
    if (!followers_connected(topo))
        throw std::invalid_argument("grounded_matrix: follower graph must be connected");
    if (!topo.has_leader_link())
        throw std::invalid_argument("grounded_matrix: at least one leader link required");
    Matrix q = laplacian(topo);
    for (int i = 0; i < topo.n; ++i) q(i, i) += topo.leader_links(i);
    return q;
}

static void require_symmetric(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
}

double smallest_eigenvalue(const Matrix& m) {
    require_symmetric(m, "smallest_eigenvalue");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double second_smallest_eigenvalue(const Matrix& m) {
    require_symmetric(m, "second_smallest_eigenvalue");
    if (m.rows() < 2)
        throw std::invalid_argument("second_smallest_eigenvalue: need at least a 2 x 2 matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(1);
}

SpectralData directed_weights(const Topology& topo) {
    topo.validate();
    if (!leader_spanning_tree(topo))
        throw std::invalid_argument(
            "directed_weights: no spanning tree rooted at the leader (unreachable follower)");
    SpectralData sd;
    sd.laplacian = laplacian(topo);
    sd.h = sd.laplacian;
    for (int i = 0; i < topo.n; ++i) sd.h(i, i) += topo.leader_links(i);

    Eigen::PartialPivLU<Matrix> lu(sd.h.transpose());
    const Vector ones = Vector::Ones(topo.n);
    sd.p = lu.solve(ones);
    const double residual = (sd.h.transpose() * sd.p - ones).cwiseAbs().maxCoeff();
    if (!sd.p.allFinite() || residual > 1e-8)
        throw std::invalid_argument("directed_weights: H is singular (spanning-tree assumption violated)");
    if ((sd.p.array() <= 0.0).any())
        throw std::invalid_argument("directed_weights: computed p has a nonpositive entry");

    const Matrix ph = sd.p.asDiagonal() * sd.h;
    sd.grounded = 0.5 * (ph.transpose() + ph);
    sd.p_max = sd.p.maxCoeff();
    sd.lambda1_Q = smallest_eigenvalue(sd.grounded);
    if (topo.n >= 2) sd.lambda2_L = second_smallest_eigenvalue(0.5 * (sd.laplacian + sd.laplacian.transpose()));
    return sd;
}

SpectralData spectral_data(const Topology& topo, ObserverMode mode) {
    if (mode == ObserverMode::directed_ct) return directed_weights(topo);
    SpectralData sd;
    sd.laplacian = laplacian(topo);
    if (topo.n >= 2) sd.lambda2_L = second_smallest_eigenvalue(sd.laplacian);
    if (mode == ObserverMode::undirected_ct) {
        sd.grounded = grounded_matrix(topo);
        sd.lambda1_Q = smallest_eigenvalue(sd.grounded);
    }
    return sd;
}

bool AssumptionReport::ok() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

std::string AssumptionReport::summary() const {
    std::ostringstream os;
    for (const auto& it : items)
        os << (it.pass ? "  [ok]   " : "  [FAIL] ") << it.condition
           << (it.reason.empty() ? "" : " -- " + it.reason) << "\n";
    return os.str();
}

AssumptionReport check_assumptions(const Topology& topo, ObserverMode mode) {
    AssumptionReport rep;
    try {
        topo.validate();
    } catch (const std::exception& e) {
        rep.items.push_back({"topology well formed", false, e.what()});
        return rep;
    }
    rep.items.push_back({"topology well formed", true, ""});

    if (mode == ObserverMode::directed_ct) {
        const bool tree = leader_spanning_tree(topo);
        rep.items.push_back({"spanning tree rooted at the leader", tree,
                             tree ? "" : "no spanning tree: some follower is unreachable from the leader"});
        return rep;
    }

    const bool undirected = !topo.directed;
    rep.items.push_back({"graph undirected", undirected,
                         undirected ? "" : "topology is declared directed"});
    const bool connected = undirected && followers_connected(topo);
    rep.items.push_back({"follower graph undirected and connected", connected,
                         connected ? "" : "follower graph is not connected"});
    if (mode == ObserverMode::undirected_ct) {
        const bool leader = topo.has_leader_link();
        rep.items.push_back({"at least one leader link", leader,
                             leader ? "" : "no follower can hear the leader"});
    } else {  // dat
        const bool leaderless = !topo.has_leader_link();
        rep.items.push_back({"no leader links (average tracking is leaderless)", leaderless,
                             leaderless ? "" : "leader links present"});
    }
    return rep;
}

}  // namespace fixtrack
