#include "densekit/eigs.h"

#include <algorithm>
#include <cmath>

#include "densekit/rng.h"

namespace densekit {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr int kDenseLimit = 200;

struct ReducedSystem {
  std::vector<VertexId> keep;     // positive-degree vertices
  std::vector<VertexId> dropped;  // zero-degree vertices
  std::vector<int> position;     // vertex -> row in reduced system, -1 if dropped
};

ReducedSystem reduce(const Graph& g) {
  ReducedSystem r;
  r.position.assign(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      r.position[v] = static_cast<int>(r.keep.size());
      r.keep.push_back(v);
    } else {
      r.dropped.push_back(v);
    }
  }
  return r;
}

// Reduced N = I - D^{-1/2} A D^{-1/2} over positive-degree vertices.
Eigen::SparseMatrix<double> reduced_normalized_laplacian(const Graph& g, const ReducedSystem& r) {
  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t i = 0; i < r.keep.size(); ++i) {
    trips.emplace_back(i, i, 1.0);
    VertexId v = r.keep[i];
    double dv = g.degree(v);
    for (const auto& [u, w] : g.neighbors(v))
      trips.emplace_back(i, r.position[u], -w / std::sqrt(dv * g.degree(u)));
  }
  Eigen::SparseMatrix<double> m(r.keep.size(), r.keep.size());
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

void canonical_sign(Eigen::Ref<Eigen::VectorXd> v) {
  int best = 0;
  double mx = -1;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > mx + 1e-15) {
      mx = std::abs(v[i]);
      best = i;
    }
  }
  if (v[best] < 0) v = -v;
}

// Lanczos with full reorthogonalisation for the LARGEST eigenpairs of a sparse
// symmetric matrix, with deflation against already-locked vectors.
struct LanczosResult {
  std::vector<double> values;
  std::vector<Eigen::VectorXd> vectors;
};

LanczosResult lanczos_largest(const Eigen::SparseMatrix<double>& m, int k, int max_ops) {
  const int n = static_cast<int>(m.rows());
  CounterRng rng(0x5EEDu + static_cast<std::uint64_t>(n) * 1315423911ull);
  LanczosResult locked;
  int ops = 0;

  // Restart vector: random at first, then the best unconverged Ritz vector so
  // progress carries across restarts.
  Eigen::VectorXd start(n);
  for (int i = 0; i < n; ++i) start[i] = rng.next_double() - 0.5;

  while (static_cast<int>(locked.values.size()) < k && ops < max_ops) {
    int want = k - static_cast<int>(locked.values.size());
    int dim = std::min(n - static_cast<int>(locked.values.size()), std::max(8 * want + 40, 80));
    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;

    Eigen::VectorXd v = start;
    auto orthogonalize = [&](Eigen::VectorXd& x) {
      for (const auto& q : locked.vectors) x -= q.dot(x) * q;
      for (const auto& q : basis) x -= q.dot(x) * q;
      // second pass for numerical safety
      for (const auto& q : locked.vectors) x -= q.dot(x) * q;
      for (const auto& q : basis) x -= q.dot(x) * q;
    };
    orthogonalize(v);
    if (v.norm() < 1e-12) {
      for (int i = 0; i < n; ++i) v[i] = rng.next_double() - 0.5;
      orthogonalize(v);
      if (v.norm() < 1e-12) break;
    }
    v.normalize();

    for (int j = 0; j < dim; ++j) {
      basis.push_back(v);
      Eigen::VectorXd w = m * v;
      ++ops;
      alpha.push_back(v.dot(w));
      orthogonalize(w);
      double b = w.norm();
      beta.push_back(b);
      if (b < 1e-12) break;
      v = w / b;
    }

    int mdim = static_cast<int>(basis.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(mdim, mdim);
    for (int i = 0; i < mdim; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < mdim) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    bool kept_start = false;
    // Ritz pairs, largest first.
    for (int r = mdim - 1; r >= 0 && static_cast<int>(locked.values.size()) < k; --r) {
      Eigen::VectorXd y = es.eigenvectors().col(r);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < mdim; ++i) x += y[i] * basis[i];
      // re-orthogonalise against locked to keep the basis clean
      for (const auto& q : locked.vectors) x -= q.dot(x) * q;
      double nrm = x.norm();
      if (nrm < 1e-12) continue;
      x /= nrm;
      double theta = x.dot(m * x);
      ++ops;
      double res = (m * x - theta * x).norm();
      ++ops;
      if (res <= kResidualTol) {
        locked.values.push_back(theta);
        locked.vectors.push_back(std::move(x));
      } else {
        start = x;  // refine this pair on the next sweep
        kept_start = true;
        break;
      }
    }
    if (!kept_start)
      for (int i = 0; i < n; ++i) start[i] = rng.next_double() - 0.5;
  }
  if (static_cast<int>(locked.values.size()) < k)
    throw SolverError("Lanczos failed to converge: locked " + std::to_string(locked.values.size()) +
                      " of " + std::to_string(k) + " pairs after " + std::to_string(ops) +
                      " operator applications");
  // locked values are largest-first already except interleaving across
  // restarts; sort defensively.
  std::vector<int> idx(locked.values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return locked.values[a] > locked.values[b]; });
  LanczosResult sorted;
  for (int i : idx) {
    sorted.values.push_back(locked.values[i]);
    sorted.vectors.push_back(locked.vectors[i]);
  }
  return sorted;
}

// Solve for k eigenpairs of N at the chosen end of the spectrum; Z pairs are
// derived via Z = 2I - N.
EigenPairs solve(const Graph& g, int k, bool bottom_of_n) {
  auto r = reduce(g);
  const int nr = static_cast<int>(r.keep.size());
  if (k < 1 || k > nr)
    throw std::invalid_argument("requested " + std::to_string(k) + " eigenpairs from a system of size " +
                                std::to_string(nr));
  Eigen::SparseMatrix<double> nmat = reduced_normalized_laplacian(g, r);

  Eigen::VectorXd vals(k);
  Eigen::MatrixXd vecs(nr, k);
  if (nr <= kDenseLimit) {
    Eigen::MatrixXd dense(nmat);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    if (es.info() != Eigen::Success) throw SolverError("dense eigensolver failed");
    for (int i = 0; i < k; ++i) {
      int col = bottom_of_n ? i : nr - 1 - i;
      vals[i] = es.eigenvalues()[col];
      vecs.col(i) = es.eigenvectors().col(col);
    }
  } else {
    // Shift so that the requested end becomes the top of the spectrum.
    Eigen::SparseMatrix<double> op = nmat;
    if (bottom_of_n) {
      Eigen::SparseMatrix<double> id(nr, nr);
      id.setIdentity();
      op = Eigen::SparseMatrix<double>(2.0 * id - nmat);
    }
    try {
      auto res = lanczos_largest(op, k, 10 * nr);
      for (int i = 0; i < k; ++i) {
        vals[i] = bottom_of_n ? 2.0 - res.values[i] : res.values[i];
        vecs.col(i) = res.vectors[i];
      }
    } catch (const SolverError&) {
      if (nr > 2500) throw;
      // clustered spectrum stalled the iteration; fall back to a dense solve
      Eigen::MatrixXd dense(nmat);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
      if (es.info() != Eigen::Success) throw;
      for (int i = 0; i < k; ++i) {
        int col = bottom_of_n ? i : nr - 1 - i;
        vals[i] = es.eigenvalues()[col];
        vecs.col(i) = es.eigenvectors().col(col);
      }
    }
  }
  for (int i = 0; i < k; ++i) canonical_sign(vecs.col(i));

  EigenPairs out;
  out.values = vals;
  out.vectors = Eigen::MatrixXd::Zero(g.vertex_count(), k);
  for (int i = 0; i < nr; ++i) out.vectors.row(r.keep[i]) = vecs.row(i);
  out.dropped = r.dropped;
  return out;
}

}  // namespace

Eigen::SparseMatrix<double> laplacian_matrix(LaplacianKind kind, const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Eigen::Triplet<double>> trips;
  for (VertexId v = 0; v < n; ++v) {
    double dv = g.degree(v);
    if (dv <= 0) continue;
    switch (kind) {
      case LaplacianKind::NormalizedLaplacian:
        trips.emplace_back(v, v, 1.0);
        for (const auto& [u, w] : g.neighbors(v))
          trips.emplace_back(v, u, -w / std::sqrt(dv * g.degree(u)));
        break;
      case LaplacianKind::SignlessNormalized:
        trips.emplace_back(v, v, 1.0);
        for (const auto& [u, w] : g.neighbors(v))
          trips.emplace_back(v, u, w / std::sqrt(dv * g.degree(u)));
        break;
      case LaplacianKind::LazyWalk:
        trips.emplace_back(v, v, 0.5);
        // column u scales by 1/deg(u): W(v,u) = w(v,u) / (2 deg(u))
        for (const auto& [u, w] : g.neighbors(v)) trips.emplace_back(v, u, w / (2.0 * g.degree(u)));
        break;
    }
  }
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

EigenPairs smallest_eigs(LaplacianKind kind, const Graph& g, int k) {
  switch (kind) {
    case LaplacianKind::NormalizedLaplacian:
      return solve(g, k, true);
    case LaplacianKind::SignlessNormalized: {
      // Z = 2I - N: bottom of Z is the top of N.
      EigenPairs p = solve(g, k, false);
      for (int i = 0; i < p.values.size(); ++i) p.values[i] = 2.0 - p.values[i];
      return p;
    }
    case LaplacianKind::LazyWalk:
      throw std::invalid_argument("eigensolver supports the N and Z operators");
  }
  throw std::invalid_argument("unknown operator");
}

EigenPairs largest_eigs(LaplacianKind kind, const Graph& g, int k) {
  switch (kind) {
    case LaplacianKind::NormalizedLaplacian:
      return solve(g, k, false);
    case LaplacianKind::SignlessNormalized: {
      EigenPairs p = solve(g, k, true);
      for (int i = 0; i < p.values.size(); ++i) p.values[i] = 2.0 - p.values[i];
      return p;
    }
    case LaplacianKind::LazyWalk:
      throw std::invalid_argument("eigensolver supports the N and Z operators");
  }
  throw std::invalid_argument("unknown operator");
}

Eigen::VectorXd min_signless_vector(const Graph& g) {
  EigenPairs p = smallest_eigs(LaplacianKind::SignlessNormalized, g, 1);
  Eigen::VectorXd f = p.vectors.col(0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) f[v] /= std::sqrt(g.degree(v));
  return f;
}

}  // namespace densekit
