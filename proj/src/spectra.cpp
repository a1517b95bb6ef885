#include "sepgraph/spectra.hpp"

#include "sepgraph/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sepgraph {

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

DenseMatrix laplacian_matrix(const Graph& g) {
  DenseMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) l(u, v) = l(v, u) = -1.0;
  return l;
}

DenseMatrix normalized_laplacian_matrix(const Graph& g) {
  DenseMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) l(v, v) = 1.0;
  for (auto [u, v] : g.edges())
    l(u, v) = l(v, u) = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
  return l;
}

std::vector<double> symmetric_eigenvalues(DenseMatrix a, const EigenOptions& options) {
  const int n = a.order();
  double frob = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12) throw DomainError("matrix is not symmetric");
      frob += a(i, j) * a(i, j);
    }
  const double threshold = options.tolerance * (1.0 + std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ >= options.max_sweeps)
      throw NumericError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating a(p,q) (Golub & Van Loan, sym.schur2).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eigs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

SpectralSummary spectral_summary(const Graph& g, const EigenOptions& options) {
  SpectralSummary s;
  s.adjacency_eigs = symmetric_eigenvalues(adjacency_matrix(g), options);
  std::reverse(s.adjacency_eigs.begin(), s.adjacency_eigs.end());
  s.laplacian_eigs = symmetric_eigenvalues(laplacian_matrix(g), options);
  s.normalized_eigs = symmetric_eigenvalues(normalized_laplacian_matrix(g), options);
  for (std::size_t i = 1; i < s.adjacency_eigs.size(); ++i) s.lambda = std::max(s.lambda, std::abs(s.adjacency_eigs[i]));
  for (std::size_t i = 1; i < s.normalized_eigs.size(); ++i)
    s.sigma = std::max(s.sigma, std::abs(1.0 - s.normalized_eigs[i]));
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.is_regular = g.is_regular();
  s.is_connected = g.is_connected();
  s.has_isolated_vertex = g.has_isolated_vertex();
  return s;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
  case CertificateKind::AdjRegular: return "adj_regular";
  case CertificateKind::LapWeak: return "lap_weak";
  case CertificateKind::LapStrong: return "lap_strong";
  case CertificateKind::NormStrong: return "norm_strong";
  case CertificateKind::NormWeak: return "norm_weak";
  case CertificateKind::BipartiteButler: return "bipartite_butler";
  }
  return "unknown";
}

std::string to_string(BetaMode mode) {
  switch (mode) {
  case BetaMode::Weak: return "weak";
  case BetaMode::Strong: return "strong";
  case BetaMode::Bipartite: return "bipartite";
  }
  return "unknown";
}

std::vector<BetaCertificate> beta_certificates(const Graph& g, const SpectralSummary& s) {
  std::vector<BetaCertificate> out;
  auto emit = [&](CertificateKind kind, BetaMode mode, const std::string& gate_failure,
                  const std::function<double()>& value) {
    BetaCertificate c{kind, mode, 0.0, gate_failure.empty(), gate_failure};
    if (c.applicable) c.value = std::max(0.0, value());
    out.push_back(std::move(c));
  };
  const int n = g.order();
  const bool edgeless = g.size() == 0;
  const double mu2 = s.mu2();
  const double mun = s.mu_n();
  const double s2 = s.sigma2();
  const double sn = s.sigma_n();
  const double delta = s.min_degree;
  const double big_delta = s.max_degree;

  std::string gate;
  gate = !s.is_regular ? "not regular" : edgeless ? "edgeless" : "";
  emit(CertificateKind::AdjRegular, BetaMode::Strong, gate, [&] { return s.lambda / s.lambda1(); });

  gate = edgeless ? "edgeless" : "";
  emit(CertificateKind::LapWeak, BetaMode::Weak, gate, [&] { return (mun - mu2) / (mun + mu2); });

  if (edgeless)
    gate = "edgeless";
  else if (2.0 * delta + kSpectralGateTolerance < mu2 + mun)
    gate = "2*delta < mu_2 + mu_n";
  else
    gate = "";
  emit(CertificateKind::LapStrong, BetaMode::Strong, gate, [&] { return (mun - mu2) / (mun + mu2); });

  gate = (n == 0 || s.has_isolated_vertex) ? "has isolated vertex" : "";
  emit(CertificateKind::NormStrong, BetaMode::Strong, gate, [&] { return s.sigma * big_delta / delta; });

  gate = !s.is_connected ? "disconnected" : n < 2 ? "fewer than 2 vertices" : "";
  emit(CertificateKind::NormWeak, BetaMode::Weak, gate,
       [&] { return (sn - s2) / (sn + s2) * (big_delta / delta); });

  auto bip = bipartition_of(g);
  if (!s.is_connected)
    gate = "disconnected";
  else if (n < 2)
    gate = "fewer than 2 vertices";
  else if (!bip)
    gate = "not bipartite";
  else
    gate = "";
  emit(CertificateKind::BipartiteButler, BetaMode::Bipartite, gate, [&] {
    auto side_extremes = [&](const VertexSet& side) {
      int lo = n, hi = 0;
      for (int v : side.members()) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
      }
      return std::pair<double, double>(lo, hi);
    };
    auto [d1, D1] = side_extremes(bip->left);
    auto [d2, D2] = side_extremes(bip->right);
    return (1.0 - s2) * std::sqrt((D1 * D2) / (d1 * d2));
  });
  return out;
}

std::vector<BetaCertificate> beta_certificates(const Graph& g) { return beta_certificates(g, spectral_summary(g)); }

namespace mixing {

namespace {
MixingResult judge(double lhs, double rhs, double tol) { return {lhs, rhs, lhs <= rhs + tol}; }

double centered(int n, int x, int y) {
  const double nn = n;
  return std::sqrt(x * static_cast<double>(y) * (1.0 - x / nn) * (1.0 - y / nn));
}
} // namespace

MixingResult laplacian(const SpectralSummary& s, int n, long long e_xy, int x, int y, int x_and_y,
                       long long degree_sum_x_and_y, double tol) {
  if (n == 0) return judge(0, 0, tol);
  const double dprime = (s.mu_n() + s.mu2()) / 2.0;
  const double lhs = std::abs(static_cast<double>(e_xy) - dprime / n * x * static_cast<double>(y) +
                              dprime * x_and_y - static_cast<double>(degree_sum_x_and_y));
  const double rhs = (s.mu_n() - s.mu2()) / 2.0 * centered(n, x, y);
  return judge(lhs, rhs, tol);
}

MixingResult normalized(const SpectralSummary& s, long long e_xy, long long vol_x, long long vol_y,
                        long long vol_g, double tol) {
  if (vol_g <= 0) throw DomainError("normalized mixing requires at least one edge");
  const double vg = static_cast<double>(vol_g);
  const double lhs = std::abs(static_cast<double>(e_xy) - static_cast<double>(vol_x) * vol_y / vg);
  const double rhs = s.sigma *
                     std::sqrt(static_cast<double>(vol_x) * (vol_g - vol_x) * static_cast<double>(vol_y) *
                               (vol_g - vol_y)) /
                     vg;
  return judge(lhs, rhs, tol);
}

MixingResult butler(const SpectralSummary& s, long long vol_x, long long vol_y, long long vol_g, double tol) {
  const double denom = static_cast<double>(vol_g - vol_x) * static_cast<double>(vol_g - vol_y);
  if (denom <= 0) throw DomainError("volume-ratio mixing requires nonzero complement volumes");
  const double lhs = static_cast<double>(vol_x) * static_cast<double>(vol_y) / denom;
  const double ratio = (s.sigma_n() - s.sigma2()) / (s.sigma_n() + s.sigma2());
  return judge(lhs, ratio * ratio, tol);
}

MixingResult regular(const SpectralSummary& s, int n, int d, long long e_xy, int x, int y, double tol) {
  if (n == 0) return judge(0, 0, tol);
  const double lhs = std::abs(static_cast<double>(e_xy) - static_cast<double>(d) / n * x * static_cast<double>(y));
  return judge(lhs, s.lambda * centered(n, x, y), tol);
}

} // namespace mixing

MixingResult mixing_check_laplacian(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                    const VertexSet& y, double tol) {
  const VertexSet both = x & y;
  return mixing::laplacian(s, g.order(), edges_between(g, x, y), x.size(), y.size(), both.size(), volume(g, both),
                           tol);
}

MixingResult mixing_check_normalized(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                     const VertexSet& y, double tol) {
  if (g.size() == 0) throw DomainError("normalized mixing requires at least one edge");
  return mixing::normalized(s, edges_between(g, x, y), volume(g, x), volume(g, y), 2LL * g.size(), tol);
}

MixingResult mixing_check_butler(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                 const VertexSet& y, double tol) {
  if (g.order() < 2 || !g.is_connected()) throw DomainError("volume-ratio mixing requires a connected graph on >= 2 vertices");
  if (x.empty() || y.empty()) throw DomainError("volume-ratio mixing requires nonempty X and Y");
  if (x.intersects(y)) throw DomainError("volume-ratio mixing requires disjoint X and Y");
  if (edges_between(g, x, y) != 0) throw DomainError("volume-ratio mixing requires e(X,Y) = 0");
  return mixing::butler(s, volume(g, x), volume(g, y), 2LL * g.size(), tol);
}

MixingResult mixing_check_regular(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                  const VertexSet& y, double tol) {
  if (!g.is_regular()) throw DomainError("expander mixing requires a regular graph");
  const int d = g.order() == 0 ? 0 : g.degree(0);
  return mixing::regular(s, g.order(), d, edges_between(g, x, y), x.size(), y.size(), tol);
}

} // namespace sepgraph
