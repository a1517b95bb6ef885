#pragma once

#include "sepgraph/graph.hpp"

#include <string>
#include <vector>

namespace sepgraph {

/// Dense row-major square matrix of doubles.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int order() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

private:
  int n_ = 0;
  std::vector<double> data_;
};

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix laplacian_matrix(const Graph& g);
/// Entry -1/sqrt(d(u)d(v)) on edges, 1 on the diagonal of non-isolated
/// vertices, 0 elsewhere (isolated vertices give zero rows).
DenseMatrix normalized_laplacian_matrix(const Graph& g);

struct EigenOptions {
  double tolerance = 1e-12; ///< off-diagonal Frobenius norm, relative to 1 + ||A||_F
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Non-symmetric input (beyond 1e-12) is a DomainError; running
/// out of sweeps is a NumericError.
std::vector<double> symmetric_eigenvalues(DenseMatrix matrix, const EigenOptions& options = {});

struct SpectralSummary {
  std::vector<double> adjacency_eigs;  ///< descending
  std::vector<double> laplacian_eigs;  ///< ascending
  std::vector<double> normalized_eigs; ///< ascending
  double lambda = 0;  ///< max_{i>=2} |adjacency eigenvalue|
  double sigma = 0;   ///< max_{i>=2} |1 - normalized eigenvalue|
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
  bool is_connected = false;
  bool has_isolated_vertex = false;

  double lambda1() const { return adjacency_eigs.empty() ? 0.0 : adjacency_eigs.front(); }
  double mu2() const { return laplacian_eigs.size() < 2 ? 0.0 : laplacian_eigs[1]; }
  double mu_n() const { return laplacian_eigs.empty() ? 0.0 : laplacian_eigs.back(); }
  double sigma2() const { return normalized_eigs.size() < 2 ? 0.0 : normalized_eigs[1]; }
  double sigma_n() const { return normalized_eigs.empty() ? 0.0 : normalized_eigs.back(); }
};

SpectralSummary spectral_summary(const Graph& g, const EigenOptions& options = {});

enum class CertificateKind { AdjRegular, LapWeak, LapStrong, NormStrong, NormWeak, BipartiteButler };
enum class BetaMode { Weak, Strong, Bipartite };

std::string to_string(CertificateKind kind);
std::string to_string(BetaMode mode);

/// An eigenvalue-derived upper bound on the separation parameter of one
/// mode. Inapplicable certificates keep value 0 and say why.
struct BetaCertificate {
  CertificateKind kind;
  BetaMode mode;
  double value = 0;
  bool applicable = false;
  std::string reason;
};

/// Tolerance used by the applicability gate 2*delta >= mu_2 + mu_n.
inline constexpr double kSpectralGateTolerance = 1e-9;

/// All six certificates, always in the order of CertificateKind.
std::vector<BetaCertificate> beta_certificates(const Graph& g, const SpectralSummary& summary);
std::vector<BetaCertificate> beta_certificates(const Graph& g);

struct MixingResult {
  double lhs = 0;
  double rhs = 0;
  bool holds = true;
};

inline constexpr double kMixingTolerance = 1e-9;

/// Laplacian mixing: |e(X,Y) - d'|X||Y|/n + d'|X∩Y| - sum_{X∩Y} d(v)| against
/// ((mu_n - mu_2)/2) sqrt(|X||Y|(1-|X|/n)(1-|Y|/n)), with d' = (mu_n + mu_2)/2.
MixingResult mixing_check_laplacian(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                    const VertexSet& y, double tol = kMixingTolerance);

/// Normalized mixing: |e(X,Y) - vol(X)vol(Y)/vol(G)| against
/// sigma sqrt(vol(X)vol(X̄)vol(Y)vol(Ȳ))/vol(G). Edgeless graphs are a
/// DomainError.
MixingResult mixing_check_normalized(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                     const VertexSet& y, double tol = kMixingTolerance);

/// Volume-ratio form for disjoint, non-adjacent, nonempty X and Y in a
/// connected graph on >= 2 vertices: vol(X)vol(Y)/(vol(X̄)vol(Ȳ)) against
/// ((sigma_n - sigma_2)/(sigma_n + sigma_2))^2. Precondition violations are
/// a DomainError.
MixingResult mixing_check_butler(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                 const VertexSet& y, double tol = kMixingTolerance);

/// Classical expander mixing for d-regular graphs:
/// |e(X,Y) - d|X||Y|/n| against lambda sqrt(|X||Y|(1-|X|/n)(1-|Y|/n)).
MixingResult mixing_check_regular(const Graph& g, const SpectralSummary& s, const VertexSet& x,
                                  const VertexSet& y, double tol = kMixingTolerance);

/// Scalar forms of the mixing checks, for sweeps that compute the set
/// statistics from bitmasks.
namespace mixing {

MixingResult laplacian(const SpectralSummary& s, int n, long long e_xy, int x, int y, int x_and_y,
                       long long degree_sum_x_and_y, double tol = kMixingTolerance);
MixingResult normalized(const SpectralSummary& s, long long e_xy, long long vol_x, long long vol_y,
                        long long vol_g, double tol = kMixingTolerance);
MixingResult butler(const SpectralSummary& s, long long vol_x, long long vol_y, long long vol_g,
                    double tol = kMixingTolerance);
MixingResult regular(const SpectralSummary& s, int n, int d, long long e_xy, int x, int y,
                     double tol = kMixingTolerance);

} // namespace mixing

} // namespace sepgraph
