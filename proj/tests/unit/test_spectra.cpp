#include "doctest.h"

#include "oracles.hpp"
#include "sepgraph/error.hpp"
#include "sepgraph/generators.hpp"
#include "sepgraph/separation.hpp"
#include "sepgraph/spectra.hpp"

#include <cmath>

using namespace sepgraph;

namespace {
const BetaCertificate& cert(const std::vector<BetaCertificate>& all, CertificateKind kind) {
  return all[static_cast<std::size_t>(kind)];
}
} // namespace

TEST_CASE("jacobi on small matrices") {
  const auto mu = symmetric_eigenvalues(laplacian_matrix(cycle_graph(4)));
  REQUIRE(mu.size() == 4);
  const double expected[] = {0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(mu[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  DenseMatrix bad(2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(symmetric_eigenvalues(bad), DomainError);
  CHECK(symmetric_eigenvalues(DenseMatrix(0)).empty());
}

TEST_CASE("petersen spectrum matches its quadratic identity") {
  // A^2 + A - 2I = J, so all non-principal eigenvalues are roots of x^2 + x - 2.
  const Graph p = petersen_graph();
  const auto a = oracle::matrix_of(p);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      int sq = 0;
      for (int k = 0; k < 10; ++k) sq += a[i][k] * a[k][j];
      REQUIRE(sq + a[i][j] - 2 * (i == j) == 1);
    }
  const auto s = spectral_summary(p);
  CHECK(std::abs(s.lambda - 2.0) < 1e-9);
  CHECK(std::abs(s.lambda1() - 3.0) < 1e-9);
  int ones = 0, minus_twos = 0;
  for (double x : s.adjacency_eigs) {
    if (std::abs(x - 1) < 1e-9) ++ones;
    if (std::abs(x + 2) < 1e-9) ++minus_twos;
  }
  CHECK(ones == 5);
  CHECK(minus_twos == 4);
}

TEST_CASE("complete graph normalized spectrum") {
  for (int n = 3; n <= 8; ++n) {
    const auto s = spectral_summary(complete_graph(n));
    const double expected = n / (n - 1.0);
    CHECK(std::abs(s.sigma2() - expected) < 1e-9);
    CHECK(std::abs(s.sigma_n() - expected) < 1e-9);
  }
}

TEST_CASE("trace identities") {
  Xoshiro256 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = gen_gnp(2 + static_cast<int>(rng.below(20)), 0.4, rng);
    const auto s = spectral_summary(g);
    double lap = 0, adj = 0;
    for (double x : s.laplacian_eigs) lap += x;
    for (double x : s.adjacency_eigs) adj += x;
    CHECK(std::abs(lap - 2.0 * g.size()) <= g.order() * 1e-9);
    CHECK(std::abs(adj) <= g.order() * 1e-9);
  }
}

TEST_CASE("certificate tightness regressions") {
  const auto p3 = beta_certificates(path_graph(3));
  REQUIRE(cert(p3, CertificateKind::LapWeak).applicable);
  CHECK(std::abs(cert(p3, CertificateKind::LapWeak).value - 0.5) < 1e-9);
  const auto c4 = beta_certificates(cycle_graph(4));
  CHECK(std::abs(cert(c4, CertificateKind::AdjRegular).value - 1.0) < 1e-9);
  CHECK(std::abs(cert(c4, CertificateKind::LapWeak).value - 1.0 / 3.0) < 1e-9);
  const auto p = beta_certificates(petersen_graph());
  CHECK(std::abs(cert(p, CertificateKind::AdjRegular).value - 2.0 / 3.0) < 1e-9);
  CHECK_FALSE(cert(beta_certificates(path_graph(3)), CertificateKind::AdjRegular).applicable);
}

TEST_CASE("certificates bound the literal separation maxima") {
  for (const auto& g : collect_corpus(CorpusSpec::parse("exhaustive:4"))) {
    const auto certs = beta_certificates(g);
    const double weak = std::sqrt(oracle::pair_max(g, oracle::Mode::Weak).to_double());
    const double strong = std::sqrt(separation_profile(g).beta_sq_strong.to_double());
    for (const auto& c : certs) {
      if (!c.applicable) continue;
      if (c.mode == BetaMode::Weak) CHECK(c.value >= weak - 1e-9);
      if (c.mode == BetaMode::Strong) CHECK(c.value >= strong - 1e-9);
    }
  }
}

TEST_CASE("mixing checks on a regular graph") {
  const Graph g = petersen_graph();
  const auto s = spectral_summary(g);
  const VertexSet x(10, {0, 1, 2}), y(10, {5, 7, 9});
  CHECK(mixing_check_regular(g, s, x, y).holds);
  CHECK(mixing_check_laplacian(g, s, x, y).holds);
  CHECK(mixing_check_normalized(g, s, x, y).holds);
  CHECK_THROWS_AS(mixing_check_normalized(Graph(3), spectral_summary(Graph(3)), VertexSet(3, {0}),
                                          VertexSet(3, {1})),
                  DomainError);
}
