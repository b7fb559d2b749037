#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "surplab/generators.hpp"
#include "surplab/random.hpp"
#include "surplab/spectral.hpp"

using namespace surplab;

namespace {

Graph cycle(std::size_t n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (vertex_t i = 0; i < n; ++i) {
    e.emplace_back(i, static_cast<vertex_t>((i + 1) % n));
  }
  return build_graph(e);
}

void check_spectrum(const SpectralDecomposition &dec, std::vector<double> expected, double tol = 1e-9) {
  REQUIRE(dec.eigenvalues.size() == expected.size());
  std::sort(expected.rbegin(), expected.rend());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(dec.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(tol).scale(1.0));
  }
}

Eigen::MatrixXd to_eigen(const SymMatrix &m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return e;
}

} // namespace

TEST_CASE("closed form spectra") {
  check_spectrum(eigendecompose(complete_graph(2)), {1, -1});
  check_spectrum(eigendecompose(complete_graph(3)), {2, -1, -1});
  check_spectrum(eigendecompose(cycle(4)), {2, 0, 0, -2});

  for (std::size_t n : {5, 8, 13}) {
    std::vector<double> kn(n, -1.0);
    kn[0] = static_cast<double>(n) - 1.0;
    check_spectrum(eigendecompose(complete_graph(n)), kn);

    std::vector<double> cn;
    for (std::size_t k = 0; k < n; ++k) {
      cn.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
    }
    check_spectrum(eigendecompose(cycle(n)), cn);
  }

  const double r = std::sqrt(12.0);
  check_spectrum(eigendecompose(complete_bipartite(3, 4)), {r, 0, 0, 0, 0, 0, -r});

  // Paley(q): (q-1)/2 once, then (-1 +- sqrt q)/2 each (q-1)/2 times
  for (std::size_t q : {5, 13, 17}) {
    std::vector<double> ev{(static_cast<double>(q) - 1.0) / 2.0};
    for (std::size_t i = 0; i < (q - 1) / 2; ++i) {
      ev.push_back((-1.0 + std::sqrt(static_cast<double>(q))) / 2.0);
      ev.push_back((-1.0 - std::sqrt(static_cast<double>(q))) / 2.0);
    }
    check_spectrum(eigendecompose(paley_graph(q)), ev);
  }
}

TEST_CASE("eigensolver agrees with an independent solver") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 2 + seed % 29;
    const Graph g = gnp(n, 0.15 + 0.025 * static_cast<double>(seed % 30), seed);
    const auto dec = eigendecompose(g);
    const auto ref = oracle::eigenvalues(g);
    REQUIRE(dec.eigenvalues.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(dec.eigenvalues[i] - ref[i]) <= 1e-9 * static_cast<double>(n));
    }
    CHECK(dec.max_residual <= dec.residual_tol);
    CHECK(dec.max_orthogonality_error <= 1e-9);
  }
}

TEST_CASE("property: reconstruction and eigenvector sign convention") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 3 + seed % 20;
    const Graph g = gnp(n, 0.4, seed);
    const auto dec = eigendecompose(g);
    const auto a = SymMatrix::adjacency(g);
    const auto back = dec.weighted_projection(dec.eigenvalues);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(back(i, j) - a(i, j)));
      }
    }
    CHECK(worst <= static_cast<double>(n) * dec.residual_tol);
    for (std::size_t k = 0; k < n; ++k) {
      for (double x : dec.vector(k)) {
        if (std::abs(x) > dec.residual_tol) {
          CHECK(x > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("power sums") {
  auto k3 = complete_graph(3);
  auto ps = power_sums(eigendecompose(k3), k3);
  CHECK(ps.lambda1 == doctest::Approx(2.0));
  CHECK(ps.n1 == doctest::Approx(2.0));
  CHECK(ps.n2 == doctest::Approx(2.0));
  CHECK(ps.n3 == doctest::Approx(2.0));
  CHECK(ps.t == doctest::Approx(2.0));
  CHECK(ps.triangles == 1);

  auto c4 = cycle(4);
  ps = power_sums(eigendecompose(c4), c4);
  CHECK(ps.n1 == doctest::Approx(2.0));
  CHECK(ps.n2 == doctest::Approx(4.0));
  CHECK(ps.n3 == doctest::Approx(8.0));
  CHECK(ps.triangles == 0);

  const Graph empty(4);
  ps = power_sums(eigendecompose(empty), empty);
  CHECK(ps.lambda1 == doctest::Approx(0.0));
  CHECK(ps.n2 == doctest::Approx(0.0));

  // a decomposition from a different graph breaks the trace identities
  CHECK_THROWS_AS(power_sums(eigendecompose(k3), Graph(3)), SpectralError);
}

TEST_CASE("hadamard products and psd_check") {
  const auto id = psd_check(SymMatrix::identity(4));
  CHECK(id.psd);
  CHECK(id.min_eigenvalue == doctest::Approx(1.0));

  const auto bad = psd_check(SymMatrix::from_rows(2, {1, 2, 2, 1}));
  CHECK_FALSE(bad.psd);
  CHECK(bad.min_eigenvalue == doctest::Approx(-1.0));

  const Graph g = gnp(12, 0.5, 3);
  const auto a = SymMatrix::adjacency(g);
  const auto aa = hadamard(a, a);
  CHECK(inner(aa, SymMatrix::ones(12)) == doctest::Approx(2.0 * static_cast<double>(g.m())));
  CHECK(to_eigen(aa) == to_eigen(a));
  CHECK(to_eigen(hadamard(a, SymMatrix::ones(12))) == to_eigen(a));
  CHECK_THROWS_AS(hadamard(a, SymMatrix::ones(3)), SpectralError);

  // Gram o Gram stays PSD
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = 8, k = 3;
    CounterRng rng(seed, 4);
    std::vector<double> u(n * k), v(n * k);
    for (std::size_t i = 0; i < n * k; ++i) {
      u[i] = rng.normal(i);
      v[i] = rng.normal(n * k + i);
    }
    SymMatrix gu(n), gv(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double su = 0, sv = 0;
        for (std::size_t t = 0; t < k; ++t) {
          su += u[i * k + t] * u[j * k + t];
          sv += v[i * k + t] * v[j * k + t];
        }
        gu.set(i, j, su);
        gv.set(i, j, sv);
      }
    }
    const auto h = hadamard(gu, gv);
    CHECK(psd_check(h).psd);
    CHECK(oracle::min_eigenvalue(to_eigen(h)) >= -1e-9 * std::max(1.0, h.frobenius()));
  }
}

TEST_CASE("principal vector bounds") {
  const auto k8 = complete_graph(8);
  auto rep = principal_vector_check(k8, eigendecompose(k8));
  CHECK(rep.applicable);
  CHECK(rep.violations.empty());
  CHECK(rep.complement_density == 0.0);
  CHECK(eigendecompose(k8).vector(0)[3] == doctest::Approx(1.0 / std::sqrt(8.0)));

  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (vertex_t u = 0; u < 10; ++u) {
    for (vertex_t v = u + 1; v < 10; ++v) {
      if (!(u == 0 && v == 1)) {
        e.emplace_back(u, v);
      }
    }
  }
  const Graph k10e = build_graph(e);
  rep = principal_vector_check(k10e, eigendecompose(k10e));
  CHECK(rep.applicable);
  CHECK(rep.complement_density == doctest::Approx(1.0 / 45.0));
  CHECK(rep.violations.empty());

  const Graph half = gnp(20, 0.5, 1);
  CHECK_FALSE(principal_vector_check(half, eigendecompose(half)).applicable);
}

TEST_CASE("interlacing between a graph and its complement") {
  auto rep = weyl_check(complete_graph(3));
  CHECK(rep.ok);
  CHECK(rep.max_slack == doctest::Approx(0.0).scale(1.0));
  CHECK(rep.equality_cases == 2);

  CHECK(weyl_check(cycle(5)).ok);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 2 + seed % 29;
    CHECK(weyl_check(gnp(n, static_cast<double>(seed % 10) / 9.0, seed)).ok);
  }
}
