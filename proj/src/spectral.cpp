#include "surplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace surplab {

SymMatrix SymMatrix::from_rows(std::size_t n, std::vector<double> entries) {
  if (entries.size() != n * n) {
    throw SpectralError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                        std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[i * n + j] != entries[j * n + i]) {
        throw SpectralError("matrix is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      }
    }
  }
  SymMatrix m;
  m.n_ = n;
  m.a_ = std::move(entries);
  return m;
}

SymMatrix SymMatrix::adjacency(const Graph &g) {
  SymMatrix m;
  m.n_ = g.n();
  m.a_ = g.adjacency_matrix();
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.a_[i * n + i] = 1.0;
  }
  return m;
}

void SymMatrix::add(std::size_t i, std::size_t j, double value) {
  a_[i * n_ + j] += value;
  if (i != j) {
    a_[j * n_ + i] += value;
  }
}

std::vector<double> SymMatrix::diagonal() const {
  std::vector<double> d(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    d[i] = a_[i * n_ + i];
  }
  return d;
}

double SymMatrix::max_abs() const {
  double best = 0.0;
  for (double x : a_) {
    best = std::max(best, std::abs(x));
  }
  return best;
}

double SymMatrix::frobenius() const {
  double s = 0.0;
  for (double x : a_) {
    s += x * x;
  }
  return std::sqrt(s);
}

double SymMatrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    s += a_[i * n_ + i];
  }
  return s;
}

double SymMatrix::indicator_form(const VertexSet &s) const {
  double total = 0.0;
  for (vertex_t i : s) {
    for (vertex_t j : s) {
      total += a_[i * n_ + j];
    }
  }
  return total;
}

double inner(const SymMatrix &a, const SymMatrix &b) {
  if (a.order() != b.order()) {
    throw SpectralError("inner: order mismatch");
  }
  double s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) {
    s += da[k] * db[k];
  }
  return s;
}

SymMatrix SpectralDecomposition::weighted_projection(std::span<const double> weights) const {
  SymMatrix x(n);
  for (std::size_t k = 0; k < weights.size() && k < n; ++k) {
    const double w = weights[k];
    if (w == 0.0) {
      continue;
    }
    const auto v = vector(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double wi = w * v[i];
      for (std::size_t j = i; j < n; ++j) {
        x.add(i, j, wi * v[j]);
      }
    }
  }
  return x;
}

double default_eigen_tolerance(const SymMatrix &m) {
  const double scale = std::max(m.max_abs(), 1e-3);
  return 1e-10 * static_cast<double>(std::max<std::size_t>(m.order(), 1)) * scale;
}

namespace {

struct JacobiState {
  std::size_t n;
  std::vector<double> a;  // row-major working copy
  std::vector<double> v;  // row-major accumulated rotations; column k = eigenvector k
};

double off_diagonal_norm(const JacobiState &s) {
  double off = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i + 1; j < s.n; ++j) {
      off += s.a[i * s.n + j] * s.a[i * s.n + j];
    }
  }
  return std::sqrt(2.0 * off);
}

void rotate(JacobiState &s, std::size_t p, std::size_t q) {
  const std::size_t n = s.n;
  auto &a = s.a;
  const double apq = a[p * n + q];
  if (apq == 0.0) {
    return;
  }
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double sn = t * c;

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) {
      continue;
    }
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    const double new_rp = c * arp - sn * arq;
    const double new_rq = sn * arp + c * arq;
    a[r * n + p] = new_rp;
    a[p * n + r] = new_rp;
    a[r * n + q] = new_rq;
    a[q * n + r] = new_rq;
  }
  auto &v = s.v;
  for (std::size_t r = 0; r < n; ++r) {
    const double vrp = v[r * n + p];
    const double vrq = v[r * n + q];
    v[r * n + p] = c * vrp - sn * vrq;
    v[r * n + q] = sn * vrp + c * vrq;
  }
}

void measure(const SymMatrix &m, SpectralDecomposition &dec) {
  const std::size_t n = dec.n;
  double max_res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = dec.vector(k);
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += m(i, j) * v[j];
      }
      const double d = row - dec.eigenvalues[k] * v[i];
      res2 += d * d;
    }
    max_res = std::max(max_res, std::sqrt(res2));
  }
  double max_orth = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const auto va = dec.vector(a);
    for (std::size_t b = a; b < n; ++b) {
      const auto vb = dec.vector(b);
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dot += va[i] * vb[i];
      }
      max_orth = std::max(max_orth, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  dec.max_residual = max_res;
  dec.max_orthogonality_error = max_orth;
}

} // namespace

SpectralDecomposition eigendecompose(const SymMatrix &m, std::optional<double> tol) {
  const std::size_t n = m.order();
  const double residual_tol = tol.value_or(default_eigen_tolerance(m));
  if (!(residual_tol > 0.0)) {
    throw SpectralError("eigendecompose: tolerance must be positive");
  }

  JacobiState s{n, std::vector<double>(m.data().begin(), m.data().end()),
                std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    s.v[i * n + i] = 1.0;
  }

  const double frob = m.frobenius();
  const double stop = 1e-15 * static_cast<double>(std::max<std::size_t>(n, 1)) * frob;
  int sweeps = 0;
  double previous = off_diagonal_norm(s);
  while (previous > stop && sweeps < kMaxJacobiSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(s, p, q);
      }
    }
    ++sweeps;
    const double off = off_diagonal_norm(s);
    if (off >= previous) {
      previous = off;
      break;
    }
    previous = off;
  }

  // Descending eigenvalues; ties keep the solver's index order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return s.a[x * n + x] > s.a[y * n + y];
  });

  SpectralDecomposition dec;
  dec.n = n;
  dec.residual_tol = residual_tol;
  dec.sweeps = sweeps;
  dec.eigenvalues.resize(n);
  dec.eigenvectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    dec.eigenvalues[k] = s.a[src * n + src];
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = s.v[i * n + src];
      if (std::abs(x) > residual_tol) {
        sign = x < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      dec.eigenvectors[k * n + i] = sign * s.v[i * n + src];
    }
  }

  measure(m, dec);
  if (dec.max_residual > residual_tol || dec.max_orthogonality_error > residual_tol) {
    throw ConvergenceError("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                               " sweeps (residual " + std::to_string(dec.max_residual) +
                               ", orthogonality " + std::to_string(dec.max_orthogonality_error) +
                               ", tol " + std::to_string(residual_tol) + ")",
                           dec.max_residual);
  }
  return dec;
}

SpectralDecomposition eigendecompose(const Graph &g, std::optional<double> tol) {
  return eigendecompose(SymMatrix::adjacency(g), tol);
}

double zero_classification_tol(const SpectralDecomposition &dec) {
  return std::max(1e-8 * std::abs(dec.lambda_max()), 1e-12);
}

PowerSums power_sums(const SpectralDecomposition &dec, const Graph &g, double tol) {
  if (dec.n != g.n()) {
    throw SpectralError("power_sums: decomposition order does not match graph");
  }
  PowerSums ps;
  ps.tol = tol;
  if (dec.n == 0) {
    return ps;
  }
  const double zero = zero_classification_tol(dec);
  ps.lambda1 = dec.eigenvalues[0];
  for (std::size_t i = 1; i < dec.n; ++i) {
    const double l = dec.eigenvalues[i];
    if (l > zero) {
      ps.p1 += l;
      ps.p2 += l * l;
      ps.p3 += l * l * l;
    } else if (l < -zero) {
      const double a = -l;
      ps.n1 += a;
      ps.n2 += a * a;
      ps.n3 += a * a * a;
    }
  }
  ps.t = ps.n3 - ps.p3;
  ps.triangles = g.triangle_count();

  const double l1 = ps.lambda1;
  const double m2 = 2.0 * static_cast<double>(g.m());
  const double six_t = 6.0 * static_cast<double>(ps.triangles);
  ps.trace_residual = std::abs(l1 + ps.p1 - ps.n1) / std::max(1.0, std::abs(l1) + ps.p1 + ps.n1);
  ps.frobenius_residual = std::abs(l1 * l1 + ps.p2 + ps.n2 - m2) / std::max(1.0, m2);
  ps.triangle_residual = std::abs(l1 * l1 * l1 - ps.t - six_t) /
                         std::max(1.0, std::abs(l1 * l1 * l1) + ps.p3 + ps.n3);
  if (ps.trace_residual > tol || ps.frobenius_residual > tol || ps.triangle_residual > tol) {
    throw SpectralError("power sum identities violated (trace " + std::to_string(ps.trace_residual) +
                        ", frobenius " + std::to_string(ps.frobenius_residual) + ", triangle " +
                        std::to_string(ps.triangle_residual) + ")");
  }
  return ps;
}

SymMatrix hadamard(std::span<const SymMatrix> ms) {
  if (ms.empty()) {
    throw SpectralError("hadamard: empty operand list");
  }
  const std::size_t n = ms.front().order();
  for (const auto &m : ms) {
    if (m.order() != n) {
      throw SpectralError("hadamard: order mismatch (" + std::to_string(m.order()) + " vs " +
                          std::to_string(n) + ")");
    }
  }
  std::vector<double> out(ms.front().data().begin(), ms.front().data().end());
  const auto count = static_cast<std::ptrdiff_t>(out.size());
  for (std::size_t k = 1; k < ms.size(); ++k) {
    const auto d = ms[k].data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t e = 0; e < count; ++e) {
      out[static_cast<std::size_t>(e)] *= d[static_cast<std::size_t>(e)];
    }
  }
  return SymMatrix::from_rows(n, std::move(out));
}

SymMatrix hadamard(const SymMatrix &a, const SymMatrix &b) {
  const SymMatrix pair[] = {a, b};
  return hadamard(pair);
}

PsdVerdict psd_check(const SymMatrix &m, double tol) {
  PsdVerdict v;
  v.scale = std::max(1.0, m.frobenius());
  v.threshold = -tol * v.scale;
  if (m.order() == 0) {
    v.psd = true;
    return v;
  }
  const auto dec = eigendecompose(m);
  v.min_eigenvalue = dec.lambda_min();
  v.psd = v.min_eigenvalue >= v.threshold;
  return v;
}

PrincipalVectorReport principal_vector_check(const Graph &g, const SpectralDecomposition &dec) {
  PrincipalVectorReport r;
  const std::size_t n = g.n();
  if (n < 2 || dec.n != n) {
    return r;
  }
  const Graph comp = complement(g);
  const auto stats = densities_and_degrees(comp);
  r.complement_density = stats.edge_density;
  r.complement_max_degree = stats.max_degree;
  r.applicable = stats.edge_density <= 0.1;
  if (!r.applicable) {
    return r;
  }
  const double nd = static_cast<double>(n);
  const double sq = std::sqrt(nd);
  r.lower = (1.0 - 2.0 * static_cast<double>(stats.max_degree) / nd) / sq;
  r.upper = (1.0 + 2.0 * stats.edge_density + 2.0 / nd) / sq;
  r.tol = dec.residual_tol;
  const auto v1 = dec.vector(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (v1[i] < r.lower - r.tol || v1[i] > r.upper + r.tol) {
      r.violations.push_back(static_cast<vertex_t>(i));
    }
  }
  return r;
}

WeylReport weyl_check(const Graph &g, double tol) {
  WeylReport r;
  r.tol = tol;
  const std::size_t n = g.n();
  if (n < 2) {
    return r;
  }
  const auto lam = eigendecompose(g).eigenvalues;
  const auto mu = eigendecompose(complement(g)).eigenvalues;
  r.max_slack = -std::numeric_limits<double>::infinity();
  // 1-based: 1 + mu_{i+1} <= -lambda_{n+1-i}; 0-based mu[i], lam[n-i].
  for (std::size_t i = 1; i < n; ++i) {
    const double slack = 1.0 + mu[i] + lam[n - i];
    r.slacks.push_back(slack);
    r.max_slack = std::max(r.max_slack, slack);
    if (slack > tol) {
      r.ok = false;
    }
    if (std::abs(slack) <= tol) {
      ++r.equality_cases;
    }
  }
  return r;
}

} // namespace surplab
