#include "drkernel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "drkernel/linalg.hpp"

namespace drkernel {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-12;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
      if (p != q) sum += a(p, q) * a(p, q);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& input, bool want_vectors) {
  if (input.rows() != input.cols()) throw Error("spectrum needs a square matrix");
  if (asymmetry(input) > 1e-9) throw Error("spectrum needs a symmetric matrix");
  const Eigen::Index n = input.rows();
  Matrix a = 0.5 * (input + input.transpose());
  Matrix v;
  if (want_vectors) v = Matrix::Identity(n, n);

  const double stop = kOffDiagonalTol * std::max(1.0, a.norm());
  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm(a) >= stop) {
    ++sweeps;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (want_vectors) {
          for (Eigen::Index r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    out.values(c) = a(order[c], order[c]);
    if (want_vectors) out.vectors.col(c) = v.col(order[c]);
  }
  return out;
}

Vector spectrum(const Matrix& a) { return jacobi_eigen(a).values; }

double symmetric_determinant(const Matrix& a) {
  if (a.size() == 0) return 1.0;
  return spectrum(a).prod();
}

std::vector<EigenCluster> cluster_eigenvalues(const Vector& ascending, double gap) {
  std::vector<EigenCluster> out;
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    if (!out.empty() && ascending(i) - ascending(i - 1) < gap) {
      EigenCluster& c = out.back();
      c.value = (c.value * c.multiplicity + ascending(i)) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({ascending(i), 1});
    }
  }
  return out;
}

double multiset_distance(const Vector& ascending, const std::vector<EigenCluster>& expected) {
  std::vector<double> flat;
  for (const EigenCluster& c : expected) flat.insert(flat.end(), static_cast<std::size_t>(c.multiplicity), c.value);
  if (static_cast<Eigen::Index>(flat.size()) != ascending.size()) return std::numeric_limits<double>::infinity();
  std::sort(flat.begin(), flat.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    worst = std::max(worst, std::abs(ascending(static_cast<Eigen::Index>(i)) - flat[i]));
  }
  return worst;
}

}  // namespace drkernel
