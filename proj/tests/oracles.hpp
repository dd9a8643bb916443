#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meshtree/mesh.hpp"

namespace oracle {

using meshtree::Edge;
using meshtree::NodeId;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> floyd_warshall(std::size_t n,
                                                            const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : edges) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Pattern of the boolean matrix A + A*A with the diagonal cleared.
inline std::vector<Edge> square_pattern(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : edges) a[e.u][e.v] = a[e.v][e.u] = 1;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int s = a[i][j];
      for (std::size_t k = 0; k < n && !s; ++k) s = a[i][k] & a[k][j];
      if (s) out.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  return out;
}

inline int exact_orient(const double* a, const double* b, const double* c) {
  const Rational v = (Rational(b[0]) - Rational(a[0])) * (Rational(c[1]) - Rational(a[1])) -
                     (Rational(b[1]) - Rational(a[1])) * (Rational(c[0]) - Rational(a[0]));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Sign of the full 4x4 lifted determinant | x y x^2+y^2 1 |, expanded along
// the last column; positive when d is strictly inside circle(a, b, c) for a
// counter-clockwise triangle.
inline int exact_incircle(const double* a, const double* b, const double* c, const double* d) {
  const double* p[4] = {a, b, c, d};

  // Same expansion in long double with a generous relative margin; only
  // near-zero results go on to rational arithmetic.
  {
    long double f[4][3], g[4][3];
    for (int i = 0; i < 4; ++i) {
      f[i][0] = p[i][0];
      f[i][1] = p[i][1];
      f[i][2] = f[i][0] * f[i][0] + f[i][1] * f[i][1];
      for (int j = 0; j < 3; ++j) g[i][j] = f[i][j] < 0 ? -f[i][j] : f[i][j];
    }
    auto d3 = [](const long double (&m)[4][3], int r0, int r1, int r2, bool abs_sum) {
      const long double t0 = m[r1][1] * m[r2][2], t1 = m[r1][2] * m[r2][1];
      const long double t2 = m[r1][0] * m[r2][2], t3 = m[r1][2] * m[r2][0];
      const long double t4 = m[r1][0] * m[r2][1], t5 = m[r1][1] * m[r2][0];
      if (abs_sum) return m[r0][0] * (t0 + t1) + m[r0][1] * (t2 + t3) + m[r0][2] * (t4 + t5);
      return m[r0][0] * (t0 - t1) - m[r0][1] * (t2 - t3) + m[r0][2] * (t4 - t5);
    };
    const long double det =
        -d3(f, 1, 2, 3, false) + d3(f, 0, 2, 3, false) - d3(f, 0, 1, 3, false) + d3(f, 0, 1, 2, false);
    const long double mag =
        d3(g, 1, 2, 3, true) + d3(g, 0, 2, 3, true) + d3(g, 0, 1, 3, true) + d3(g, 0, 1, 2, true);
    if (det > 1e-12L * mag) return 1;
    if (-det > 1e-12L * mag) return -1;
  }

  Rational m[4][3];
  for (int i = 0; i < 4; ++i) {
    m[i][0] = Rational(p[i][0]);
    m[i][1] = Rational(p[i][1]);
    m[i][2] = m[i][0] * m[i][0] + m[i][1] * m[i][1];
  }
  auto det3 = [&](int r0, int r1, int r2) {
    return m[r0][0] * (m[r1][1] * m[r2][2] - m[r1][2] * m[r2][1]) -
           m[r0][1] * (m[r1][0] * m[r2][2] - m[r1][2] * m[r2][0]) +
           m[r0][2] * (m[r1][0] * m[r2][1] - m[r1][1] * m[r2][0]);
  };
  // det = -M(0) + M(1) - M(2) + M(3), minors along the column of ones.
  const Rational det = -det3(1, 2, 3) + det3(0, 2, 3) - det3(0, 1, 3) + det3(0, 1, 2);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

// Convex hull area by monotone chain with exact turns, shoelace in long double.
inline long double hull_area(const std::vector<std::array<double, 2>>& pts) {
  std::vector<std::array<double, 2>> p = pts;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return 0;
  std::vector<std::array<double, 2>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && exact_orient(h[k - 2].data(), h[k - 1].data(), p[i].data()) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && exact_orient(h[k - 2].data(), h[k - 1].data(), p[i - 1].data()) <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  long double area = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    area += static_cast<long double>(a[0]) * b[1] - static_cast<long double>(b[0]) * a[1];
  }
  return area / 2;
}

inline std::vector<Edge> grid_edges(std::size_t rows, std::size_t cols) {
  std::vector<Edge> out;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto id = static_cast<NodeId>(r * cols + c);
      if (c + 1 < cols) out.push_back({id, id + 1});
      if (r + 1 < rows) out.push_back({id, static_cast<NodeId>(id + cols)});
    }
  }
  return out;
}

inline std::vector<double> grid_points(std::size_t rows, std::size_t cols) {
  std::vector<double> out;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      out.push_back(static_cast<double>(c));
      out.push_back(static_cast<double>(r));
    }
  return out;
}

inline std::vector<Edge> path_edges(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  return out;
}

inline std::vector<Edge> complete_edges(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  return out;
}

// Erdos-Renyi graph in canonical order.
inline std::vector<Edge> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) out.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  return out;
}

inline std::vector<double> random_coords(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out(n * dim);
  for (auto& x : out) x = u(rng);
  return out;
}

inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
  const auto d = floyd_warshall(n, edges);
  for (std::size_t j = 0; j < n; ++j)
    if (d[0][j] >= kInf) return false;
  return true;
}

}  // namespace oracle
