#include "jaffardkit/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "jaffardkit/errors.hpp"
#include "jaffardkit/rng.hpp"

namespace jaffardkit {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ParameterError(msg);
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  require(!coords_.empty(), "point must have at least one coordinate");
  for (const double c : coords_) {
    require(std::isfinite(c), "point coordinates must be finite");
  }
}

double Point::dist(const Point& other) const {
  double acc = 0.0;
  for (int i = 0; i < dim(); ++i) {
    const double diff = coords_[i] - other.coords_[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

double Point::dist_inf(const Point& other) const {
  double acc = 0.0;
  for (int i = 0; i < dim(); ++i) {
    acc = std::max(acc, std::abs(coords_[i] - other.coords_[i]));
  }
  return acc;
}

double Point::norm() const {
  double acc = 0.0;
  for (const double c : coords_) acc += c * c;
  return std::sqrt(acc);
}

PointSet::PointSet(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  require(dim_ >= 1, "dimension must be positive");
  require(!points_.empty(), "point set must be nonempty");
  for (const Point& p : points_) {
    if (p.dim() != dim_) throw ShapeError("point dimension mismatch");
  }

  bbox_lo_.assign(dim_, std::numeric_limits<double>::infinity());
  bbox_hi_.assign(dim_, -std::numeric_limits<double>::infinity());
  for (const Point& p : points_) {
    for (int i = 0; i < dim_; ++i) {
      bbox_lo_[i] = std::min(bbox_lo_[i], p[i]);
      bbox_hi_[i] = std::max(bbox_hi_[i], p[i]);
    }
  }

  separation_ = 0.0;
  diameter_ = 0.0;
  if (points_.size() > 1) {
    separation_ = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < points_.size(); ++a) {
      for (std::size_t b = a + 1; b < points_.size(); ++b) {
        const double d = points_[a].dist(points_[b]);
        separation_ = std::min(separation_, d);
        diameter_ = std::max(diameter_, d);
      }
    }
    require(separation_ > 0.0, "points must be distinct");
  }

  relsep_count_ = compute_relsep_count(points_, dim_);
}

double PointSet::boundary_distance(const Point& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dim_; ++i) {
    best = std::min(best, p[i] - bbox_lo_[i]);
    best = std::min(best, bbox_hi_[i] - p[i]);
  }
  return best;
}

std::size_t PointSet::find(const Point& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == p) return i;
  }
  return npos;
}

PointSet make_lattice(int d, int extent, double spacing) {
  require(d >= 1 && d <= 3, "dimension must be 1, 2 or 3");
  require(extent >= 1, "extent must be positive");
  require(spacing > 0.0 && std::isfinite(spacing), "spacing must be positive");

  std::vector<Point> pts;
  std::vector<int> z(d, 0);
  for (;;) {
    std::vector<double> c(d);
    for (int i = 0; i < d; ++i) c[i] = spacing * z[i];
    pts.emplace_back(std::move(c));
    int axis = 0;
    while (axis < d) {
      if (++z[axis] < extent) break;
      z[axis] = 0;
      ++axis;
    }
    if (axis == d) break;
  }
  return PointSet(d, std::move(pts));
}

PointSet make_jittered(int d, int extent, double spacing, double jitter,
                       std::uint64_t seed) {
  require(jitter >= 0.0 && jitter < spacing / 2.0,
          "jitter must lie in [0, spacing/2)");
  PointSet lattice = make_lattice(d, extent, spacing);

  Rng base(seed);
  std::vector<Point> pts;
  pts.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Rng stream = base.split(i);
    std::vector<double> c(d);
    for (int axis = 0; axis < d; ++axis) {
      // uniform displacement with sup-norm <= jitter
      c[axis] = lattice.point(i)[axis] + jitter * (2.0 * stream.uniform() - 1.0);
    }
    pts.emplace_back(std::move(c));
  }
  return PointSet(d, std::move(pts));
}

int compute_relsep_count(const std::vector<Point>& points, int dim) {
  if (points.empty()) throw ParameterError("relsep_count of empty set");

  // A fullest closed cube can be taken with its upper corner y touching
  // point coordinates on every axis: for the active set S, y_i ranges over
  // the interval [max_S p_i, min_S p_i + 1], so the left end max_S p_i is
  // always attainable. Sweep all per-axis coordinate values as candidates
  // and count points q with y_i - 1 <= q_i <= y_i.
  std::vector<std::vector<double>> axis_values(dim);
  for (int i = 0; i < dim; ++i) {
    std::set<double> vals;
    for (const Point& p : points) vals.insert(p[i]);
    axis_values[i].assign(vals.begin(), vals.end());
  }

  int best = 0;
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> y(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) y[i] = axis_values[i][idx[i]];
    int count = 0;
    for (const Point& q : points) {
      bool inside = true;
      for (int i = 0; i < dim; ++i) {
        if (q[i] > y[i] || q[i] < y[i] - 1.0) {
          inside = false;
          break;
        }
      }
      if (inside) ++count;
    }
    best = std::max(best, count);

    int axis = 0;
    while (axis < dim) {
      if (++idx[axis] < axis_values[axis].size()) break;
      idx[axis] = 0;
      ++axis;
    }
    if (axis == dim) break;
  }
  return best;
}

double point_sum_constant(const PointSet& X, double s,
                          const std::vector<Point>& probe_grid) {
  require(s > X.dim(), "point_sum_constant requires s > d");
  require(!probe_grid.empty(), "probe grid must be nonempty");
  double best = 0.0;
  for (const Point& x : probe_grid) {
    if (x.dim() != X.dim()) throw ShapeError("probe dimension mismatch");
    double acc = 0.0;
    for (const Point& k : X.points()) {
      acc += std::pow(1.0 + x.dist(k), -s);
    }
    best = std::max(best, acc);
  }
  return best;
}

double convolution_constant(const PointSet& X, double s) {
  require(s > X.dim(), "convolution_constant requires s > d");
  const std::size_t n = X.size();

  // nu_s(p_a - p_b)^{-1} table; the triple loop then runs on lookups.
  std::vector<double> inv(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      inv[a * n + b] = std::pow(1.0 + X.point(a).dist(X.point(b)), -s);
    }
  }

  double best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      double acc = 0.0;
      const double* rk = &inv[k * n];
      const double* rl = &inv[l * n];
      for (std::size_t m = 0; m < n; ++m) acc += rk[m] * rl[m];
      best = std::max(best, acc / inv[k * n + l]);
    }
  }
  return best;
}

NeighborPartition neighbor_partition(const PointSet& X, const Point& k,
                                     double tau) {
  require(tau > 0.0, "tau must be positive");
  const std::size_t center = X.find(k);
  require(center != PointSet::npos, "partition center must belong to X");

  const double threshold = std::ceil(tau);
  NeighborPartition part{center, tau, {}, {}};
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (k.dist_inf(X.point(i)) <= threshold) {
      part.near.push_back(i);
    } else {
      part.far.push_back(i);
    }
  }
  return part;
}

double tail_sum(const PointSet& X, const Point& k, double tau, double s) {
  require(s > X.dim(), "tail_sum requires s > d");
  const NeighborPartition part = neighbor_partition(X, k, tau);
  double acc = 0.0;
  for (const std::size_t i : part.far) {
    acc += std::pow(1.0 + k.dist(X.point(i)), -s);
  }
  return acc;
}

double counting_constant(const PointSet& X, double s, double tau0) {
  require(s > X.dim(), "counting_constant requires s > d");
  require(tau0 > 0.0, "tau0 must be positive");
  const int d = X.dim();

  // Both bounds are piecewise in ceil(tau). On tau in (j-1, j] the near
  // count is fixed, |near|/tau^d peaks at the left end and tail*tau^{s-d}
  // at the right end; past the sup-norm diameter the near set is all of X
  // and the tail vanishes.
  double diam_inf = 0.0;
  for (std::size_t a = 0; a < X.size(); ++a) {
    for (std::size_t b = a + 1; b < X.size(); ++b) {
      diam_inf = std::max(diam_inf, X.point(a).dist_inf(X.point(b)));
    }
  }
  const int j_begin = std::max(1, static_cast<int>(std::ceil(tau0)));
  const int j_end = static_cast<int>(std::ceil(diam_inf)) + 1;

  double best = 0.0;
  for (std::size_t c = 0; c < X.size(); ++c) {
    const Point& k = X.point(c);
    for (int j = j_begin; j <= j_end; ++j) {
      std::size_t near = 0;
      double tail = 0.0;
      for (const Point& q : X.points()) {
        if (k.dist_inf(q) <= static_cast<double>(j)) {
          ++near;
        } else {
          tail += std::pow(1.0 + k.dist(q), -s);
        }
      }
      const double tau_inf = std::max(tau0, static_cast<double>(j - 1));
      best = std::max(best, static_cast<double>(near) / std::pow(tau_inf, d));
      best = std::max(best, tail * std::pow(static_cast<double>(j), s - d));
    }
  }
  return best;
}

}  // namespace jaffardkit
