#pragma once

#include <cstdint>
#include <vector>

namespace jaffardkit {

// A position in R^d. Entries must be finite.
class Point {
 public:
  explicit Point(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  double dist(const Point& other) const;      // Euclidean
  double dist_inf(const Point& other) const;  // sup-norm
  double norm() const;                        // Euclidean distance to origin

  bool operator==(const Point& other) const { return coords_ == other.coords_; }

 private:
  std::vector<double> coords_;
};

// Finite index set X subset of R^d with its separation constants cached.
//
// relsep_count is the exact maximum number of points contained in any
// closed unit cube x+[0,1]^d; separation is the minimum pairwise Euclidean
// distance (0 for a single point, as a "no pairs" sentinel).
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> points);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  int relsep_count() const { return relsep_count_; }
  double separation() const { return separation_; }
  double diameter() const { return diameter_; }  // max pairwise Euclidean

  // Distance from p to the boundary of the axis-aligned bounding box of X.
  double boundary_distance(const Point& p) const;

  // Index of an exactly matching point, or npos.
  std::size_t find(const Point& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int dim_;
  std::vector<Point> points_;
  int relsep_count_ = 1;
  double separation_ = 0.0;
  double diameter_ = 0.0;
  std::vector<double> bbox_lo_, bbox_hi_;
};

// The partition of X around a center k at scope tau: `near` holds indices n
// with |k-n|_inf <= ceil(tau), `far` the rest.
struct NeighborPartition {
  std::size_t center_index;
  double tau;
  std::vector<std::size_t> near;
  std::vector<std::size_t> far;
};

// Canonical test sets.
PointSet make_lattice(int d, int extent, double spacing);
PointSet make_jittered(int d, int extent, double spacing, double jitter,
                       std::uint64_t seed);

// Exact count of the fullest closed unit cube; used by PointSet's cache and
// exposed for direct use on raw point lists.
int compute_relsep_count(const std::vector<Point>& points, int dim);

// max over probe points x of sum_k (1+|x-k|)^{-s}. Requires s > d.
double point_sum_constant(const PointSet& X, double s,
                          const std::vector<Point>& probe_grid);

// max over (k,l) of nu_s(k-l) * sum_n nu_s(k-n)^{-1} nu_s(n-l)^{-1}.
// Requires s > d.
double convolution_constant(const PointSet& X, double s);

NeighborPartition neighbor_partition(const PointSet& X, const Point& k,
                                     double tau);

// sum over the far set of (1+|k-n|)^{-s}; Euclidean norm inside the weight,
// sup-norm in the partition threshold.
double tail_sum(const PointSet& X, const Point& k, double tau, double s);

// Empirical constant C such that, for every center k in X and every
// tau >= tau0, |near(k,tau)| <= C tau^d and tail_sum(k,tau) <= C tau^{d-s}.
// Exact at finite truncation (sweeps the integer thresholds).
double counting_constant(const PointSet& X, double s, double tau0);

}  // namespace jaffardkit
