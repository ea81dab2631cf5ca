#pragma once

#include <string>

#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

enum class DomainKind { ball, box, simplex, l1_ball, halfspace };

std::string to_string(DomainKind kind);

// Constants of the constraint function g over a reference ball ||x|| <= outer.
struct DomainConstants {
  double rho = 0.0;  // lower bound on ||grad g|| on the boundary
  double G2 = 0.0;   // upper bound on ||grad g||
  double C2 = 0.0;   // upper bound on |g|
  double R = 0.0;    // outer radius of the domain itself (inf if unbounded)
};

// A closed convex set K = {x : g(x) <= 0} with an exact Euclidean projection.
class Domain {
 public:
  // ||x - center|| <= r. An empty center means the origin in any dimension.
  static Domain ball(double r, Point center = Point());
  static Domain box(Point lo, Point hi);
  static Domain simplex();
  static Domain l1_ball(double r);
  // <a, x> <= b
  static Domain halfspace(Point a, double b);

  DomainKind kind() const { return kind_; }
  double radius_param() const { return r_; }
  const Point& center() const { return center_; }
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  const Point& normal() const { return a_; }
  double offset() const { return b_; }

  bool contains(const Point& x, double tol = 1e-12) const;
  Point project(const Point& x) const;
  double g(const Point& x) const;
  Point grad_g(const Point& x) const;
  // argmin_{p in K} <grad, p>; used by conditional gradient.
  Point linear_minimizer(const Point& grad) const;
  DomainConstants constants(std::size_t dim, double outer = 1.0) const;

 private:
  Domain() = default;
  void check_dim(const Point& x) const;

  DomainKind kind_ = DomainKind::ball;
  double r_ = 1.0;
  Point center_;
  Point lo_, hi_;
  Point a_;
  double b_ = 0.0;
};

inline Point project(const Domain& d, const Point& x) { return d.project(x); }

// Euclidean projection onto the probability simplex scaled to sum `z`
// (sort-and-threshold; ties keep original index order).
Point project_simplex(const Point& x, double z = 1.0);
Point project_l1_ball(const Point& x, double r);

// Exact projection onto {||x-c1|| <= r1} ∩ {||x-c2|| <= r2}; throws if empty.
Point project_two_balls(const Point& x, const Point& c1, double r1, const Point& c2, double r2);

// Dykstra's alternating projections onto A ∩ B.
Point dykstra_project(const Domain& a, const Domain& b, const Point& x, int max_rounds = 100,
                      double tol = 1e-10);

}  // namespace smoothcvx
