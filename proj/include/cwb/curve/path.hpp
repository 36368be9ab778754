#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "cwb/curve/curve.hpp"
#include "cwb/curve/gauss_legendre.hpp"

namespace cwb::curve {

enum class SegmentKind { line, into_branch, out_of_branch };

// Continued square root of a segment's radicand q(t), sampled densely enough that the
// nearest sample fixes the sign of the principal root anywhere on [0, 1].
class SheetTable {
 public:
  SheetTable(const std::function<cplx(real)>& q, cplx r0);
  cplx at(real t, cplx principal) const;
  cplx end() const { return r_.back(); }
  cplx start() const { return r_.front(); }

 private:
  std::vector<real> t_;
  std::vector<cplx> r_;
};

// One piece of a path in the odd-model x-plane. With t in [0,1]:
//   line:          x = a + (b - a) t,            y = r(t),            r^2 = f(x)
//   into_branch:   x = e + (a - e)(1 - t)^2,     y = (1 - t) r(t),    r^2 = lead (a - e) prod_{m != k}(x - e_m)
//   out_of_branch: x = e + (b - e) t^2,          y = t r(t),          r^2 = lead (b - e) prod_{m != k}(x - e_m)
// so that dx/y = (smooth factor) / r dt in all three cases. [t0, t1] selects a sub-piece.
class Segment {
 public:
  Segment(CurvePtr curve, SegmentKind kind, cplx a, cplx b, int branch, cplx r0);

  SegmentKind kind() const { return kind_; }
  int branch() const { return branch_; }
  real t0() const { return t0_; }
  real t1() const { return t1_; }

  cplx x(real t) const;
  cplx radicand(real t) const;
  cplx r(real t) const;
  cplx y(real t) const;
  cplx dx_over_y(real t) const;  // per unit t

  // Values at the ends of the selected sub-piece.
  cplx start_x() const { return x(t0_); }
  cplx end_x() const { return x(t1_); }
  cplx start_y() const { return y(t0_); }
  cplx end_y() const { return y(t1_); }
  cplx end_r() const { return r(t1_); }

  Segment sub(real s0, real s1) const;  // local parameters in [0,1] of this sub-piece
  Segment reversed() const;
  real length() const;
  real clearance() const;  // distance from the traced piece to branch points other than its own

 private:
  CurvePtr curve_;
  SegmentKind kind_;
  cplx a_, b_;
  int branch_;
  real t0_ = 0, t1_ = 1;
  std::shared_ptr<const SheetTable> table_;
};

struct PanelNodes {
  std::vector<cplx> x;    // node positions
  std::vector<cplx> dxy;  // dx/y per unit of the panel variable (weights not applied)
  std::vector<real> weights;
};

class Path {
 public:
  explicit Path(CurvePtr curve) : curve_(std::move(curve)) {}

  const CurvePtr& curve() const { return curve_; }
  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  void append(const Segment& s);
  void append(const Path& p);

  cplx start_x() const;
  cplx start_y() const;
  cplx end_x() const;
  cplx end_y() const;
  bool is_closed(real tol = 1e-9L) const;

  Path reversed() const;
  // Split at position u in [0, #segments]: the integer part selects the segment.
  std::pair<Path, Path> split(real u) const;

  // Gauss-Legendre panels over every segment; panel count grows with length / clearance.
  std::vector<PanelNodes> panels(const GaussLegendre& rule, int base_panels) const;

 private:
  CurvePtr curve_;
  std::vector<Segment> segs_;
};

// Builds paths by continuation from a starting sheet point.
class PathBuilder {
 public:
  PathBuilder(CurvePtr curve, const SheetPoint& start);

  PathBuilder& line_to(cplx x);
  PathBuilder& route_to(cplx x);  // polyline with detours around branch points
  PathBuilder& lasso(int k);      // from the current point: into e_k and back out on the other sheet
  PathBuilder& into(int k);       // ends at the branch point
  PathBuilder& out_to(cplx x, cplx y_target);  // from the current branch point, choosing the sheet of y_target
  PathBuilder& append(const Path& p);

  cplx x() const { return x_; }
  cplx y() const { return y_; }
  int at_branch() const { return branch_; }
  Path build() const { return path_; }

 private:
  CurvePtr curve_;
  Path path_;
  cplx x_, y_;
  int branch_ = -1;
  cplx last_r_;
};

// Polyline from a to b keeping at least the curve clearance from every branch point.
std::vector<cplx> plan_route(const Curve& c, cplx a, cplx b);

// The path from the hub (base sheet) along lasso words; loops of the homology basis use this.
Path lasso_word_path(const CurvePtr& c, const std::vector<int>& word);

// p -> hub, then a sheet-fixing lasso around e_fix if the hub is reached on the other sheet.
Path path_to_hub(const CurvePtr& c, const SheetPoint& p, int fix_branch = 0);
// Any path between two sheet points via the hub.
Path route(const CurvePtr& c, const SheetPoint& from, const SheetPoint& to, int fix_branch = 0);

}  // namespace cwb::curve
