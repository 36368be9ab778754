#include "cwb/curve/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cwb::curve {

SheetTable::SheetTable(const std::function<cplx(real)>& q, cplx r0) {
  const cplx q0 = q(0);
  if (std::abs(r0 * r0 - q0) > 1e-8L * std::max<real>(std::abs(q0), 1e-30L))
    throw NumericalError("sheet table: starting value is not a square root of the radicand");
  t_.push_back(0);
  r_.push_back(r0);
  real t = 0, h = 1.0L / 64;
  cplx prev = r0;
  while (t < 1) {
    const real step = std::min(h, 1 - t);
    cplx s = std::sqrt(q(t + step));
    if ((s * std::conj(prev)).real() < 0) s = -s;
    if (std::abs(s - prev) > 0.05L * std::abs(prev)) {
      h = step / 2;
      if (h < 1e-14L) throw NumericalError("sheet tracking: step-size underflow near a branch point");
      continue;
    }
    t += step;
    if (1 - t < 1e-18L) t = 1;
    t_.push_back(t);
    r_.push_back(s);
    prev = s;
    h = std::min<real>(step * 1.5L, 1.0L / 64);
  }
}

cplx SheetTable::at(real t, cplx principal) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - t_.begin());
  if (i == t_.size()) i = t_.size() - 1;
  if (i > 0 && std::abs(t_[i - 1] - t) < std::abs(t_[i] - t)) --i;
  return (principal * std::conj(r_[i])).real() >= 0 ? principal : -principal;
}

Segment::Segment(CurvePtr curve, SegmentKind kind, cplx a, cplx b, int branch, cplx r0)
    : curve_(std::move(curve)), kind_(kind), a_(a), b_(b), branch_(branch) {
  if (kind != SegmentKind::line && (branch < 0 || branch >= static_cast<int>(curve_->branch_points().size())))
    throw InvalidArgument("segment: bad branch index");
  table_ = std::make_shared<SheetTable>([this](real t) { return radicand(t); }, r0);
}

cplx Segment::x(real t) const {
  switch (kind_) {
    case SegmentKind::line: return a_ + (b_ - a_) * t;
    case SegmentKind::into_branch: {
      const cplx e = curve_->branch_points()[branch_];
      return e + (a_ - e) * ((1 - t) * (1 - t));
    }
    case SegmentKind::out_of_branch: {
      const cplx e = curve_->branch_points()[branch_];
      return e + (b_ - e) * (t * t);
    }
  }
  return 0;
}

cplx Segment::radicand(real t) const {
  const cplx xt = x(t);
  switch (kind_) {
    case SegmentKind::line: return curve_->f_odd(xt);
    case SegmentKind::into_branch: return (a_ - curve_->branch_points()[branch_]) * curve_->f_except(branch_, xt);
    case SegmentKind::out_of_branch: return (b_ - curve_->branch_points()[branch_]) * curve_->f_except(branch_, xt);
  }
  return 0;
}

cplx Segment::r(real t) const { return table_->at(t, std::sqrt(radicand(t))); }

cplx Segment::y(real t) const {
  switch (kind_) {
    case SegmentKind::line: return r(t);
    case SegmentKind::into_branch: return (1 - t) * r(t);
    case SegmentKind::out_of_branch: return t * r(t);
  }
  return 0;
}

cplx Segment::dx_over_y(real t) const {
  switch (kind_) {
    case SegmentKind::line: return (b_ - a_) / r(t);
    case SegmentKind::into_branch: return -2.0L * (a_ - curve_->branch_points()[branch_]) / r(t);
    case SegmentKind::out_of_branch: return 2.0L * (b_ - curve_->branch_points()[branch_]) / r(t);
  }
  return 0;
}

Segment Segment::sub(real s0, real s1) const {
  Segment out = *this;
  out.t0_ = t0_ + (t1_ - t0_) * s0;
  out.t1_ = t0_ + (t1_ - t0_) * s1;
  return out;
}

Segment Segment::reversed() const {
  switch (kind_) {
    case SegmentKind::line: return Segment(curve_, SegmentKind::line, end_x(), start_x(), -1, end_y());
    case SegmentKind::into_branch: {
      Segment out(curve_, SegmentKind::out_of_branch, curve_->branch_points()[branch_], a_, branch_, r(1));
      out.t0_ = 1 - t1_;
      out.t1_ = 1 - t0_;
      return out;
    }
    case SegmentKind::out_of_branch: {
      Segment out(curve_, SegmentKind::into_branch, b_, curve_->branch_points()[branch_], branch_, r(1));
      out.t0_ = 1 - t1_;
      out.t1_ = 1 - t0_;
      return out;
    }
  }
  return *this;
}

real Segment::length() const { return std::abs(end_x() - start_x()); }

real Segment::clearance() const {
  real d = std::numeric_limits<real>::max();
  const auto& e = curve_->branch_points();
  for (int m = 0; m < static_cast<int>(e.size()); ++m)
    if (m != branch_) d = std::min(d, segment_point_distance(start_x(), end_x(), e[m]));
  return d;
}

void Path::append(const Segment& s) {
  if (!segs_.empty()) {
    const real scale = std::max<real>(1, std::abs(end_y()));
    if (std::abs(s.start_x() - end_x()) > 1e-12L * std::max<real>(1, std::abs(end_x())) ||
        std::abs(s.start_y() - end_y()) > 1e-7L * scale)
      throw NumericalError("path segments do not chain");
  }
  segs_.push_back(s);
}

void Path::append(const Path& p) {
  for (const auto& s : p.segs_) append(s);
}

cplx Path::start_x() const { return segs_.front().start_x(); }
cplx Path::start_y() const { return segs_.front().start_y(); }
cplx Path::end_x() const { return segs_.back().end_x(); }
cplx Path::end_y() const { return segs_.back().end_y(); }

bool Path::is_closed(real tol) const {
  if (segs_.empty()) return true;
  return std::abs(start_x() - end_x()) < tol && std::abs(start_y() - end_y()) < tol * std::max<real>(1, std::abs(start_y()));
}

Path Path::reversed() const {
  Path out(curve_);
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) out.segs_.push_back(it->reversed());
  return out;
}

std::pair<Path, Path> Path::split(real u) const {
  if (u < 0 || u > static_cast<real>(segs_.size())) throw InvalidArgument("split position out of range");
  const auto k = static_cast<std::size_t>(std::floor(u));
  const real frac = u - static_cast<real>(k);
  Path head(curve_), tail(curve_);
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i < k)
      head.segs_.push_back(segs_[i]);
    else if (i > k || frac == 0)
      tail.segs_.push_back(segs_[i]);
    else {
      head.segs_.push_back(segs_[i].sub(0, frac));
      tail.segs_.push_back(segs_[i].sub(frac, 1));
    }
  }
  return {head, tail};
}

std::vector<PanelNodes> Path::panels(const GaussLegendre& rule, int base_panels) const {
  std::vector<PanelNodes> out;
  for (const auto& s : segs_) {
    const real ratio = s.length() / std::max<real>(s.clearance(), 1e-12L);
    const int P = base_panels * std::clamp(static_cast<int>(std::ceil(0.5L * ratio)), 1, 8);
    const real span = s.t1() - s.t0();
    for (int p = 0; p < P; ++p) {
      PanelNodes panel;
      panel.weights = rule.weights;
      for (int i = 0; i < rule.n; ++i) {
        const real t = s.t0() + span * (p + rule.nodes[i]) / P;
        panel.x.push_back(s.x(t));
        panel.dxy.push_back(s.dx_over_y(t) * (span / P));
      }
      out.push_back(std::move(panel));
    }
  }
  return out;
}

PathBuilder::PathBuilder(CurvePtr curve, const SheetPoint& start)
    : curve_(curve), path_(curve), x_(start.x), y_(start.y), branch_(start.branch) {}

PathBuilder& PathBuilder::line_to(cplx x) {
  if (branch_ >= 0) throw InvalidArgument("line from a branch point; use out_to");
  if (x == x_) return *this;
  Segment s(curve_, SegmentKind::line, x_, x, -1, y_);
  path_.append(s);
  x_ = x;
  y_ = s.end_y();
  return *this;
}

PathBuilder& PathBuilder::route_to(cplx x) {
  for (const auto& w : plan_route(*curve_, x_, x)) line_to(w);
  return *this;
}

PathBuilder& PathBuilder::lasso(int k) {
  if (branch_ >= 0) throw InvalidArgument("lasso from a branch point");
  const cplx start = x_;
  into(k);
  Segment out(curve_, SegmentKind::out_of_branch, curve_->branch_points()[k], start, k, -last_r_);
  path_.append(out);
  x_ = start;
  y_ = out.end_y();
  branch_ = -1;
  return *this;
}

PathBuilder& PathBuilder::into(int k) {
  if (branch_ >= 0) throw InvalidArgument("into from a branch point");
  Segment s(curve_, SegmentKind::into_branch, x_, curve_->branch_points().at(k), k, y_);
  path_.append(s);
  last_r_ = s.end_r();
  x_ = curve_->branch_points()[k];
  y_ = 0;
  branch_ = k;
  return *this;
}

PathBuilder& PathBuilder::out_to(cplx x, cplx y_target) {
  if (branch_ < 0) throw InvalidArgument("out_to needs a branch point");
  const cplx e = curve_->branch_points()[branch_];
  const cplx r0 = std::sqrt((x - e) * curve_->f_except(branch_, e));
  Segment s(curve_, SegmentKind::out_of_branch, e, x, branch_, r0);
  if (std::abs(s.end_y() - y_target) > std::abs(s.end_y() + y_target))
    s = Segment(curve_, SegmentKind::out_of_branch, e, x, branch_, -r0);
  path_.append(s);
  x_ = x;
  y_ = s.end_y();
  branch_ = -1;
  return *this;
}

PathBuilder& PathBuilder::append(const Path& p) {
  path_.append(p);
  if (!p.empty()) {
    x_ = p.end_x();
    y_ = p.end_y();
    const auto& last = p.segments().back();
    branch_ = last.kind() == SegmentKind::into_branch && last.t1() == 1 ? last.branch() : -1;
  }
  return *this;
}

namespace {

void plan(const Curve& c, cplx a, cplx b, int depth, std::vector<cplx>& out) {
  const real clear = c.clearance();
  const auto& e = c.branch_points();
  int worst = -1;
  real worst_t = 2;
  const cplx d = b - a;
  for (int m = 0; m < static_cast<int>(e.size()); ++m) {
    if (segment_point_distance(a, b, e[m]) >= clear) continue;
    const real t = std::norm(d) > 0 ? ((e[m] - a) * std::conj(d)).real() / std::norm(d) : 0;
    if (t < worst_t) {
      worst_t = t;
      worst = m;
    }
  }
  if (worst < 0) {
    out.push_back(b);
    return;
  }
  if (depth > 8) throw NumericalError("path construction failure: cannot keep clear of branch points");
  const cplx dir = d / std::abs(d);
  const cplx proj = a + worst_t * d;
  cplx side = proj - e[worst];
  side = std::abs(side) > 1e-9L * clear ? side / std::abs(side) : dir * cplx(0, 1);
  const cplx w1 = e[worst] + 2 * clear * (side - dir);
  const cplx w2 = e[worst] + 2 * clear * (side + dir);
  plan(c, a, w1, depth + 1, out);
  plan(c, w1, w2, depth + 1, out);
  plan(c, w2, b, depth + 1, out);
}

}  // namespace

std::vector<cplx> plan_route(const Curve& c, cplx a, cplx b) {
  std::vector<cplx> out;
  if (a == b) return out;
  plan(c, a, b, 0, out);
  return out;
}

Path lasso_word_path(const CurvePtr& c, const std::vector<int>& word) {
  PathBuilder b(c, SheetPoint{c->hub(), c->hub_y(), -1});
  for (int k : word) b.lasso(k);
  return b.build();
}

namespace {

bool same_sheet(cplx y, cplx target) { return std::abs(y - target) <= std::abs(y + target); }

}  // namespace

Path path_to_hub(const CurvePtr& c, const SheetPoint& p, int fix_branch) {
  PathBuilder b(c, p);
  if (p.is_branch())
    b.out_to(c->hub(), c->hub_y());
  else
    b.route_to(c->hub());
  if (!same_sheet(b.y(), c->hub_y())) b.lasso(fix_branch);
  return b.build();
}

Path route(const CurvePtr& c, const SheetPoint& from, const SheetPoint& to, int fix_branch) {
  Path first = path_to_hub(c, from, fix_branch);
  auto leg = [&](bool fix) {
    PathBuilder b(c, SheetPoint{c->hub(), c->hub_y(), -1});
    if (fix) b.lasso(fix_branch);
    if (to.is_branch())
      b.into(to.branch);
    else
      b.route_to(to.x);
    return b;
  };
  PathBuilder b = leg(false);
  if (!to.is_branch() && !same_sheet(b.y(), to.y)) b = leg(true);
  Path out = first;
  out.append(b.build());
  return out;
}

}  // namespace cwb::curve
