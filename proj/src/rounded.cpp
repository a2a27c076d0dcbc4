#include "cyltrans/rounded.hpp"

#include <cmath>
#include <string>

#include "cyltrans/error.hpp"

namespace cylt {

double phi_angle(double D) {
  if (!(D >= 1.0) || !std::isfinite(D)) {
    throw Error(ErrorCode::InvalidArgument, "phi_angle: D must be >= 1");
  }
  return std::asin(1.0 / (2.0 * D));
}

LineCover cover_lines(const std::vector<RoundedBody>& bodies, double D, bool lenient, double eps) {
  if (bodies.empty()) throw Error(ErrorCode::EmptyInput, "cover_lines: no bodies");
  const double phi = phi_angle(D);

  for (size_t i = 0; i < bodies.size(); ++i) {
    const RoundedBody& b = bodies[i];
    if (!(b.r > 0.0) || !(b.R >= b.r) || !is_finite(b.center) || !std::isfinite(b.R)) {
      throw Error(ErrorCode::NotWellRounded,
                  "body " + std::to_string(i) + ": requires 0 < r <= R", static_cast<int>(i));
    }
    if (b.R > D * b.r * (1.0 + 1e-9)) {
      throw Error(ErrorCode::NotWellRounded,
                  "body " + std::to_string(i) + ": R exceeds D*r", static_cast<int>(i));
    }
  }

  size_t origin_idx = 0;
  for (size_t i = 1; i < bodies.size(); ++i) {
    if (bodies[i].r < bodies[origin_idx].r) origin_idx = i;
  }
  const Vec3 origin = bodies[origin_idx].center;
  const double rmin = bodies[origin_idx].r;

  // Normalize the minimal inner radius to 1 and check every body is close
  // enough to the origin body for a through-origin line to help at all.
  for (size_t i = 0; i < bodies.size(); ++i) {
    const double dist = norm(bodies[i].center - origin) / rmin;
    const double rb = bodies[i].r / rmin;
    const double Rb = bodies[i].R / rmin;
    const double limit = lenient ? 2.0 * D * rb : D + Rb;
    if (dist > limit + eps) {
      throw Error(ErrorCode::NotPairwiseIntersectable,
                  "body " + std::to_string(i) + ": center too far from the origin body",
                  static_cast<int>(i));
    }
  }

  LineCover cover;
  cover.origin = origin;
  cover.phi = phi;
  cover.D = D;
  cover.assignment.assign(bodies.size(), -1);

  for (size_t i = 0; i < bodies.size(); ++i) {
    const Vec3 a = bodies[i].center - origin;
    if (norm(a) <= eps * rmin) continue;  // concentric: any line works; fixed up below
    const Vec3 da = normalized(a);
    int found = -1;
    for (size_t k = 0; k < cover.directions.size(); ++k) {
      if (line_angle(da, cover.directions[k]) <= phi) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      cover.directions.push_back(da);
      found = static_cast<int>(cover.directions.size()) - 1;
    }
    cover.assignment[i] = found;
  }
  if (cover.directions.empty()) cover.directions.push_back(Vec3{0.0, 0.0, 1.0});
  for (int& a : cover.assignment) {
    if (a < 0) a = 0;
  }

  if (static_cast<double>(cover.directions.size()) > 32.0 * D * D + 1e-9) {
    throw Error(ErrorCode::Internal, "cover_lines: direction count exceeded 32*D^2");
  }
  return cover;
}

bool verify_cover(const std::vector<RoundedBody>& bodies, const LineCover& cover, double eps) {
  if (cover.directions.empty() || cover.assignment.size() != bodies.size()) return false;
  if (static_cast<double>(cover.directions.size()) > 32.0 * cover.D * cover.D + 1e-9) return false;
  for (size_t i = 0; i < cover.directions.size(); ++i) {
    if (std::abs(norm(cover.directions[i]) - 1.0) > 1e-6) return false;
    for (size_t k = i + 1; k < cover.directions.size(); ++k) {
      if (line_angle(cover.directions[i], cover.directions[k]) <= cover.phi - eps) return false;
    }
  }
  for (size_t i = 0; i < bodies.size(); ++i) {
    const int a = cover.assignment[i];
    if (a < 0 || a >= static_cast<int>(cover.directions.size())) return false;
    const Vec3 rel = bodies[i].center - cover.origin;
    const double dist = norm(cross(rel, cover.directions[static_cast<size_t>(a)]));
    if (dist > bodies[i].r + eps) return false;
  }
  return true;
}

}  // namespace cylt
