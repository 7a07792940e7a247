#pragma once

#include <functional>

namespace primemodes {

struct QuadratureValue {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int panels = 0;
};

/// Integral of f over [0, t_max] on composite 20-point Gauss-Legendre panels
/// whose width divides `period` (typically an oscillation half-period) and does
/// not exceed max_width.
///
/// The estimate compares widths w and w/2 and returns the finer value; the
/// error adds a rounding floor proportional to the integral of |f|. Panels
/// are halved until the error is below tol, up to max_refinements times,
/// after which QuadratureError is thrown.
QuadratureValue integrate_panels(const std::function<double(double)>& f, double t_max,
                                 double period, double max_width, double tol,
                                 int max_refinements = 6);

}  // namespace primemodes
