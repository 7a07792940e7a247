#include "primemodes/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "primemodes/errors.hpp"
#include "primemodes/summation.hpp"

namespace primemodes {

namespace {

struct Rule {
  std::array<double, 20> x{};
  std::array<double, 20> w{};
};

// Boost stores the ten non-negative abscissas; mirror them onto [-1, 1].
const Rule& gauss20() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, 20>;
    Rule r;
    const auto& xs = G::abscissa();
    const auto& ws = G::weights();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      r.x[i] = -xs[i];
      r.w[i] = ws[i];
      r.x[19 - i] = xs[i];
      r.w[19 - i] = ws[i];
    }
    return r;
  }();
  return rule;
}

struct PanelSum {
  double value = 0.0;
  double abs_value = 0.0;
  int panels = 0;
};

PanelSum composite(const std::function<double(double)>& f, double t_max, double width) {
  const auto& rule = gauss20();
  const int panels = static_cast<int>(std::ceil(t_max / width - 1e-9));
  CompensatedSum sum;
  CompensatedSum abs_sum;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double v = rule.w[i] * half * f(mid + half * rule.x[i]);
      sum.add(v);
      abs_sum.add(std::abs(v));
    }
  }
  return {sum.value(), abs_sum.value(), panels};
}

}  // namespace

QuadratureValue integrate_panels(const std::function<double(double)>& f, double t_max,
                                 double period, double max_width, double tol,
                                 int max_refinements) {
  if (!(t_max > 0.0) || !(period > 0.0) || !(max_width > 0.0) || !(tol > 0.0)) {
    throw DomainError("integrate_panels: t_max, period, max_width and tol must be positive");
  }
  double width = period / std::ceil(period / max_width);
  PanelSum coarse = composite(f, t_max, width);
  double err = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= max_refinements; ++r) {
    width *= 0.5;
    const PanelSum fine = composite(f, t_max, width);
    err = std::abs(fine.value - coarse.value) +
          16.0 * std::numeric_limits<double>::epsilon() * fine.abs_value;
    if (err <= tol) return {fine.value, err, fine.panels};
    coarse = fine;
  }
  throw QuadratureError("panel quadrature did not reach tolerance", err);
}

}  // namespace primemodes
