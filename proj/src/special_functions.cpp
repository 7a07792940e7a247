#include "primemodes/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "primemodes/errors.hpp"

namespace primemodes {

namespace {

using std::numbers::pi;

// B_2 .. B_26
constexpr std::array<std::array<double, 2>, 13> kBernoulli{{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
}};

// B_{2j} / (2j)!
const std::array<double, 13>& bernoulli_over_factorial() {
  static const std::array<double, 13> table = [] {
    std::array<double, 13> t{};
    double fact = 1.0;
    int n = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      while (n < 2 * static_cast<int>(j + 1)) fact *= ++n;
      t[j] = kBernoulli[j][0] / kBernoulli[j][1] / fact;
    }
    return t;
  }();
  return table;
}

constexpr int kEulerMaclaurinN = 16;

// zeta(j) for j = 2..32, computed once.
double zeta_int(int j) {
  static const std::array<double, 33> table = [] {
    std::array<double, 33> t{};
    for (int k = 2; k <= 32; ++k) t[k] = 1.0 + zeta_minus_one(k);
    return t;
  }();
  return table[static_cast<std::size_t>(j)];
}

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos{
    0.99999999999999709182,      57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,       -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,    -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,   .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,    -.26190838401581408670e-4,  .36899182659531622704e-5,
};

// log Gamma(z) for Re z >= 1/2 (branch of the imaginary part irrelevant).
Complex log_gamma_lanczos(Complex z) {
  const Complex w = z - 1.0;
  Complex a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (w + static_cast<double>(k));
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (w + 0.5) * std::log(t) - t + std::log(a);
}

// log sin(pi z) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex I{0.0, 1.0};
  if (std::abs(z.imag()) < 1.0) return std::log(std::sin(pi * z));
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; factor out the dominant exponential.
  if (z.imag() > 0) {
    return -I * pi * z + std::log(1.0 - std::exp(2.0 * I * pi * z)) - std::log(-2.0 * I);
  }
  return I * pi * z + std::log(1.0 - std::exp(-2.0 * I * pi * z)) - std::log(2.0 * I);
}

}  // namespace

double PowerSeries::operator()(double x) const {
  const double z = x - center;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double zeta_minus_one(double s) {
  if (!(s > 1.0)) throw DomainError("zeta_real requires s > 1, got " + std::to_string(s));
  const int N = kEulerMaclaurinN;
  const double Nd = N;
  // Euler-Maclaurin correction terms, smallest first.
  const auto& b = bernoulli_over_factorial();
  std::array<double, 13> corr{};
  double rising = s;  // s (s+1) ... (s+2j-2)
  double npow = std::pow(Nd, -s - 1.0);
  for (std::size_t j = 0; j < corr.size(); ++j) {
    corr[j] = b[j] * rising * npow;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    npow /= Nd * Nd;
  }
  double acc = 0.0;
  for (auto it = corr.rbegin(); it != corr.rend(); ++it) acc += *it;
  acc += 0.5 * std::pow(Nd, -s);
  acc += std::pow(Nd, 1.0 - s) / (s - 1.0);
  for (int n = N - 1; n >= 2; --n) acc += std::pow(static_cast<double>(n), -s);
  return acc;
}

double zeta_real(double s) { return 1.0 + zeta_minus_one(s); }

Complex gamma_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("Gamma has a pole at z = " + std::to_string(z.real()));
  }
  Complex lg;
  if (z.real() < 0.5) {
    lg = std::log(pi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
  } else {
    lg = log_gamma_lanczos(z);
  }
  const Complex g = std::exp(lg);
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
    throw DomainError("Gamma overflows at this argument");
  }
  return g;
}

PowerSeries log_gamma_series_at_1(int k_max) {
  if (k_max < 0 || k_max > 30) throw DomainError("log_gamma_series_at_1 needs 0 <= k_max <= 30");
  PowerSeries out{1.0, std::vector<double>(static_cast<std::size_t>(k_max) + 1, 0.0)};
  if (k_max >= 1) out.coeffs[1] = -std::numbers::egamma;
  for (int j = 2; j <= k_max; ++j) {
    out.coeffs[j] = (j % 2 == 0 ? 1.0 : -1.0) * zeta_int(j) / j;
  }
  return out;
}

PowerSeries gamma_series(int center, int k_max) {
  if (center != 1 && center != 2) throw DomainError("gamma_series center must be 1 or 2");
  const auto a = log_gamma_series_at_1(k_max).coeffs;
  // exp of a power series: n b_n = sum_k k a_k b_{n-k}
  std::vector<double> b(a.size(), 0.0);
  b[0] = 1.0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * b[n - k];
    b[n] = acc / static_cast<double>(n);
  }
  if (center == 2) {
    // Gamma(2 + z) = (1 + z) Gamma(1 + z)
    for (std::size_t n = b.size() - 1; n >= 1; --n) b[n] += b[n - 1];
  }
  return {static_cast<double>(center), b};
}

std::vector<double> gamma_derivatives(int center, int k_max) {
  if (k_max < 0 || k_max > 20) throw DomainError("gamma_derivatives needs 0 <= k_max <= 20");
  auto c = gamma_series(center, k_max).coeffs;
  double fact = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    fact *= static_cast<double>(k);
    c[k] *= fact;
  }
  return c;
}

}  // namespace primemodes
