#include "pairion/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "pairion/errors.hpp"

namespace pairion {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("QuadratureConfig: tolerances must be positive");
  if (max_subdivisions < 10)
    throw DomainError("QuadratureConfig: max_subdivisions must be >= 10");
}

namespace {

// Kronrod 21-point nodes on [0, 1]; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// A panel lives in the integration variable u; for semi-infinite panels u is
// the mapped variable t in [0, 1) and anchor is the finite lower limit.
struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool mapped = false;
  double anchor = 0.0;
  std::uint64_t order = 0;  // tie-breaker for a deterministic heap

  bool operator<(const Panel& other) const {
    if (error != other.error) return error < other.error;
    return order > other.order;
  }
};

class Evaluator {
 public:
  Evaluator(const Integrand& f, SemiInfiniteMap map) : f_(f), map_(map) {}

  double operator()(const Panel& p, double u) {
    ++evaluations;
    if (!p.mapped) return f_(u);
    const double one_minus = 1.0 - u;
    if (one_minus <= 0.0) return 0.0;
    if (map_ == SemiInfiniteMap::rational) {
      const double x = p.anchor + u / one_minus;
      return f_(x) / (one_minus * one_minus);
    }
    const double x = p.anchor - std::log(one_minus);
    return f_(x) / one_minus;
  }

  void gauss_kronrod(Panel& p) {
    const double center = 0.5 * (p.lo + p.hi);
    const double half = 0.5 * (p.hi - p.lo);
    const double f_center = (*this)(p, center);
    double res_k = f_center * kWgk[10];
    double res_g = 0.0;
    double res_abs = std::abs(res_k);
    std::array<double, 10> f_left{};
    std::array<double, 10> f_right{};
    for (std::size_t j = 0; j < 10; ++j) {
      const double dx = half * kXgk[j];
      f_left[j] = (*this)(p, center - dx);
      f_right[j] = (*this)(p, center + dx);
      const double sum = f_left[j] + f_right[j];
      res_k += kWgk[j] * sum;
      res_abs += kWgk[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
      if (j % 2 == 1) res_g += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[10] * std::abs(f_center - mean);
    for (std::size_t j = 0; j < 10; ++j)
      res_asc += kWgk[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));

    p.value = res_k * half;
    res_abs *= std::abs(half);
    res_asc *= std::abs(half);
    double err = std::abs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > kTiny / (50.0 * kEpsilon)) err = std::max(50.0 * kEpsilon * res_abs, err);
    p.error = err;
  }

  int evaluations = 0;

 private:
  const Integrand& f_;
  SemiInfiniteMap map_;
};

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.lo + p.hi);
  const double scale = std::max({std::abs(p.lo), std::abs(p.hi), 1e-300});
  return (p.hi - p.lo) > 16.0 * kEpsilon * scale && mid > p.lo && mid < p.hi;
}

}  // namespace

IntegrationResult integrate(const Integrand& f, std::span<const double> breakpoints,
                            const QuadratureConfig& cfg) {
  cfg.validate();
  if (breakpoints.size() < 2) throw DomainError("integrate: need at least two limits");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw DomainError("integrate: limits must be strictly ascending");
    if (std::isinf(breakpoints[i])) throw DomainError("integrate: only the upper limit may be infinite");
  }
  if (std::isinf(breakpoints.back()) && breakpoints.back() < 0)
    throw DomainError("integrate: upper limit may not be -infinity");

  Evaluator eval(f, cfg.semi_infinite_map);
  std::priority_queue<Panel> heap;
  std::vector<Panel> frozen;
  std::uint64_t counter = 0;

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Panel p;
    p.order = counter++;
    if (std::isinf(breakpoints[i + 1])) {
      p.mapped = true;
      p.anchor = breakpoints[i];
      p.lo = 0.0;
      p.hi = 1.0;
    } else {
      p.lo = breakpoints[i];
      p.hi = breakpoints[i + 1];
    }
    eval.gauss_kronrod(p);
    heap.push(p);
  }

  auto totals = [&]() {
    // Sum in a fixed order so identical inputs give identical bits.
    std::vector<Panel> all = frozen;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.order < b.order; });
    double v = 0.0;
    double e = 0.0;
    for (const auto& p : all) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  double value = 0.0;
  double error = 0.0;
  {
    auto [v, e] = totals();
    value = v;
    error = e;
  }

  int subdivisions = 0;
  double frozen_error = 0.0;
  while (true) {
    if (!std::isfinite(value) || !std::isfinite(error))
      throw QuadratureError("integrate: non-finite integrand values", value, error);
    const double tolerance = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    if (error <= tolerance) break;
    if (heap.empty() || subdivisions >= cfg.max_subdivisions || frozen_error > tolerance) {
      throw QuadratureError("integrate: tolerance not reached after " +
                                std::to_string(subdivisions) + " subdivisions (estimate " +
                                std::to_string(value) + ", error " + std::to_string(error) + ")",
                            value, error);
    }
    Panel worst = heap.top();
    heap.pop();
    if (!splittable(worst)) {
      frozen_error += worst.error;
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = worst;
    Panel right = worst;
    left.hi = mid;
    right.lo = mid;
    left.order = counter++;
    right.order = counter++;
    eval.gauss_kronrod(left);
    eval.gauss_kronrod(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    if (subdivisions % 64 == 0) {
      auto [v, e] = totals();
      value = v;
      error = e;
    }
  }
  auto [v, e] = totals();
  return {v, e, eval.evaluations};
}

IntegrationResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  const std::array<double, 2> limits{a, b};
  return integrate(f, std::span<const double>(limits), cfg);
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("find_root: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("find_root: tol must be positive");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!(f_lo * f_hi < 0.0))
    throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] (f = " + std::to_string(f_lo) + ", " +
                       std::to_string(f_hi) + ")");
  std::uintmax_t max_iter = 500;
  auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
  const auto bracket = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, done, max_iter);
  // The bracket midpoint can be worse than an endpoint when f is steep.
  const double mid = 0.5 * (bracket.first + bracket.second);
  double best = mid;
  double best_abs = std::abs(f(mid));
  for (double x : {bracket.first, bracket.second}) {
    const double v = std::abs(f(x));
    if (v < best_abs) {
      best = x;
      best_abs = v;
    }
  }
  return best;
}

}  // namespace pairion
