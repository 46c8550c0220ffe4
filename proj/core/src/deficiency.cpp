#include "locfin/deficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "locfin/generators.hpp"

namespace locfin {

namespace {

__extension__ using Int = __int128;

struct Overflow {};

Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Int checkedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Int absInt(Int a) { return a < 0 ? -a : a; }

Int gcdInt(Int a, Int b) {
  a = absInt(a);
  b = absInt(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// (re + i im) / den, den > 0, kept reduced.
struct GaussRational {
  Int re = 0;
  Int im = 0;
  Int den = 1;

  void reduce() {
    Int g = gcdInt(gcdInt(re, im), den);
    if (g > 1) {
      re /= g;
      im /= g;
      den /= g;
    }
  }

  GaussRational timesI() const { return {-im, re, den}; }

  GaussRational minus(const GaussRational& o) const {
    GaussRational r;
    const Int g = gcdInt(den, o.den);
    const Int left = o.den / g;
    const Int right = den / g;
    r.re = checkedSub(checkedMul(re, left), checkedMul(o.re, right));
    r.im = checkedSub(checkedMul(im, left), checkedMul(o.im, right));
    r.den = checkedMul(den, left);
    r.reduce();
    return r;
  }

  GaussRational plus(const GaussRational& o) const { return minus({-o.re, -o.im, o.den}); }

  GaussRational times(Int k) const {
    GaussRational r{checkedMul(re, k), checkedMul(im, k), den};
    r.reduce();
    return r;
  }

  GaussRational dividedBy(Int k) const {
    GaussRational r{re, im, checkedMul(den, k)};
    r.reduce();
    return r;
  }

  bool isZero() const { return re == 0 && im == 0; }

  Complex toComplex() const {
    const auto d = static_cast<long double>(den);
    return {static_cast<double>(static_cast<long double>(re) / d), static_cast<double>(static_cast<long double>(im) / d)};
  }
};

// Exact dyadic representation of a double, if small enough.
std::optional<std::pair<Int, Int>> dyadic(double x) {
  if (x == 0.0) return std::make_pair(Int{0}, Int{1});
  if (!std::isfinite(x)) return std::nullopt;
  int e = 0;
  const double m = std::frexp(x, &e);
  auto mant = static_cast<Int>(std::ldexp(m, 53));
  int shift = 53 - e;
  Int den = 1;
  if (shift <= 0) {
    if (-shift > 60) return std::nullopt;
    return std::make_pair(mant * (Int{1} << -shift), Int{1});
  }
  if (shift > 100) return std::nullopt;
  den = Int{1} << shift;
  const Int g = gcdInt(mant, den);
  return std::make_pair(mant / g, den / g);
}

std::optional<GaussRational> exactOf(Complex z) {
  auto re = dyadic(z.real());
  auto im = dyadic(z.imag());
  if (!re || !im) return std::nullopt;
  const Int g = gcdInt(re->second, im->second);
  const Int den = re->second / g * im->second;
  GaussRational out{re->first * (den / re->second), im->first * (den / im->second), den};
  out.reduce();
  return out;
}

void finishSolution(DeficiencySolution& sol) {
  const std::size_t n = sol.values.size();
  sol.partialL2.resize(n);
  double running = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    running += std::norm(sol.values[i]);
    sol.partialL2[i] = running;
  }

  // Cauchy index: scan from the end for the last increment above threshold.
  std::optional<std::size_t> cauchy;
  for (std::size_t i = n; i-- > 0;) {
    if (std::norm(sol.values[i]) >= sol.cauchyThreshold) {
      if (i + 1 < n) cauchy = i;
      break;
    }
    if (i == 0) cauchy = 0;
  }
  sol.cauchyIndex = cauchy;

  // Decay fit over the last decade of the window.
  TailFit fit;
  fit.to = n == 0 ? 0 : n - 1;
  fit.from = std::max<std::size_t>(1, n / 10);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = fit.from; i < n; ++i) {
    const double mag = std::norm(sol.values[i]);
    if (mag <= 0.0) continue;
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(mag);
    pts.emplace_back(x, y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  fit.points = k;
  if (k >= 3) {
    const double kk = static_cast<double>(k);
    const double varX = sxx - sx * sx / kk;
    if (varX > 0) {
      const double slope = (sxy - sx * sy / kk) / varX;
      const double intercept = (sy - slope * sx) / kk;
      double ssr = 0.0;
      for (const auto& [x, y] : pts) ssr += (y - intercept - slope * x) * (y - intercept - slope * x);
      const double se = std::sqrt(ssr / (kk - 2.0) / varX);
      fit.exponent = slope;
      fit.low = slope - 1.96 * se;
      fit.high = slope + 1.96 * se;
    }
  }
  sol.tailDiagnostic = fit;
}

DeficiencySolution fTreeExact(const FTreeShape& shape, std::size_t window, const GaussRational& f0) {
  const std::size_t n = window + 1;
  std::vector<GaussRational> f(n);
  f[0] = f0;
  DeficiencySolution sol;
  sol.exact = true;
  sol.residuals.assign(n, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t begin = shape.childrenBegin(v);
    if (begin >= n) break;
    const std::uint64_t end = shape.childrenEnd(v);
    const auto count = static_cast<Int>(end - begin);
    const GaussRational parent = v == 0 ? GaussRational{} : f[shape.parentOf(v)];
    const GaussRational c = f[v].timesI().minus(parent).dividedBy(count);
    for (std::uint64_t m = begin; m < std::min<std::uint64_t>(end, n); ++m) f[m] = c;
    if (end <= n) {
      // Equation at v with every neighbor inside the window.
      const GaussRational lhs = parent.plus(c.times(count));
      const GaussRational res = lhs.minus(f[v].timesI());
      sol.residuals[v] = res.isZero() ? 0.0 : std::abs(res.toComplex());
    }
  }
  sol.values.resize(n);
  for (std::size_t v = 0; v < n; ++v) sol.values[v] = f[v].toComplex();
  return sol;
}

DeficiencySolution fTreeFloating(const FTreeShape& shape, std::size_t window, Complex f0) {
  const std::size_t n = window + 1;
  DeficiencySolution sol;
  sol.exact = false;
  sol.values.assign(n, Complex{});
  sol.residuals.assign(n, std::nullopt);
  sol.values[0] = f0;
  const Complex i(0.0, 1.0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t begin = shape.childrenBegin(v);
    if (begin >= n) break;
    const std::uint64_t end = shape.childrenEnd(v);
    const auto count = static_cast<double>(end - begin);
    const Complex parent = v == 0 ? Complex{} : sol.values[shape.parentOf(v)];
    const Complex c = (i * sol.values[v] - parent) / count;
    for (std::uint64_t m = begin; m < std::min<std::uint64_t>(end, n); ++m) sol.values[m] = c;
    if (end <= n) {
      std::complex<long double> lhs(parent);
      for (std::uint64_t m = begin; m < end; ++m) lhs += std::complex<long double>(sol.values[m]);
      lhs -= std::complex<long double>(i * sol.values[v]);
      sol.residuals[v] = static_cast<double>(std::abs(lhs));
    }
  }
  return sol;
}

}  // namespace

double DeficiencySolution::maxResidual() const {
  double best = 0.0;
  for (const auto& r : residuals) {
    if (r) best = std::max(best, *r);
  }
  return best;
}

double DeficiencySolution::maxAbs() const {
  double best = 0.0;
  for (const auto& v : values) best = std::max(best, std::abs(v));
  return best;
}

DeficiencySolution fTreeDeficiencyVector(double alpha, std::size_t window, Complex f0, std::size_t exactLimit) {
  const FTreeShape shape(alpha);
  if (f0 == Complex{}) throw std::invalid_argument("f(0) must be nonzero");
  if (window < shape.childrenEnd(0) - 1) {
    throw std::invalid_argument("F-tree window " + std::to_string(window) + " does not contain the children of 0 (up to " +
                                std::to_string(shape.childrenEnd(0) - 1) + ")");
  }
  DeficiencySolution sol;
  bool done = false;
  if (window <= exactLimit) {
    if (auto start = exactOf(f0)) {
      try {
        sol = fTreeExact(shape, window, *start);
        done = true;
      } catch (const Overflow&) {
      }
    }
  }
  if (!done) sol = fTreeFloating(shape, window, f0);
  finishSolution(sol);
  return sol;
}

DeficiencySolution jacobiDeficiencyVector(double alpha, std::size_t length, Complex f1) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("Jacobi chain needs alpha > 0");
  if (length < 3) throw std::invalid_argument("Jacobi recursion needs length >= 3");
  if (f1 == Complex{}) throw std::invalid_argument("f(1) must be nonzero");
  const Complex i(0.0, 1.0);
  const double power = 1.0 + alpha;
  auto weight = [power](double n) { return std::pow(n, power); };

  DeficiencySolution sol;
  sol.values.assign(length, Complex{});
  sol.residuals.assign(length, std::nullopt);
  sol.values[0] = f1;
  sol.values[1] = i * f1 / weight(1.0);
  for (std::size_t idx = 1; idx + 1 < length; ++idx) {
    const double n = static_cast<double>(idx + 1);
    const double shrink = std::pow((n - 1.0) / n, power);
    sol.values[idx + 1] = i * sol.values[idx] / weight(n) - shrink * sol.values[idx - 1];
  }
  for (std::size_t idx = 0; idx + 1 < length; ++idx) {
    const double n = static_cast<double>(idx + 1);
    Complex lhs = weight(n) * sol.values[idx + 1];
    if (idx >= 1) lhs += weight(n - 1.0) * sol.values[idx - 1];
    sol.residuals[idx] = std::abs(lhs - i * sol.values[idx]);
  }
  finishSolution(sol);
  return sol;
}

double deficiencyResidualCheck(const DeficiencySolution& sol, const Truncation& t) {
  if (sol.values.size() != t.graph.vertexCount()) {
    throw std::invalid_argument("solution has " + std::to_string(sol.values.size()) + " values for a window of " +
                                std::to_string(t.graph.vertexCount()) + " vertices");
  }
  const Complex i(0.0, 1.0);
  double best = 0.0;
  for (VertexId x = 0; x < t.graph.vertexCount(); ++x) {
    if (!t.interior[x]) continue;
    std::complex<long double> acc = 0.0L;
    for (const auto& y : t.graph.neighbors(x)) {
      acc += static_cast<long double>(y.weight) * std::complex<long double>(sol.values[y.id]);
    }
    acc -= std::complex<long double>(i * sol.values[x]);
    best = std::max(best, static_cast<double>(std::abs(acc)));
  }
  return best;
}

NelsonHypothesisReport nelsonHypothesisCheck(const GraphFamily& family, std::span<const std::size_t> windows) {
  NelsonHypothesisReport report;
  for (auto w : windows) {
    const auto t = truncate(family, w);
    NelsonWindow row;
    row.window = w;
    for (VertexId x = 0; x < t.graph.vertexCount(); ++x) {
      if (!t.interior[x]) continue;
      ++row.interiorCount;
      const auto dx = static_cast<double>(family.degree(x));
      const double ex = family.maxIncidentWeight(x);
      for (const auto& y : t.graph.neighbors(x)) {
        const double dg = std::abs(dx - static_cast<double>(family.degree(y.id)));
        const double wg = std::abs(ex - family.maxIncidentWeight(y.id));
        if (dg > row.supDegreeGap) {
          row.supDegreeGap = dg;
          row.degreeArgmax = x;
        }
        if (wg > row.supWeightGap) {
          row.supWeightGap = wg;
          row.weightArgmax = x;
        }
      }
    }
    report.windows.push_back(row);
  }

  if (report.windows.size() >= 2) {
    const auto& last = report.windows.back();
    const auto& prev = report.windows[report.windows.size() - 2];
    report.degreeBounded = last.supDegreeGap == prev.supDegreeGap;
    report.weightBounded = std::abs(last.supWeightGap - prev.supWeightGap) <= 1e-12 * std::max(1.0, last.supWeightGap);
    const auto& first = report.windows.front();
    const double span = std::log(static_cast<double>(last.window) / static_cast<double>(first.window));
    auto rate = [span](double a, double b) { return (a > 0 && b > 0 && span > 0) ? std::log(b / a) / span : 0.0; };
    report.degreeGrowthRate = rate(first.supDegreeGap, last.supDegreeGap);
    report.weightGrowthRate = rate(first.supWeightGap, last.supWeightGap);
  }
  return report;
}

std::vector<double> scaledDegreeGaps(const GraphFamily& family, std::span<const VertexId> ns, double exponent) {
  std::vector<double> out;
  for (auto n : ns) {
    if (n == 0) throw std::domain_error("scaled gaps start at n = 1");
    const double gap = std::abs(static_cast<double>(family.degree(n)) - static_cast<double>(family.degree(n + 1)));
    out.push_back(gap / std::pow(static_cast<double>(n), exponent));
  }
  return out;
}

std::vector<double> scaledWeightGaps(const GraphFamily& family, std::span<const VertexId> ns, double exponent,
                                     std::size_t labelOffset) {
  std::vector<double> out;
  for (auto n : ns) {
    const double label = static_cast<double>(n + labelOffset);
    if (label <= 0.0) throw std::domain_error("scaled gaps start at n = 1");
    const double gap = std::abs(family.maxIncidentWeight(n) - family.maxIncidentWeight(n + 1));
    out.push_back(gap / std::pow(label, exponent));
  }
  return out;
}

}  // namespace locfin
