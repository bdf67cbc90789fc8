#include "dfs/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dfs {

namespace {

constexpr int kTermCap = 100000;

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr int kGlHalf = 8;
constexpr double kGlNode[kGlHalf] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[kGlHalf] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

double falling_factorial(double x, int j) {
  double p = 1.0;
  for (int t = 0; t < j; ++t) p *= (x - t);
  return p;
}

double binomial(int n, int k) {
  double p = 1.0;
  for (int t = 1; t <= k; ++t) p = p * (n - k + t) / t;
  return p;
}

struct LogValue {
  double log_abs;  // -inf for zero
  double sign;     // -1, 0, +1
};

// log of |F(rho(r))| plus the sign, with g_n excluded.
LogValue log_f(const RadialWavefunction& wf, double r) {
  const double rho = std::exp(-wf.spec.molecule.alpha * r);
  const double rho_d = std::pow(rho, wf.cfg.delta);
  double p = 0.0;
  for (const auto& t : wf.series) p += t.coeff * std::pow(rho, t.power);
  const double lp = wf.exp_rho * std::log(rho) +
                    wf.exp_one_minus * std::log1p(-rho_d);
  if (p == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {lp + std::log(std::fabs(p)), p > 0.0 ? 1.0 : -1.0};
}

}  // namespace

double RadialWavefunction::g_n() const { return std::exp(log_g_n); }

std::pair<double, double> chi_exponents(const PotentialSpec& spec,
                                        const QuantumState& state,
                                        const FractionalConfig& cfg,
                                        double e_ev) {
  const auto xi = xi_coefficients(spec, state, cfg);
  const double t3 = xi.xi3 - epsilon_of_energy(e_ev, spec);
  if (xi.s < 0.0 || t3 < 0.0)
    throw NoBoundState(NoBoundState::Reason::Discriminant,
                       "negative radicand in chi exponents");
  return {(cfg.q * cfg.delta - 1.0) / 2.0 + std::sqrt(t3),
          0.5 + (cfg.lambda / cfg.delta) * std::sqrt(xi.s)};
}

WeightFunction weight(const PotentialSpec& spec, const QuantumState& state,
                      const FractionalConfig& cfg, double e_ev) {
  const auto xi = xi_coefficients(spec, state, cfg);
  const double t3 = xi.xi3 - epsilon_of_energy(e_ev, spec);
  if (xi.s < 0.0 || t3 < 0.0)
    throw NoBoundState(NoBoundState::Reason::Discriminant,
                       "negative radicand in weight exponents");
  return {cfg.lambda, 2.0 * cfg.lambda * std::sqrt(t3),
          (2.0 * cfg.lambda / cfg.delta) * std::sqrt(xi.s)};
}

std::vector<Monomial> rodrigues_series(const PotentialSpec& spec,
                                       const QuantumState& state,
                                       const FractionalConfig& cfg,
                                       double e_ev, double truncation_tol) {
  const int n = state.n;
  const auto xi = xi_coefficients(spec, state, cfg);
  const double t3 = xi.xi3 - epsilon_of_energy(e_ev, spec);
  if (xi.s < 0.0 || t3 < 0.0)
    throw NoBoundState(NoBoundState::Reason::Discriminant,
                       "negative radicand in Rodrigues kernel");
  const double d = cfg.delta;
  const double a_exp = 2.0 * cfg.lambda * std::sqrt(t3);          // on rho
  const double b_exp = (2.0 * cfg.lambda / d) * std::sqrt(xi.s);  // on 1-rho^d

  if (static_cast<long long>(n + 1) * (n + 1) * (n + 1) > kTermCap)
    throw ConvergenceError("rodrigues_series: term cap exceeded");

  // g[m][i]: d^m/drho^m (1-rho^d)^{n+b} = sum_i g[m][i] rho^{i d - m}
  //                                        (1-rho^d)^{n+b-i}
  std::vector<std::vector<double>> g(n + 1);
  g[0] = {1.0};
  for (int m = 0; m < n; ++m) {
    g[m + 1].assign(m + 2, 0.0);
    for (int i = 0; i <= m; ++i) {
      const double gi = g[m][i];
      if (gi == 0.0) continue;
      g[m + 1][i] += gi * (i * d - m);
      g[m + 1][i + 1] += gi * (-d) * (n + b_exp - i);
    }
  }

  // Leibniz over d^n [rho^{n+a} (1-rho^d)^{n+b}], then strip the weight
  // rho^a (1-rho^d)^b and expand the remaining integer powers of (1-rho^d).
  std::vector<double> p(n + 1, 0.0);
  const double qn = std::pow(cfg.q, n);
  for (int j = 0; j <= n; ++j) {
    const double cj = binomial(n, j) * falling_factorial(n + a_exp, j);
    const auto& gm = g[n - j];
    for (int i = 0; i < static_cast<int>(gm.size()); ++i) {
      const double c = cj * gm[i];
      if (c == 0.0) continue;
      for (int s = 0; s <= n - i; ++s)
        p[i + s] += c * binomial(n - i, s) * ((s % 2) ? -1.0 : 1.0);
    }
  }

  const double rho_e = std::exp(-spec.molecule.alpha * spec.molecule.r_e);
  double peak = 0.0;
  for (int k = 0; k <= n; ++k)
    peak = std::max(peak, std::fabs(p[k] * qn) * std::pow(rho_e, k * d));
  if (!std::isfinite(peak))
    throw ConvergenceError("rodrigues_series: non-finite coefficients");

  std::vector<Monomial> series;
  for (int k = 0; k <= n; ++k) {
    const double coeff = p[k] * qn;
    if (std::fabs(coeff) * std::pow(rho_e, k * d) >= truncation_tol * peak)
      series.push_back({coeff, k * d});
  }
  return series;
}

RadialWavefunction make_wavefunction(const PotentialSpec& spec,
                                     const QuantumState& state,
                                     const FractionalConfig& cfg,
                                     double truncation_tol) {
  RadialWavefunction wf;
  wf.spec = spec;
  wf.state = state;
  wf.cfg = cfg;
  wf.level = energy(spec, state, cfg);
  const auto chi = chi_exponents(spec, state, cfg, wf.level.e_ev);
  // the weight divides out of the differentiated kernel, so F keeps chi's
  // exponents and the series is the bare polynomial
  wf.exp_rho = chi.first;
  wf.exp_one_minus = chi.second;
  wf.series = rodrigues_series(spec, state, cfg, wf.level.e_ev, truncation_tol);
  wf.log_g_n = 0.0;
  wf.experimental = cfg.delta < 1.0;
  return wf;
}

double evaluate(const RadialWavefunction& wf, double r) {
  if (!(r > 0.0)) throw InvalidInput("evaluate: r must be positive");
  const auto f = log_f(wf, r);
  if (f.sign == 0.0) return 0.0;
  const double lg = f.log_abs + wf.log_g_n -
                    0.5 * (wf.state.dim - 1) * std::log(r);
  return f.sign * std::exp(lg);
}

RadialWavefunction normalize(const RadialWavefunction& wf,
                             int quadrature_points) {
  if (quadrature_points < 16)
    throw InvalidInput("normalize: need at least 16 quadrature points");
  const double alpha = wf.spec.molecule.alpha;
  const double r_cut = wf.spec.molecule.r_e + 40.0 / alpha;
  const int panels = std::max(1, quadrature_points / 16);
  const double h = r_cut / panels;

  // integrand |phi|^2 r^{N-1} = F(r)^2; accumulate with a running log offset
  std::vector<double> logs;
  std::vector<double> wts;
  logs.reserve(panels * 16);
  wts.reserve(panels * 16);
  double log_max = -std::numeric_limits<double>::infinity();
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    const double half = 0.5 * h;
    for (int i = 0; i < kGlHalf; ++i) {
      for (double s : {-1.0, 1.0}) {
        const double r = mid + s * half * kGlNode[i];
        const auto f = log_f(wf, r);
        if (f.sign == 0.0) continue;
        logs.push_back(2.0 * f.log_abs);
        wts.push_back(kGlWeight[i] * half);
        log_max = std::max(log_max, logs.back());
      }
    }
  }
  if (!std::isfinite(log_max))
    throw NumericalError("normalize: wavefunction vanished on the whole grid");
  double acc = 0.0;
  for (size_t i = 0; i < logs.size(); ++i)
    acc += wts[i] * std::exp(logs[i] - log_max);
  if (!(acc > 0.0) || !std::isfinite(acc))
    throw NumericalError("normalize: integral not finite");
  const double log_integral = log_max + std::log(acc);

  RadialWavefunction out = wf;
  out.log_g_n = -0.5 * log_integral;
  return out;
}

int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples) {
  if (!(r_lo > 0.0) || !(r_lo < r_hi))
    throw InvalidInput("count_nodes: need 0 < r_lo < r_hi");
  if (samples < 2) throw InvalidInput("count_nodes: need >= 2 samples");
  const double h = (r_hi - r_lo) / (samples - 1);
  int nodes = 0;
  double prev_r = r_lo;
  double prev_sign = log_f(wf, r_lo).sign;
  for (int i = 1; i < samples; ++i) {
    const double r = r_lo + i * h;
    const double sign = log_f(wf, r).sign;
    if (sign != 0.0 && prev_sign != 0.0 && sign != prev_sign) {
      // bisection refinement confirms an actual crossing in the bracket
      double a = prev_r, b = r, sa = prev_sign;
      for (int it = 0; it < 60 && (b - a) > 1e-14 * (1.0 + b); ++it) {
        const double m = 0.5 * (a + b);
        const double sm = log_f(wf, m).sign;
        if (sm == 0.0) break;
        if (sm == sa)
          a = m;
        else
          b = m;
      }
      ++nodes;
    }
    if (sign != 0.0) {
      prev_sign = sign;
      prev_r = r;
    }
  }
  return nodes;
}

}  // namespace dfs
