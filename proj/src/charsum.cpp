#include "zslab/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>
#include <string>

namespace zslab {

namespace {

// Roots of unity 1 + omega^t for t in [0, p); f(chi) is a product of these.
std::vector<std::complex<double>> one_plus_roots(i64 p) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(p));
  out[0] = {2.0, 0.0};
  for (i64 t = 1; t < p; ++t) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
    out[static_cast<std::size_t>(t)] = std::complex<double>{1.0, 0.0} + std::polar(1.0, angle);
  }
  return out;
}

std::complex<double> f_value_with_roots(const Sequence& S, const Element& j,
                                        const std::vector<std::complex<double>>& roots) {
  std::complex<double> acc{1.0, 0.0};
  for (const auto& [g, m] : S.entries) {
    i64 t = dot_mod_p(S.spec, j, g);
    std::complex<double> factor = roots[static_cast<std::size_t>(t)];
    for (i64 i = 0; i < m; ++i) acc *= factor;
  }
  return acc;
}

}  // namespace

std::complex<double> f_value(const Sequence& S, const CharacterId& chi) {
  if (S.length() > 64) fail(Errc::LengthGuard, "|S| > 64");
  auto roots = one_plus_roots(S.spec.p);
  return f_value_with_roots(S, chi.j, roots);
}

CharSpectrum spectrum(const Sequence& S, int threads) {
  if (S.length() > 64) fail(Errc::LengthGuard, "|S| > 64");
  CharSpectrum out{S.spec, S.length(), {}};
  out.values.resize(static_cast<std::size_t>(S.spec.order));
  auto roots = one_plus_roots(S.spec.p);
  auto run = [&](i64 lo, i64 hi) {
    for (i64 jdx = lo; jdx < hi; ++jdx) {
      out.values[static_cast<std::size_t>(jdx)] =
          f_value_with_roots(S, elem_at(S.spec, jdx), roots);
    }
  };
  if (threads <= 1 || S.spec.order < 256) {
    run(0, S.spec.order);
    return out;
  }
  std::vector<std::future<void>> jobs;
  i64 chunk = (S.spec.order + threads - 1) / threads;
  for (i64 lo = 0; lo < S.spec.order; lo += chunk) {
    jobs.push_back(std::async(std::launch::async, run, lo,
                              std::min(lo + chunk, S.spec.order)));
  }
  for (auto& job : jobs) job.get();
  return out;
}

IdentityReport spectrum_identity_check(const Sequence& S) {
  if (S.length() > 62) fail(Errc::LengthGuard, "|S| > 62");
  CharSpectrum spec = spectrum(S);
  IdentityReport rep;
  for (const auto& v : spec.values) rep.sum_over_chi += v;
  rep.z = count_zero_sum_subsequences(S);
  rep.rhs = static_cast<double>(S.spec.order) * static_cast<double>(rep.z);
  rep.rel_error = std::abs(rep.sum_over_chi - std::complex<double>{rep.rhs, 0.0}) / rep.rhs;
  return rep;
}

void validate_params(const AsymptoticParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 0.5))
    fail(Errc::BadArgument, "epsilon must lie in (0, 1/2)");
  if (!(params.c > 0.0) || !std::isfinite(params.c))
    fail(Errc::BadArgument, "c must be positive and finite");
  if (params.r < 2) fail(Errc::BadArgument, "rank r must be >= 2");
}

i64 coset_cap(const AsymptoticParams& params, i64 p) {
  return static_cast<i64>(std::floor(
      params.c * std::pow(static_cast<double>(p), 0.5 - params.epsilon)));
}

VDecomposition v_decompose(i64 s, i64 M) {
  if (M < 1) fail(Errc::BadM, "M must be >= 1");
  if (s < 0) fail(Errc::BadArgument, "s must be >= 0");
  VDecomposition d;
  d.s = s;
  d.M = M;
  if (s < M) {
    // All items take residue 0; continuous extension of the formula.
    d.k = 1;
    d.q = 0;
    d.v = 0;
    return d;
  }
  d.k = (s + M) / (2 * M);
  d.q = s + M - 2 * d.k * M;
  d.v = 2 * M * (d.k - 1) * d.k * (2 * d.k - 1) / 6 + d.q * d.k * d.k;
  return d;
}

EnvelopeReport a1_envelope_check(const Sequence& S, const AsymptoticParams& params,
                                 const CharacterId& chi) {
  validate_params(params);
  if (is_principal(chi)) fail(Errc::BadArgument, "chi must be non-principal");
  if (S.length() > 64) fail(Errc::LengthGuard, "|S| > 64");
  const i64 p = S.spec.p;
  EnvelopeReport rep;
  rep.M = coset_cap(params, p);
  if (rep.M < 1) fail(Errc::BadM, "coset cap M = 0 at p = " + std::to_string(p));

  // Cosets of Ker(chi) are the level sets of g -> <j, g>.
  std::vector<i64> load(static_cast<std::size_t>(p), 0);
  for (const auto& [g, m] : S.entries) load[static_cast<std::size_t>(dot_mod_p(S.spec, chi.j, g))] += m;
  rep.max_coset_load = *std::max_element(load.begin(), load.end());
  rep.cap_ok = rep.max_coset_load <= rep.M;
  if (!rep.cap_ok) return rep;

  const i64 s = S.length();
  rep.abs_f = std::abs(f_value(S, chi));
  VDecomposition d = v_decompose(s, rep.M);
  rep.v = d.v;
  double pi2 = std::numbers::pi * std::numbers::pi;
  rep.envelope = std::ldexp(1.0, static_cast<int>(s)) *
                 std::exp(-pi2 * static_cast<double>(d.v) /
                          (2.0 * static_cast<double>(p) * static_cast<double>(p)));
  // Both sides scale as 2^s; compare with absolute slack on that scale.
  rep.holds = rep.abs_f <= rep.envelope + 1e-9 * std::ldexp(1.0, static_cast<int>(s));
  rep.lower_bound_applicable = s >= rep.M;
  if (rep.lower_bound_applicable) {
    rep.v_lower = static_cast<double>(s) *
                  (static_cast<double>(s) * static_cast<double>(s) -
                   static_cast<double>(rep.M) * static_cast<double>(rep.M)) /
                  (12.0 * static_cast<double>(rep.M) * static_cast<double>(rep.M));
    rep.lower_bound_ok = static_cast<double>(d.v) >= rep.v_lower - 1e-9;
  }
  return rep;
}

ThresholdReport effective_threshold(const AsymptoticParams& params, i64 prime_cap) {
  validate_params(params);
  ThresholdReport rep;
  rep.epsilon = params.epsilon;
  rep.c = params.c;
  rep.r = params.r;
  double pi2 = std::numbers::pi * std::numbers::pi;
  auto lhs_at = [&](i64 p, i64 s, i64 M) {
    double sd = static_cast<double>(s), Md = static_cast<double>(M),
           pd = static_cast<double>(p);
    return pi2 * sd * (sd * sd - Md * Md) / (24.0 * Md * Md * pd * pd);
  };
  for (i64 p = 2; p <= prime_cap; p = (p == 2 ? 3 : p + 2)) {
    if (!is_prime(p)) continue;
    i64 M = coset_cap(params, p);
    if (M < 1) continue;
    i64 s = p;
    if (!(s * s - M * M > p * p / 2)) continue;  // condition (i)
    double lhs = lhs_at(p, s, M);
    double rhs = std::log(2.0 * std::pow(static_cast<double>(p), params.r));
    if (!(lhs > rhs)) continue;  // condition (ii)
    if (lhs_at(p, s + 1, M) < lhs)
      fail(Errc::TheoremViolation, "threshold scan: lhs not increasing in s");
    rep.found = true;
    rep.p_threshold = p;
    rep.M_at_p = M;
    rep.lhs = lhs;
    rep.rhs = rhs;
    return rep;
  }
  fail(Errc::NotFound, "no qualifying prime up to " + std::to_string(prime_cap));
}

void write_spectrum_csv(std::ostream& out, const Sequence& S, const CharSpectrum& spec,
                        const AsymptoticParams* params) {
  out << 'j' << 1;
  for (int i = 2; i <= S.spec.r; ++i) out << ",j" << i;
  out << ",re_f,im_f,abs_f,envelope,holds\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (i64 jdx = 0; jdx < S.spec.order; ++jdx) {
    Element j = elem_at(S.spec, jdx);
    for (int i = 0; i < S.spec.r; ++i) {
      if (i) out << ',';
      out << j[i];
    }
    const auto& v = spec.values[static_cast<std::size_t>(jdx)];
    out << ',' << num(v.real()) << ',' << num(v.imag()) << ',' << num(std::abs(v));
    std::string env_field, holds_field;
    if (params && jdx != 0) {
      EnvelopeReport rep = a1_envelope_check(S, *params, CharacterId{j});
      if (rep.cap_ok) {
        env_field = num(rep.envelope);
        holds_field = rep.holds ? "1" : "0";
      }
    }
    out << ',' << env_field << ',' << holds_field << '\n';
  }
}

}  // namespace zslab
