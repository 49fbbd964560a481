#pragma once

#include <complex>
#include <iosfwd>

#include "zslab/subsum.hpp"

namespace zslab {

/// Per-character values f(chi) = prod_i (1 + chi(g_i)), indexed by the
/// lexicographic rank of the dual vector j.
struct CharSpectrum {
  GroupSpec spec;
  i64 s = 0;
  std::vector<std::complex<double>> values;
};

/// Throws LengthGuard when |S| > 64 (|f| <= 2^s must stay in double range).
std::complex<double> f_value(const Sequence& S, const CharacterId& chi);

/// All p^r character values; threads > 1 splits the character range.
CharSpectrum spectrum(const Sequence& S, int threads = 1);

struct IdentityReport {
  std::complex<double> sum_over_chi;
  double rhs = 0;  // |G| * Z(S), Z counted over index subsets incl. empty
  std::uint64_t z = 0;
  double rel_error = 0;
};

/// Orthogonality identity: sum_chi f(chi) = |G| * Z(S). Throws LengthGuard
/// when |S| > 62 (exact counting width).
IdentityReport spectrum_identity_check(const Sequence& S);

struct AsymptoticParams {
  double epsilon = 0;  // in (0, 1/2)
  double c = 0;        // > 0
  int r = 2;           // rank >= 2
};

void validate_params(const AsymptoticParams& params);

/// M = floor(c * p^{1/2 - epsilon}).
i64 coset_cap(const AsymptoticParams& params, i64 p);

struct VDecomposition {
  i64 s = 0, M = 0, k = 0, q = 0, v = 0;
};

/// s = (2k-1)M + q with q in [0, 2M-1] and v = 2M(1^2+...+(k-1)^2) + q k^2.
/// For s < M all items fit at residue 0: k = 1, q = 0, v = 0. Throws BadM.
VDecomposition v_decompose(i64 s, i64 M);

struct EnvelopeReport {
  bool cap_ok = false;       // coset-cap hypothesis for Ker(chi)
  i64 max_coset_load = 0;
  i64 M = 0;
  double abs_f = 0;
  double envelope = 0;       // 2^s exp(-pi^2 v / (2 p^2))
  i64 v = 0;
  bool holds = false;
  bool lower_bound_applicable = false;  // s >= M
  bool lower_bound_ok = false;          // v >= s(s^2 - M^2)/(12 M^2)
  double v_lower = 0;
};

/// The A1 envelope for one non-principal character. cap_ok = false reports a
/// failed hypothesis, not an envelope failure.
EnvelopeReport a1_envelope_check(const Sequence& S, const AsymptoticParams& params,
                                 const CharacterId& chi);

struct ThresholdReport {
  double epsilon = 0, c = 0;
  int r = 0;
  bool found = false;
  i64 p_threshold = 0;
  i64 M_at_p = 0;
  double lhs = 0;  // pi^2 s (s^2 - M^2) / (24 M^2 p^2) at s = p
  double rhs = 0;  // ln(2 p^r)
};

/// Smallest prime p with M >= 1, s^2 - M^2 > p^2/2 and
/// pi^2 s (s^2 - M^2)/(24 M^2 p^2) > ln(2 p^r) at s = p, by ascending scan.
/// Also asserts the s-monotonicity proxy (value at s = p+1 >= value at s = p).
ThresholdReport effective_threshold(const AsymptoticParams& params,
                                    i64 prime_cap = 1'000'000'000);

/// CSV columns: j1,...,jr,re_f,im_f,abs_f,envelope,holds. Envelope fields are
/// filled only when params is given and that character's coset cap holds.
void write_spectrum_csv(std::ostream& out, const Sequence& S, const CharSpectrum& spec,
                        const AsymptoticParams* params);

}  // namespace zslab
