#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/artinian.hpp"
#include "gradus/limits.hpp"
#include "gradus/report.hpp"

namespace gradus {

struct HarnessConfig {
  LimitConfig limits;
  InvariantConfig invariants;
  // Levels n = 1..n_max in level tables and level-wise isomorphism checks.
  int n_max = 3;
  // Overrides the window of the main limit computation of a verification.
  std::optional<std::pair<int, int>> window;
  // Annihilator pieces are compared in degrees 0..ann_degree.
  int ann_degree = 3;
};

std::string describe(const PresentedModule& m);
std::string describe(const ArtinianDual& x);
std::string describe(const RingSpec& ring, const std::vector<Polynomial>& seq);

/// A regular sequence on a Cohen-Macaulay M is coregular on H^d_m(M), with
/// H^{d-i}_m(M/(x^n)M) and 0:_{H^d_m(M)}(x^n) matching up to a twist.
VerificationReport verify_prop21(const PresentedModule& m, const std::vector<Polynomial>& seq,
                                 const HarnessConfig& cfg = {});
/// M/(x^n)M against 0:_{H^d_m(M)}(x^n) for a system of parameters x.
VerificationReport verify_cor22(const PresentedModule& m, const std::vector<Polynomial>& sop,
                                const HarnessConfig& cfg = {});
/// N.dim H^d_I(M) <= d.
VerificationReport verify_prop23(const PresentedModule& m, const std::vector<Polynomial>& ideal,
                                 const HarnessConfig& cfg = {});
/// width H^d_I(M) >= min{2, d} when H^d_I(M) != 0.
VerificationReport verify_prop24(const PresentedModule& m, const std::vector<Polynomial>& ideal,
                                 const HarnessConfig& cfg = {});
/// H^d_I(M) co-Cohen-Macaulay when d <= 2, and of N.dim d when M is Cohen-Macaulay and I = m.
VerificationReport verify_cocm(const PresentedModule& m, const std::vector<Polynomial>& ideal,
                               const HarnessConfig& cfg = {});
/// H_i^x(H^j_m(M)) vanishes off (d, d) and H_d^x(H^d_m(M)) has the Hilbert function of M.
VerificationReport verify_thm31(const PresentedModule& m, const std::vector<Polynomial>& sop,
                                const HarnessConfig& cfg = {});
/// ann H^d_m(M) == ann M in low degrees.
VerificationReport verify_cor32(const PresentedModule& m, const HarnessConfig& cfg = {});
/// H_d^x(X)/(x^n) against 0:_X(x^n), and H^d_x(H_d^x(X)) against X.
VerificationReport verify_lemma33_thm34(const ArtinianDual& x, const std::vector<Polynomial>& seq,
                                        const HarnessConfig& cfg = {});

}  // namespace gradus
