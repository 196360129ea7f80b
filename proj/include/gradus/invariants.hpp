#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradus/presented_module.hpp"

namespace gradus {

struct InvariantConfig {
  // Top degree of the realization window; nullopt picks default_top(M).
  std::optional<int> hi;
  int fit_span = 6;
  int trials = 20;
  std::uint64_t seed = 1;

  int top_for(const PresentedModule& m) const;
};

/// Default window top: enough room past the presentation degrees for the
/// Hilbert function to become polynomial on small examples.
int default_top(const PresentedModule& m, int fit_span);

struct KrullResult {
  int dimension = -1;
  // The finite-difference fit had no confirmed zero residual on the span.
  bool window_insufficient = false;
  // Least r such that r linear forms give a finite-length quotient.
  int cross_check = -1;
};

/// Krull dimension from the Hilbert function tail, cross-checked against the
/// number of linear forms needed for a finite-length quotient. The zero
/// module has dimension -1. Throws DiagnosticError when the two disagree.
KrullResult krull_dimension(const PresentedModule& m, const InvariantConfig& cfg = {});

/// True iff M vanishes somewhere in [max twist, top] (hence above).
bool has_finite_length(const PresentedModule& m, int top);
bool is_zero_module(const PresentedModule& m);

struct DepthInfo {
  int depth = 0;
  bool window_heuristic = false;
};
DepthInfo depth(const PresentedModule& m, const InvariantConfig& cfg = {});

/// depth == dim. Throws DomainError for the zero module.
bool is_cohen_macaulay(const PresentedModule& m, const InvariantConfig& cfg = {});

struct RegularSequenceResult {
  bool regular = true;
  // First failing position, or -1.
  int failed_step = -1;
  // Degree of the source piece where injectivity failed, or the top degree
  // of a quotient that became zero (M/(f)M = 0 is not allowed).
  int failed_degree = 0;
  bool window_heuristic = true;
};

/// Each f_t must act injectively on M/(f_1..f_{t-1})M in every window degree,
/// and the final quotient must be nonzero.
RegularSequenceResult is_regular_sequence(const PresentedModule& m, const std::vector<Polynomial>& seq,
                                          const InvariantConfig& cfg = {});

/// r linear forms with M/(forms)M of finite length, or nullopt. Coordinate
/// subsets are tried first, then cfg.trials random forms seeded by seed + trial.
std::optional<std::vector<Polynomial>> find_parameters(const PresentedModule& m, int r, const InvariantConfig& cfg);

/// A system of parameters of length dim M. Throws SearchFailure when none is found.
std::vector<Polynomial> find_sop(const PresentedModule& m, const InvariantConfig& cfg = {});

/// Random linear form with coefficients drawn from a generator seeded by `seed`.
Polynomial random_linear_form(const RingSpec& ring, std::uint64_t seed);

}  // namespace gradus
