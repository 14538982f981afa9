#pragma once

#include "hetg2/hetsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hetg2 {

enum class EpsMode { Solve, Fixed };

/// Bounded exact enumeration of integral solutions.  All enumerated gauge
/// coefficients lie in [-B, B]; eps is either a fixed list or solved exactly,
/// in which case only candidates with uniquely determined eps are reported
/// (pencil-degenerate families are counted, not listed).
struct SearchSpec {
  enum class Kind { N1, N23 };
  Kind kind = Kind::N1;
  int k = 1;
  std::string signs;                       // '+'/'-' multiset; empty = any
  int bound = 2;                           // B >= 1
  std::vector<Rational> lambdas{Rational(0)};
  EpsMode eps_mode = EpsMode::Solve;
  std::vector<Rational> fixed_eps;
  int nprime = 0;                          // N23 only: 2, 3 or 0 = any
  std::string target_name;                 // catalog fingerprint filter, "" = any
  std::uint64_t budget_ms = 0;             // 0 = unlimited
  int threads = 0;                         // 0 = hardware concurrency
};

struct SearchSolution {
  Rational lambda;
  LieAlgebra algebra;
  GaugeField gauge;
  VerificationReport report;
  std::string note;
};

struct SearchResult {
  std::vector<SearchSolution> solutions;
  std::uint64_t candidates = 0;
  std::uint64_t degenerate_skipped = 0;
  std::uint64_t elapsed_ms = 0;
  bool exhaustive = true;
};

/// dim n' = 1: enumerates the endomorphism form of the reduced equation
/// L0^2 - sum eps_r L_r^2 = -8 lambda^2 Id over the integer box.
/// Supported: k in {1, 2}.
SearchResult search_n1(const SearchSpec& spec);

/// dim n' in {2, 3}: enumerates gauge components (v_i^r, F_0^r); the
/// structure forms are derived from the quadratic equations when lambda != 0
/// and enumerated directly when lambda = 0.  Supported: k in {1, 2}.
SearchResult search_n23(const SearchSpec& spec);

struct NonexistenceReport {
  SearchResult result;
  std::string statement;  // bounded evidence, never a proof
  bool empty() const { return result.solutions.empty(); }
};

NonexistenceReport nonexistence_report(const SearchSpec& spec, const std::string& title);

}  // namespace hetg2
