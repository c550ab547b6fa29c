// Parameter sets for the constrained-signature lattice machinery and the
// seven-condition admissibility validator.
//
// The conditions checked (numbered in every report):
//   1. trapdoor well-formedness: m >= n*w + 1 and beta_sam >= 24 + n*w
//      (w = ceil(log2 q)); this is what generation and preimage sampling
//      need to honor their exact contracts at widths m and m*l.
//   2. m >= 2*n*w.
//   3. sigma >= (5 m^3 l beta_sam (2m)^d + 5m) * sqrt((n log2 q + m) / pi).
//   4. sigma strictly inside (sqrt(8m), q / sqrt(8m)).
//   5. beta_ver >= ceil(log2(m)^2) * sigma.
//   6. beta_sis >= 4 m^2 l beta_sam (2m)^d beta_ver (exact big-integer check).
//   7. well-posedness of the hardness assumption the scheme leans on:
//      q an odd prime <= 2^62 and beta_sis >= 1. The assumption itself is
//      not machine-checkable; at desk scale beta_sis inevitably exceeds q,
//      which the report surfaces as a note (short solutions exist trivially,
//      so the assumption is vacuously false at these sizes - the simulator
//      checks mechanics, not security).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skl {

using BigInt = boost::multiprecision::cpp_int;

struct LatticeParams {
  std::string name;
  size_t n = 1;
  size_t m = 1;
  size_t k = 1;  // gadget pad width for signing (preimage targets have width k or k*ell)
  int64_t q = 3;
  double sigma = 1.0;
  int64_t beta_sam = 1;
  int64_t beta_ver = 1;
  int64_t beta_err = 1;  // derived noise floor q / (5 m^3 l beta_sam (2m)^d + 5m)
  BigInt beta_sis = 1;
  size_t d = 1;     // circuit depth budget
  size_t ell = 1;   // function-description length in bits
  size_t iota = 1;  // constrained-function input length in bits
};

struct ConditionReport {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct ParamReport {
  std::string params_name;
  std::vector<ConditionReport> conditions;
  bool all_pass = false;

  std::string pretty() const;   // one line per condition
  std::string to_json() const;  // machine-readable report
};

ParamReport validate_params(const LatticeParams& p);

// The desk-scale working preset: n=1, d=2, ell=9, m=118, q the largest
// 59-bit prime, sigma = 2^52, beta_ver = 48 sigma. Passes all seven checks.
LatticeParams toy_params();

// The literature-style assignment schema (beta_sis = 2^(d ceil(log2^2 y)),
// q the next prime above it, m = 2 n w, sigma from condition 3, beta_ver
// from condition 5) evaluated at scale parameter y. Exercises the report
// machinery; at y = 8 several conditions fail, which is the point.
LatticeParams schema_params(size_t y, size_t n, size_t d, size_t ell, size_t iota);

// Seven single-fault variants of the toy preset; fixture i fails exactly
// condition i+1 and passes the other six.
std::array<LatticeParams, 7> failure_fixtures();

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t x);
uint64_t prev_prime_u64(uint64_t below_inclusive);
uint64_t next_prime_u64(uint64_t above_exclusive);

}  // namespace skl
