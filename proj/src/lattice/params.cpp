#include "skl/lattice/params.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace skl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t q) {
  uint64_t r = 1;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, q);
    a = mulmod_u64(a, a, q);
    e >>= 1;
  }
  return r;
}

size_t ceil_log2(uint64_t q) { return std::bit_width(q - 1); }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt_big(const BigInt& v) { return v.str(); }

// 4 m^2 l beta_sam (2m)^d beta_ver, exactly.
BigInt c6_rhs(const LatticeParams& p) {
  BigInt rhs = 4;
  rhs *= BigInt(p.m) * p.m;
  rhs *= p.ell;
  rhs *= p.beta_sam;
  BigInt two_m_pow = 1;
  for (size_t i = 0; i < p.d; ++i) two_m_pow *= 2 * BigInt(p.m);
  rhs *= two_m_pow;
  rhs *= p.beta_ver;
  return rhs;
}

// (5 m^3 l beta_sam (2m)^d + 5m) * sqrt((n log2 q + m) / pi), in long double.
long double c3_rhs(const LatticeParams& p) {
  long double poly = 5.0L * p.m * p.m * p.m * p.ell * p.beta_sam;
  for (size_t i = 0; i < p.d; ++i) poly *= 2.0L * p.m;
  poly += 5.0L * p.m;
  const long double dim = p.n * std::log2(static_cast<long double>(p.q)) + p.m;
  return poly * std::sqrt(dim / kPi);
}

}  // namespace

bool is_prime_u64(uint64_t x) {
  if (x < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality for every 64-bit integer.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t v = powmod_u64(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      v = mulmod_u64(v, v, x);
      if (v == x - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t prev_prime_u64(uint64_t below_inclusive) {
  for (uint64_t c = below_inclusive | 1;; c -= 2)
    if (is_prime_u64(c)) return c;
}

uint64_t next_prime_u64(uint64_t above_exclusive) {
  for (uint64_t c = (above_exclusive + 1) | 1;; c += 2)
    if (is_prime_u64(c)) return c;
}

ParamReport validate_params(const LatticeParams& p) {
  ParamReport rep;
  rep.params_name = p.name;
  const size_t w = ceil_log2(static_cast<uint64_t>(p.q));
  const long double sigma = p.sigma;

  {
    ConditionReport c{1, "trapdoor well-formed (m >= n*w+1 and beta_sam >= 24+n*w)", false, "", "", ""};
    const bool m_ok = p.m >= p.n * w + 1;
    const bool beta_ok = p.beta_sam >= static_cast<int64_t>(24 + p.n * w);
    c.pass = m_ok && beta_ok;
    c.lhs = "m=" + std::to_string(p.m) + ", beta_sam=" + std::to_string(p.beta_sam);
    c.rhs = "n*w+1=" + std::to_string(p.n * w + 1) + ", 24+n*w=" + std::to_string(24 + p.n * w);
    rep.conditions.push_back(c);
  }
  {
    ConditionReport c{2, "m >= 2*n*w", false, std::to_string(p.m), std::to_string(2 * p.n * w), ""};
    c.pass = p.m >= 2 * p.n * w;
    rep.conditions.push_back(c);
  }
  {
    const long double rhs = c3_rhs(p);
    ConditionReport c{3, "sigma >= (5 m^3 l beta_sam (2m)^d + 5m) sqrt((n log2 q + m)/pi)", sigma >= rhs,
                      fmt_double(static_cast<double>(sigma)), fmt_double(static_cast<double>(rhs)), ""};
    rep.conditions.push_back(c);
  }
  {
    const long double lo = std::sqrt(8.0L * p.m);
    const long double hi = static_cast<long double>(p.q) / lo;
    ConditionReport c{4, "sigma in (sqrt(8m), q/sqrt(8m))", sigma > lo && sigma < hi,
                      fmt_double(static_cast<double>(sigma)),
                      "(" + fmt_double(static_cast<double>(lo)) + ", " + fmt_double(static_cast<double>(hi)) + ")", ""};
    rep.conditions.push_back(c);
  }
  {
    const long double lg = std::log2(static_cast<long double>(p.m));
    const long double need = std::ceil(lg * lg) * sigma;
    ConditionReport c{5, "beta_ver >= ceil(log2(m)^2) * sigma",
                      static_cast<long double>(p.beta_ver) >= need, std::to_string(p.beta_ver),
                      fmt_double(static_cast<double>(need)), ""};
    rep.conditions.push_back(c);
  }
  {
    const BigInt rhs = c6_rhs(p);
    ConditionReport c{6, "beta_sis >= 4 m^2 l beta_sam (2m)^d beta_ver", p.beta_sis >= rhs, fmt_big(p.beta_sis),
                      fmt_big(rhs), ""};
    rep.conditions.push_back(c);
  }
  {
    ConditionReport c{7, "assumption well-posed (q odd prime <= 2^62, beta_sis >= 1)", false, "", "", ""};
    const bool q_ok = p.q >= 3 && p.q <= (int64_t{1} << 62) && p.q % 2 == 1 && is_prime_u64(static_cast<uint64_t>(p.q));
    c.pass = q_ok && p.beta_sis >= 1;
    c.lhs = "q=" + std::to_string(p.q) + ", beta_sis=" + fmt_big(p.beta_sis);
    c.rhs = "odd prime <= 2^62, >= 1";
    c.note = "short-vector hardness is assumed, never checked";
    if (c.pass && p.beta_sis >= p.q)
      c.note += "; beta_sis >= q, so short solutions exist trivially at this scale";
    rep.conditions.push_back(c);
  }

  rep.all_pass = true;
  for (const auto& c : rep.conditions) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

std::string ParamReport::pretty() const {
  std::ostringstream os;
  os << "parameter set: " << params_name << "\n";
  for (const auto& c : conditions) {
    os << "  condition " << c.index << " [" << (c.pass ? "PASS" : "FAIL") << "] " << c.label << ": lhs=" << c.lhs
       << " rhs=" << c.rhs;
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  os << "  overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string ParamReport::to_json() const {
  nlohmann::json j;
  j["params"] = params_name;
  j["all_pass"] = all_pass;
  j["conditions"] = nlohmann::json::array();
  for (const auto& c : conditions) {
    j["conditions"].push_back({{"index", c.index},
                               {"label", c.label},
                               {"pass", c.pass},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs},
                               {"note", c.note}});
  }
  return j.dump(2);
}

namespace {

int64_t derive_beta_err(const LatticeParams& p) {
  BigInt denom = 5;
  denom *= BigInt(p.m) * p.m * p.m;
  denom *= p.ell;
  denom *= p.beta_sam;
  for (size_t i = 0; i < p.d; ++i) denom *= 2 * BigInt(p.m);
  denom += 5 * BigInt(p.m);
  BigInt floor = BigInt(p.q) / denom;
  return floor > std::numeric_limits<int64_t>::max() ? std::numeric_limits<int64_t>::max()
                                                     : static_cast<int64_t>(floor);
}

}  // namespace

LatticeParams toy_params() {
  LatticeParams p;
  p.name = "toy";
  p.n = 1;
  p.d = 2;
  p.ell = 9;  // holds a forced leading 1 plus 2^iota table bits
  p.iota = 3;
  p.q = static_cast<int64_t>(prev_prime_u64(uint64_t{1} << 59));  // 576460752303423433, 59 bits
  const size_t w = ceil_log2(static_cast<uint64_t>(p.q));
  p.m = 2 * p.n * w;  // 118
  p.k = p.m;
  p.beta_sam = static_cast<int64_t>(24 + p.n * w);  // 83
  p.sigma = 4503599627370496.0;                     // 2^52 exactly
  p.beta_ver = 48 * int64_t{1} << 52;               // ceil(log2(118)^2) = 48
  p.beta_err = derive_beta_err(p);
  p.beta_sis = c6_rhs(p);
  return p;
}

LatticeParams schema_params(size_t y, size_t n, size_t d, size_t ell, size_t iota) {
  LatticeParams p;
  p.name = "schema-y" + std::to_string(y);
  p.n = n;
  p.d = d;
  p.ell = ell;
  p.iota = iota;
  const long double lg = std::log2(static_cast<long double>(y));
  const uint64_t exponent = d * static_cast<uint64_t>(std::ceil(lg * lg));
  p.beta_sis = BigInt(1) << exponent;
  const uint64_t sis_u64 =
      exponent < 62 ? (uint64_t{1} << exponent) : (uint64_t{1} << 61);  // prime search cap
  p.q = static_cast<int64_t>(next_prime_u64(sis_u64));
  const size_t w = ceil_log2(static_cast<uint64_t>(p.q));
  p.m = 2 * n * w;
  p.k = p.m;
  p.beta_sam = static_cast<int64_t>(24 + n * w);
  // Round sigma and beta_ver up so the conditions they were solved from hold exactly.
  p.sigma = static_cast<double>(std::ceil(c3_rhs(p)));
  const long double lgm = std::log2(static_cast<long double>(p.m));
  const long double bv = std::ceil(std::ceil(lgm * lgm) * static_cast<long double>(p.sigma));
  p.beta_ver = bv > static_cast<long double>(std::numeric_limits<int64_t>::max())
                   ? std::numeric_limits<int64_t>::max()
                   : static_cast<int64_t>(bv);
  p.beta_err = derive_beta_err(p);
  return p;
}

std::array<LatticeParams, 7> failure_fixtures() {
  std::array<LatticeParams, 7> out;
  for (auto& p : out) p = toy_params();

  out[0].name = "fail-c1";
  out[0].beta_sam = 82;  // below 24 + n*w = 83

  out[1].name = "fail-c2";
  out[1].m = 117;  // below 2*n*w = 118, still above n*w+1
  out[1].k = 117;

  out[2].name = "fail-c3";
  out[2].sigma = 2251799813685248.0;  // 2^51, below the condition-3 floor

  out[3].name = "fail-c4";
  out[3].sigma = 2.0e16;  // above q / sqrt(8m) ~ 1.88e16
  out[3].beta_ver = 48 * int64_t{20000000000000000};
  out[3].beta_sis = c6_rhs(out[3]);

  out[4].name = "fail-c5";
  out[4].beta_ver = 47 * int64_t{1} << 52;  // one multiple short of 48 sigma
  out[4].beta_sis = c6_rhs(out[4]);         // keep condition 6 satisfied

  out[5].name = "fail-c6";
  out[5].beta_sis = c6_rhs(out[5]) - 1;

  out[6].name = "fail-c7";
  out[6].q = (int64_t{1} << 59) - 1;  // odd composite of the same bit length

  return out;
}

}  // namespace skl
