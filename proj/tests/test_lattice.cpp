// Lattice layer: Z_q matrices, the powers-of-two gadget, trapdoor preimage
// sampling, discrete Gaussians, homomorphic circuit evaluation, and the
// seven-condition parameter validator. The algebraic identities here are
// exact; only distribution-shape checks carry statistical slack.

#include <doctest.h>

#include <cmath>
#include <map>
#include <nlohmann/json.hpp>

#include "skl/error.hpp"
#include "skl/lattice/dgauss.hpp"
#include "skl/lattice/eval.hpp"
#include "skl/lattice/params.hpp"
#include "skl/lattice/trapdoor.hpp"
#include "skl/stats.hpp"

using namespace skl;

TEST_SUITE("zq") {
  TEST_CASE("canonical representatives") {
    for (int64_t v = -30; v <= 30; ++v) {
      const int64_t r7 = canonical_mod(v, 7);
      CHECK(r7 >= -3);
      CHECK(r7 <= 3);
      CHECK((v - r7) % 7 == 0);
      const int64_t r8 = canonical_mod(v, 8);  // even modulus: (-4, 4]
      CHECK(r8 >= -3);
      CHECK(r8 <= 4);
      CHECK((v - r8) % 8 == 0);
    }
    CHECK(canonical_mod(4, 7) == -3);
    CHECK(canonical_mod(-4, 7) == 3);
    CHECK(canonical_mod(4, 8) == 4);
    CHECK(canonical_mod(-4, 8) == 4);
    const int64_t q = 576460752303423433;
    CHECK(canonical_mod(static_cast<int128>(q) * 123456789 + 5, q) == 5);
    CHECK(canonical_mod(-static_cast<int128>(q) * 987654321 - 2, q) == -2);
  }

  TEST_CASE("entries reduce on write") {
    ZqMatrix m(1, 1, 7);
    m.set(0, 0, 10);
    CHECK(m.at(0, 0) == 3);
    m.set(0, 0, 4);
    CHECK(m.at(0, 0) == -3);
    m.set(0, 0, -7);
    CHECK(m.at(0, 0) == 0);
  }

  TEST_CASE("ring axioms on random matrices") {
    Rng rng(70);
    const int64_t q = 3329;
    const ZqMatrix a = ZqMatrix::uniform(4, 5, q, rng);
    const ZqMatrix b = ZqMatrix::uniform(4, 5, q, rng);
    const ZqMatrix c = ZqMatrix::uniform(5, 3, q, rng);
    const ZqMatrix d = ZqMatrix::uniform(5, 3, q, rng);

    CHECK((a + b) - b == a);
    CHECK(a.scaled(2) == a + a);
    CHECK(a.negated() == ZqMatrix(4, 5, q) - a);
    CHECK(a.transpose().transpose() == a);
    CHECK(a * ZqMatrix::identity(5, q) == a);
    CHECK(a * (c + d) == a * c + a * d);
    CHECK((a * c).transpose() == c.transpose() * a.transpose());
    CHECK_FALSE(a.is_zero());
    CHECK(ZqMatrix(2, 2, q).is_zero());
  }

  TEST_CASE("blocks stack and slice consistently") {
    Rng rng(71);
    const ZqMatrix x = ZqMatrix::uniform(3, 4, 97, rng);
    const ZqMatrix y = ZqMatrix::uniform(3, 2, 97, rng);
    const ZqMatrix z = ZqMatrix::uniform(2, 4, 97, rng);

    const ZqMatrix h = x.hstack(y);
    CHECK(h.cols() == 6);
    CHECK(h.block(0, 0, 3, 4) == x);
    CHECK(h.block(0, 4, 3, 2) == y);

    const ZqMatrix v = x.vstack(z);
    CHECK(v.rows() == 5);
    CHECK(v.block(0, 0, 3, 4) == x);
    CHECK(v.block(3, 0, 2, 4) == z);

    ZqMatrix w(3, 6, 97);
    w.set_block(0, 0, x);
    w.set_block(0, 4, y);
    CHECK(w == h);
    CHECK(h.column(4) == y.block(0, 0, 3, 1));
  }

  TEST_CASE("linf and uniform range") {
    ZqMatrix m(2, 2, 101);
    m.set(0, 1, -37);
    m.set(1, 0, 12);
    CHECK(m.linf() == 37);

    Rng rng(72);
    const ZqMatrix u = ZqMatrix::uniform(50, 4, 97, rng);
    CHECK(u.linf() <= 48);
    Rng r1(73), r2(73), r3(74);
    CHECK(ZqMatrix::uniform(6, 6, 97, r1) == ZqMatrix::uniform(6, 6, 97, r2));
    CHECK(ZqMatrix::uniform(6, 6, 97, r1) != ZqMatrix::uniform(6, 6, 97, r3));
  }

  TEST_CASE("byte roundtrip") {
    Rng rng(75);
    const ZqMatrix m = ZqMatrix::uniform(7, 3, 576460752303423433, rng);
    const ZqMatrix back = ZqMatrix::decode(m.encode());
    CHECK(back == m);
    CHECK(back.modulus() == m.modulus());
    CHECK_THROWS_AS(ZqMatrix::decode({1, 2, 3}), DecodeError);
    auto bytes = m.encode();
    bytes.push_back(0);  // trailing garbage
    CHECK_THROWS_AS(ZqMatrix::decode(bytes), DecodeError);
  }
}

TEST_SUITE("gadget") {
  TEST_CASE("layout, including even moduli and padding") {
    const GadgetParams gp{1, 4, 8};
    CHECK(gp.digits_per_row() == 3);
    const ZqMatrix g = gadget(gp);
    CHECK(g.at(0, 0) == 1);
    CHECK(g.at(0, 1) == 2);
    CHECK(g.at(0, 2) == 4);  // canonical rep of 4 mod 8 is 4 itself
    CHECK(g.at(0, 3) == 0);

    const GadgetParams gp2{2, 6, 8};
    const ZqMatrix g2 = gadget(gp2);
    for (size_t j = 0; j < 3; ++j) {
      CHECK(g2.at(0, j) == (int64_t{1} << j));
      CHECK(g2.at(0, 3 + j) == 0);
      CHECK(g2.at(1, j) == 0);
      CHECK(g2.at(1, 3 + j) == (int64_t{1} << j));
    }
    CHECK_THROWS_AS(gadget(GadgetParams{1, 2, 8}), std::invalid_argument);
  }

  TEST_CASE("short basis annihilates the gadget") {
    for (const GadgetParams gp : {GadgetParams{1, 9, 257}, GadgetParams{1, 12, 257}, GadgetParams{2, 24, 3329}}) {
      const ZqMatrix s = gadget_basis(gp);
      CHECK(s.linf() <= 2);
      CHECK((gadget(gp) * s).is_zero());
    }
  }

  TEST_CASE("binary decomposition inverts the gadget exhaustively") {
    const GadgetParams gp{1, 9, 257};
    for (int64_t v = -128; v <= 128; ++v) {
      ZqMatrix target(1, 1, 257);
      target.set(0, 0, v);
      const ZqMatrix d = gadget_decompose(gp, target);
      for (size_t j = 0; j < 9; ++j) CHECK((d.at(j, 0) == 0 || d.at(j, 0) == 1));
      CHECK(gadget(gp) * d == target);
    }
    // Multi-column, multi-row instance at the signing modulus.
    Rng rng(76);
    const GadgetParams gp2{2, 24, 3329};
    const ZqMatrix v = ZqMatrix::uniform(2, 3, 3329, rng);
    const ZqMatrix d = gadget_decompose(gp2, v);
    CHECK(gadget(gp2) * d == v);
    CHECK(d.linf() <= 1);
  }

  TEST_CASE("noisy inversion recovers (s, e) exactly") {
    const GadgetParams gp{1, 9, 257};
    const ZqMatrix gt = gadget(gp).transpose();

    SUBCASE("noise-free, every secret") {
      for (int64_t sv = -128; sv <= 128; ++sv) {
        ZqMatrix s(1, 1, 257);
        s.set(0, 0, sv);
        const auto rec = gadget_invert(gp, gt * s);
        REQUIRE(rec.has_value());
        CHECK(rec->first == s);
        CHECK(rec->second.is_zero());
      }
    }

    SUBCASE("ternary noise") {
      Rng rng(77);
      for (int rep = 0; rep < 2000; ++rep) {
        ZqMatrix s(1, 1, 257);
        s.set(0, 0, rng.range_i64(-128, 128));
        ZqMatrix e(9, 1, 257);
        for (size_t j = 0; j < 9; ++j) e.set(j, 0, rng.range_i64(-1, 1));
        const auto rec = gadget_invert(gp, gt * s + e);
        REQUIRE(rec.has_value());
        CHECK(rec->first == s);
        CHECK(rec->second == e);
      }
    }

    SUBCASE("arbitrary vectors come back consistent or rejected") {
      Rng rng(78);
      int accepted = 0;
      for (int rep = 0; rep < 500; ++rep) {
        const ZqMatrix y = ZqMatrix::uniform(9, 1, 257, rng);
        const auto rec = gadget_invert(gp, y);
        if (rec) {
          ++accepted;
          CHECK(gt * rec->first + rec->second == y);
        }
      }
      (void)accepted;  // whatever the rate, consistency is what matters
    }

    CHECK_THROWS_AS(gadget_invert(gp, ZqMatrix(3, 1, 257)), std::invalid_argument);
  }
}

TEST_SUITE("trapdoor") {
  TEST_CASE("trapgen builds the advertised shape") {
    Rng rng(80);
    const Trapdoor trap = trapgen(2, 64, 3329, rng);
    CHECK(trap.a.rows() == 2);
    CHECK(trap.a.cols() == 64);
    CHECK(trap.td.gp.k == 24);  // 2 * ceil(log2 3329)
    CHECK(trap.td.a_bar.cols() == 40);
    CHECK(trap.td.r.linf() <= 1);
    CHECK(trap.beta_sam == 48);
    CHECK(trap.a == trap.td.full_matrix());
    CHECK_THROWS_AS(trapgen(2, 24, 3329, rng), std::invalid_argument);
  }

  TEST_CASE("preimages are exact members with bounded entries") {
    Rng rng(81);
    const Trapdoor trap = trapgen(2, 64, 3329, rng);
    for (int rep = 0; rep < 100; ++rep) {
      const ZqMatrix v = ZqMatrix::uniform(2, 1, 3329, rng);
      const ZqMatrix x = sampre(trap, v, rng);
      CHECK(trap.a * x == v);
      CHECK(x.linf() <= trap.beta_sam);
    }
    // Multi-column call preimages column by column.
    const ZqMatrix v5 = ZqMatrix::uniform(2, 5, 3329, rng);
    const ZqMatrix x5 = sampre(trap, v5, rng);
    CHECK(trap.a * x5 == v5);
    CHECK_THROWS_AS(sampre(trap, ZqMatrix(3, 1, 3329), rng), std::invalid_argument);
  }

  TEST_CASE("sam stays within the preimage marginal cut") {
    Rng rng(82);
    const ZqMatrix s = sam(30, 20, 3329, rng);
    CHECK(s.linf() <= 24);
    double sum = 0;
    for (size_t i = 0; i < 30; ++i)
      for (size_t j = 0; j < 20; ++j) sum += static_cast<double>(s.at(i, j));
    CHECK(std::abs(sum / 600.0) < 0.2);  // width-2 entries, so the mean pins near 0
  }

  TEST_CASE("lwe inversion, noise-free at q=257") {
    Rng rng(83);
    const Trapdoor trap = trapgen(1, 18, 257, rng);
    const ZqMatrix at = trap.a.transpose();
    for (int rep = 0; rep < 100; ++rep) {
      ZqMatrix s(1, 1, 257);
      s.set(0, 0, rng.range_i64(-128, 128));
      const auto rec = invert_lwe(trap.a, trap.td.r, trap.td.gp, at * s);
      REQUIRE(rec.has_value());
      CHECK(rec->first == s);
      CHECK(rec->second.is_zero());
    }
  }

  TEST_CASE("lwe inversion up to the contracted noise bound") {
    Rng rng(84);
    const Trapdoor trap = trapgen(1, 34, 65537, rng);
    const int64_t bound = invert_lwe_noise_bound(trap.td.r, trap.td.gp);
    REQUIRE(bound >= 1);  // 42 when ||R||_inf = 1
    const ZqMatrix at = trap.a.transpose();

    for (int rep = 0; rep < 200; ++rep) {
      ZqMatrix s(1, 1, 65537);
      s.set(0, 0, rng.range_i64(-32768, 32768));
      ZqMatrix e(34, 1, 65537);
      for (size_t j = 0; j < 34; ++j) e.set(j, 0, rng.range_i64(-bound, bound));
      const auto rec = invert_lwe(trap.a, trap.td.r, trap.td.gp, at * s + e);
      REQUIRE(rec.has_value());
      CHECK(rec->first == s);
      CHECK(rec->second == e);
    }

    // Arbitrary vectors: recovered or refused, never wrong.
    for (int rep = 0; rep < 100; ++rep) {
      const ZqMatrix y = ZqMatrix::uniform(34, 1, 65537, rng);
      const auto rec = invert_lwe(trap.a, trap.td.r, trap.td.gp, y);
      if (rec) {
        CHECK(at * rec->first + rec->second == y);
        CHECK(rec->second.linf() <= bound);
      }
    }
    CHECK_THROWS_AS(invert_lwe(trap.a, trap.td.r, trap.td.gp, ZqMatrix(3, 1, 65537)), std::invalid_argument);
  }
}

TEST_SUITE("dgauss") {
  TEST_CASE("1d sampler, table regime") {
    const DiscreteGaussian1D d(4.0, 48);
    double z = 0;
    for (int64_t x = -48; x <= 48; ++x) z += d.weight(x);

    Rng rng(85);
    std::map<int64_t, uint64_t> counts;
    const uint64_t samples = 20000;
    for (uint64_t i = 0; i < samples; ++i) {
      const int64_t x = d.sample(rng);
      REQUIRE(x >= -48);
      REQUIRE(x <= 48);
      ++counts[x];
    }
    std::vector<double> p;
    std::vector<uint64_t> c;
    for (int64_t x = -48; x <= 48; ++x) {
      p.push_back(d.weight(x) / z);
      c.push_back(counts[x]);
    }
    CHECK(stats::tv_distance(c, p) < 0.03);
  }

  TEST_CASE("1d sampler, rejection regime") {
    const DiscreteGaussian1D d(600.0, 7200);
    Rng rng(86);
    const int n = 4000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; ++i) {
      const int64_t x = d.sample(rng);
      REQUIRE(x >= -7200);
      REQUIRE(x <= 7200);
      sum += static_cast<double>(x);
      sq += static_cast<double>(x) * static_cast<double>(x);
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sq / n - mean * mean);
    const double expect_sd = 600.0 / std::sqrt(2.0 * 3.14159265358979);
    CHECK(std::abs(mean) < 20.0);
    CHECK(sd == doctest::Approx(expect_sd).epsilon(0.05));
  }

  TEST_CASE("1d sampler contracts") {
    CHECK_THROWS_AS(DiscreteGaussian1D(0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteGaussian1D(4.0, 0), std::invalid_argument);
    const DiscreteGaussian1D d(4.0, 10);
    CHECK(d.weight(11) == 0.0);
    CHECK(d.weight(-11) == 0.0);
    CHECK(d.weight(0) == 1.0);
    CHECK(d.weight(4) == doctest::Approx(std::exp(-3.14159265358979)));
  }

  TEST_CASE("width admissibility") {
    CHECK_THROWS_AS(check_sigma(4.0, 3, 97), std::invalid_argument);   // below sqrt(24)
    CHECK_THROWS_AS(check_sigma(25.0, 3, 97), std::invalid_argument);  // above 97/sqrt(24)
    CHECK_NOTHROW(check_sigma(10.0, 3, 97));
  }

  TEST_CASE("direct coset sampler matches full enumeration") {
    const int64_t q = 97;
    const double sigma = 6.0;
    ZqMatrix a(1, 3, q);
    a.set(0, 0, 5);
    a.set(0, 1, 17);
    a.set(0, 2, -40);
    ZqMatrix y(1, 1, q);
    y.set(0, 0, 23);

    // Exact law: weight rho(x) over every coset point in the canonical box.
    const DiscreteGaussian1D d1(sigma, 48);
    auto forced0 = [&](int64_t x1, int64_t x2) {
      // 39 is 5^-1 mod 97
      return canonical_mod(static_cast<int128>(39) * (23 - 17 * x1 + 40 * x2), q);
    };
    std::vector<double> exact(97 * 97);
    double z = 0;
    for (int64_t x1 = -48; x1 <= 48; ++x1)
      for (int64_t x2 = -48; x2 <= 48; ++x2) {
        const double w = d1.weight(forced0(x1, x2)) * d1.weight(x1) * d1.weight(x2);
        exact[(x1 + 48) * 97 + (x2 + 48)] = w;
        z += w;
      }
    for (double& w : exact) w /= z;

    Rng rng(87);
    const uint64_t samples = 30000;
    std::vector<uint64_t> freq(97 * 97, 0);
    for (uint64_t i = 0; i < samples; ++i) {
      const ZqMatrix x = dgauss_coset_direct(a, y, sigma, rng);
      REQUIRE(a * x == y);
      CHECK(x.at(0, 0) == forced0(x.at(1, 0), x.at(2, 0)));
      freq[static_cast<size_t>((x.at(1, 0) + 48) * 97 + (x.at(2, 0) + 48))]++;
    }
    CHECK(stats::tv_distance(freq, exact) < 0.05);
  }

  TEST_CASE("trapdoor coset sampler is an exact member") {
    Rng rng(88);
    const Trapdoor trap = trapgen(1, 34, 65537, rng);
    for (int rep = 0; rep < 20; ++rep) {
      const ZqMatrix y = ZqMatrix::uniform(1, 1, 65537, rng);
      const ZqMatrix x = dgauss_coset_trapdoor(trap.td, y, 300.0, rng);
      CHECK(trap.a * x == y);
      CHECK(x.linf() <= 12 * 300 + 18);
    }
  }

  TEST_CASE("dispatcher picks a workable regime or refuses") {
    Rng rng(89);
    ZqMatrix a(1, 3, 97);
    a.set(0, 0, 5);
    a.set(0, 1, 1);
    a.set(0, 2, 2);
    ZqMatrix y(1, 1, 97);
    y.set(0, 0, 11);
    const ZqMatrix x = dgauss_coset(a, y, 6.0, nullptr, rng);
    CHECK(a * x == y);

    // Large modulus, no trapdoor: the rejection rate would be astronomical.
    const int64_t big_q = 2147483647;
    const ZqMatrix a_big = ZqMatrix::uniform(1, 3, big_q, rng);
    ZqMatrix y_big(1, 1, big_q);
    CHECK_THROWS_AS(dgauss_coset(a_big, y_big, 10.0, nullptr, rng), std::invalid_argument);

    const Trapdoor trap = trapgen(1, 34, 65537, rng);
    const ZqMatrix y_td = ZqMatrix::uniform(1, 1, 65537, rng);
    const ZqMatrix x_td = dgauss_coset(trap.a, y_td, 300.0, &trap.td, rng);
    CHECK(trap.a * x_td == y_td);
  }
}

TEST_SUITE("eval") {
  // Shared example scale: two rows, q = 3329 (so 12 gadget digits), four
  // input wires of 24 columns each.
  constexpr int64_t kQ = 3329;
  constexpr size_t kM = 24;
  constexpr size_t kL = 4;

  Circuit proj2() { return Circuit{kL, {}, 2}; }
  Circuit const1() { return Circuit{kL, {}, 1}; }
  Circuit nand23() { return Circuit{kL, {{2, 3}}, 5}; }
  Circuit not2() { return Circuit{kL, {{2, 2}}, 5}; }
  Circuit and23() { return Circuit{kL, {{2, 3}, {5, 5}}, 6}; }
  Circuit or_of_ands() { return Circuit{kL, {{2, 3}, {2, 4}, {5, 6}}, 7}; }

  TEST_CASE("circuit structure") {
    CHECK_NOTHROW(and23().validate());
    CHECK(proj2().depth() == 0);
    CHECK(nand23().depth() == 1);
    CHECK(and23().depth() == 2);
    CHECK(or_of_ands().depth() == 2);

    Circuit bad_out{kL, {}, 0};
    CHECK_THROWS_AS(bad_out.validate(), std::invalid_argument);
    Circuit forward_ref{kL, {{5, 2}}, 5};  // gate reads its own output wire
    CHECK_THROWS_AS(forward_ref.validate(), std::invalid_argument);
    Circuit no_inputs{0, {}, 1};
    CHECK_THROWS_AS(no_inputs.validate(), std::invalid_argument);

    const Circuit c = or_of_ands();
    for (uint64_t bits = 0; bits < 16; ++bits) {
      Bitstring x(4);
      for (size_t i = 0; i < 4; ++i) x.set(i, (bits >> i) & 1);
      const int x2 = x.get(1), x3 = x.get(2), x4 = x.get(3);
      CHECK(c.evaluate(x) == (1 - (1 - x2 * x3) * (1 - x2 * x4)));
    }
  }

  TEST_CASE("key relation holds exactly for every circuit and input") {
    Rng rng(90);
    const ZqMatrix b = ZqMatrix::uniform(2, kL * kM, kQ, rng);
    const GadgetParams gp_m{2, kM, kQ};
    const ZqMatrix g = gadget(gp_m);

    for (const Circuit& c : {const1(), proj2(), nand23(), not2(), and23(), or_of_ands()}) {
      const WireMatrix h = eval_f(c, b, 2);
      const int64_t bound = 1;
      int64_t norm_cap = bound;
      for (size_t i = 0; i < c.depth(); ++i) norm_cap *= 2 * static_cast<int64_t>(kM);
      CHECK(h.linf() <= norm_cap);

      for (uint64_t bits = 0; bits < 8; ++bits) {
        Bitstring x(kL);
        x.set(0, 1);  // input convention: wire 1 carries constant 1
        for (size_t i = 1; i < kL; ++i) x.set(i, (bits >> (i - 1)) & 1);
        const WireMatrix h_hat = eval_fx(c, x, b, 2);
        const ZqMatrix lhs = mul_wide(b - x_tensor_g(x, gp_m), h_hat);
        const ZqMatrix rhs = mul_wide(b, h) - g.scaled(c.evaluate(x));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("evaluation guardrails") {
    Rng rng(91);
    const ZqMatrix b = ZqMatrix::uniform(2, kL * kM, kQ, rng);
    CHECK_THROWS_AS(eval_f(and23(), b, 1), std::invalid_argument);  // depth budget
    Bitstring x(kL);
    CHECK_THROWS_AS(eval_fx(nand23(), x, b, 2), std::invalid_argument);  // first bit clear
    Bitstring short_x(2);
    short_x.set(0, 1);
    CHECK_THROWS_AS(eval_fx(nand23(), short_x, b, 2), std::invalid_argument);
    const ZqMatrix b_ragged = ZqMatrix::uniform(2, kL * kM + 1, kQ, rng);
    CHECK_THROWS_AS(eval_f(proj2(), b_ragged, 2), std::invalid_argument);
  }

  TEST_CASE("wire matrices agree with their dense forms") {
    Rng rng(92);
    const WireMatrix s2 = WireMatrix::selector(kL, kM, kQ, 2);
    CHECK(s2.has_block(2));
    CHECK_FALSE(s2.has_block(0));
    CHECK(s2.dense().block(2 * kM, 0, kM, kM) == ZqMatrix::identity(kM, kQ));
    CHECK(s2.linf() == 1);

    const ZqMatrix b = ZqMatrix::uniform(2, kL * kM, kQ, rng);
    const WireMatrix h = eval_f(and23(), b, 2);
    CHECK(mul_wide(b, h) == b * h.dense());

    const ZqMatrix w = ZqMatrix::uniform(kM, kM, kQ, rng);
    CHECK(h.right_mul(w).dense() == h.dense() * w);
    CHECK((h - s2).dense() == h.dense() - s2.dense());
  }

  TEST_CASE("input tensor layout") {
    const GadgetParams gp_m{2, kM, kQ};
    Bitstring x(3);
    x.set(0, 1);
    x.set(2, 1);
    const ZqMatrix t = x_tensor_g(x, gp_m);
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 3 * kM);
    CHECK(t.block(0, 0, 2, kM) == gadget(gp_m));
    CHECK(t.block(0, kM, 2, kM).is_zero());
    CHECK(t.block(0, 2 * kM, 2, kM) == gadget(gp_m));
  }
}

TEST_SUITE("params") {
  TEST_CASE("working preset passes all seven conditions with the frozen values") {
    const LatticeParams p = toy_params();
    CHECK(p.n == 1);
    CHECK(p.d == 2);
    CHECK(p.ell == 9);
    CHECK(p.iota == 3);
    CHECK(p.q == 576460752303423433);
    CHECK(p.m == 118);
    CHECK(p.k == 118);
    CHECK(p.beta_sam == 83);
    CHECK(p.sigma == 4503599627370496.0);
    CHECK(p.beta_ver == 216172782113783808);
    CHECK(p.beta_err == 1686);
    CHECK(p.beta_sis == BigInt("500921446020494060463499247616"));

    const ParamReport rep = validate_params(p);
    REQUIRE(rep.conditions.size() == 7);
    for (const auto& c : rep.conditions) CHECK(c.pass);
    CHECK(rep.all_pass);
    CHECK(rep.pretty().find("overall: PASS") != std::string::npos);
    CHECK(rep.pretty().find("condition 1 [PASS]") != std::string::npos);
    // Desk scale is honest about what it cannot claim.
    CHECK(rep.conditions[6].note.find("short solutions exist trivially") != std::string::npos);

    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["all_pass"] == true);
    CHECK(j["conditions"].size() == 7);
  }

  TEST_CASE("literature-style schema at small scale fails where expected") {
    const LatticeParams p = schema_params(8, 1, 2, 9, 3);
    CHECK(p.m == 38);
    CHECK(p.beta_sam == 43);
    CHECK(p.q == 262147);
    CHECK(p.beta_sis == 262144);

    const ParamReport rep = validate_params(p);
    REQUIRE(rep.conditions.size() == 7);
    for (const auto& c : rep.conditions) {
      const bool should_fail = c.index == 4 || c.index == 6;
      CHECK(c.pass == !should_fail);
    }
    CHECK_FALSE(rep.all_pass);
  }

  TEST_CASE("each failure fixture trips exactly its own condition") {
    const auto fixtures = failure_fixtures();
    for (size_t i = 0; i < 7; ++i) {
      CHECK(fixtures[i].name == "fail-c" + std::to_string(i + 1));
      const ParamReport rep = validate_params(fixtures[i]);
      REQUIRE(rep.conditions.size() == 7);
      for (const auto& c : rep.conditions) CHECK(c.pass == (c.index != static_cast<int>(i + 1)));
      CHECK_FALSE(rep.all_pass);
    }
  }

  TEST_CASE("primality helpers") {
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(4));
    CHECK(is_prime_u64(97));
    CHECK(is_prime_u64(262147));
    CHECK(is_prime_u64(576460752303423433));
    CHECK_FALSE(is_prime_u64(576460752303423434));
    CHECK(prev_prime_u64(uint64_t{1} << 59) == 576460752303423433);
    CHECK(next_prime_u64(262144) == 262147);
  }
}
