#include <doctest.h>

#include <random>

#include "blochsep/catalog.hpp"
#include "blochsep/certificates.hpp"
#include "blochsep/ppt.hpp"
#include "support/test_helpers.hpp"

using namespace blochsep;
using blochsep::testing::pauli;
using blochsep::testing::random_ball_state;

namespace {

BlochVector tilde_of(const DensityMatrix& rho) {
  return to_bloch(rho, Convention::Tilde);
}

BlochVector zero_bloch(const SystemShape& shape, Convention c) {
  return BlochVector{shape, c,
                     std::vector<double>(bloch_component_count(shape), 0.0)};
}

}  // namespace

TEST_CASE("level-2 character table matches the 4x4 reference") {
  const CharacterTable& t = character_table(2);
  int expected[4][4] = {{1, 1, 1, 1},
                        {1, 1, -1, -1},
                        {1, -1, 1, -1},
                        {1, -1, -1, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(t.at(r, c) == expected[r][c]);
}

TEST_CASE("level-3 character table matches the 8x8 reference") {
  const CharacterTable& t = character_table(3);
  int expected[8][8] = {
      {1, 1, 1, 1, 1, 1, 1, 1},      {1, 1, 1, -1, 1, -1, -1, -1},
      {1, 1, -1, 1, -1, 1, -1, -1},  {1, 1, -1, -1, -1, -1, 1, 1},
      {1, -1, 1, 1, -1, -1, 1, -1},  {1, -1, 1, -1, -1, 1, -1, 1},
      {1, -1, -1, 1, 1, -1, -1, 1},  {1, -1, -1, -1, 1, 1, 1, -1}};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(t.at(r, c) == expected[r][c]);
  // column order: 1, x, y, z, xy, xz, yz, xyz
  CHECK(t.column_elements[0] == 0u);
  CHECK(t.column_elements[1] == 0b001u);
  CHECK(t.column_elements[4] == 0b011u);
  CHECK(t.column_elements[7] == 0b111u);
}

TEST_CASE("character tables are orthogonal in exact integer arithmetic") {
  for (int N = 1; N <= 6; ++N) {
    const CharacterTable& t = character_table(N);
    int size = t.size();
    for (int a = 0; a < size; ++a) {
      CHECK(t.at(a, 0) == 1);
      CHECK(t.at(0, a) == 1);
      for (int b = 0; b < size; ++b) {
        long row_dot = 0, col_dot = 0;
        for (int c = 0; c < size; ++c) {
          row_dot += static_cast<long>(t.at(a, c)) * t.at(b, c);
          col_dot += static_cast<long>(t.at(c, a)) * t.at(c, b);
        }
        CHECK(row_dot == (a == b ? size : 0));
        CHECK(col_dot == (a == b ? size : 0));
      }
    }
  }
  CHECK_THROWS_AS(character_table(0), std::invalid_argument);
  CHECK_THROWS_AS(character_table(13), std::invalid_argument);
}

TEST_CASE("half-sums of character classes isolate one group element") {
  // sum_u s_u^{+-} / 2^(N-1) has 1 at the identity, +-1 at g, 0 elsewhere
  for (int N = 1; N <= 6; ++N) {
    const CharacterTable& t = character_table(N);
    int size = t.size();
    for (int gcol = 1; gcol < size; ++gcol) {
      for (int sign : {+1, -1}) {
        std::vector<long> sum(size, 0);
        for (int u = 0; u < size; ++u) {
          if (t.at(u, gcol) != sign) continue;
          for (int c = 0; c < size; ++c) sum[c] += t.at(u, c);
        }
        for (int c = 0; c < size; ++c) {
          long expected = c == 0 ? size / 2 : (c == gcol ? sign * size / 2 : 0);
          CHECK(sum[c] == expected);
        }
      }
    }
  }
}

TEST_CASE("u-state decompositions rebuild (I +- B_idx)/n from product states") {
  SUBCASE("single active qubit") {
    SeparableDecomposition d = u_state_decomposition(
        SystemShape{{2, 2}}, {1, 0}, +1, Convention::Tilde);
    CHECK(d.terms.size() == 1);
    Matrix target = (identity(4) + kron(pauli(1), identity(2))) / 4.0;
    CHECK(verify_decomposition(d, target, 1e-12).ok);
  }
  SUBCASE("two active qubits of three, negative sign") {
    SeparableDecomposition d = u_state_decomposition(
        SystemShape{{2, 2, 2}}, {3, 3, 0}, -1, Convention::Tilde);
    CHECK(d.terms.size() == 2);
    Matrix target =
        (identity(8) - kron({pauli(3), pauli(3), identity(2)})) / 8.0;
    CHECK(verify_decomposition(d, target, 1e-12).ok);
  }
  SUBCASE("qutrit pair under the check convention") {
    SeparableDecomposition d = u_state_decomposition(SystemShape{{3, 3}},
                                                     {1, 1}, +1,
                                                     Convention::Check);
    CHECK(d.terms.size() == 2);
    for (const auto& [w, ps] : d.terms)
      for (const Matrix& local : ps.locals)
        CHECK(min_eigenvalue(local) >= -1e-12);
    Matrix B = basis_element(SystemShape{{3, 3}}, Convention::Check, {1, 1});
    CHECK(verify_decomposition(d, (identity(9) + B) / 9.0, 1e-12).ok);
  }
  SUBCASE("tilde on a qubit party of a mixed shape is fine") {
    SeparableDecomposition d = u_state_decomposition(SystemShape{{2, 3}},
                                                     {1, 0}, +1,
                                                     Convention::Tilde);
    Matrix target = (identity(6) + kron(pauli(1), identity(3))) / 6.0;
    CHECK(verify_decomposition(d, target, 1e-12).ok);
  }
  SUBCASE("error paths") {
    CHECK_THROWS_AS(u_state_decomposition(SystemShape{{2, 3}}, {0, 1}, +1,
                                          Convention::Tilde),
                    UnsupportedConvention);
    CHECK_THROWS_AS(u_state_decomposition(SystemShape{{2, 2}}, {0, 0}, +1,
                                          Convention::Check),
                    std::invalid_argument);
    CHECK_THROWS_AS(u_state_decomposition(SystemShape{{2, 2}}, {1, 0}, +2,
                                          Convention::Check),
                    std::invalid_argument);
  }
}

TEST_CASE("u-state reconstruction over every index on [2,2,2] and [3,3]") {
  for (int sign : {+1, -1}) {
    SystemShape qubits{{2, 2, 2}};
    for (std::size_t f = 0; f < bloch_component_count(qubits); ++f) {
      MultiIndex idx = bloch_multi_index(qubits, f);
      Matrix target =
          (identity(8) +
           sign * basis_element(qubits, Convention::Tilde, idx)) / 8.0;
      CHECK(verify_decomposition(
                u_state_decomposition(qubits, idx, sign, Convention::Tilde),
                target, 1e-12)
                .ok);
    }
    SystemShape qutrits{{3, 3}};
    for (std::size_t f = 0; f < bloch_component_count(qutrits); ++f) {
      MultiIndex idx = bloch_multi_index(qutrits, f);
      Matrix target =
          (identity(9) +
           sign * basis_element(qutrits, Convention::Check, idx)) / 9.0;
      CHECK(verify_decomposition(
                u_state_decomposition(qutrits, idx, sign, Convention::Check),
                target, 1e-12)
                .ok);
    }
  }
}

TEST_CASE("verify_decomposition flags a negative weight") {
  SeparableDecomposition d = u_state_decomposition(
      SystemShape{{2, 2}}, {1, 0}, +1, Convention::Tilde);
  Matrix target = reconstruct(d);
  d.terms.emplace_back(-0.01, d.terms.front().second);
  d.terms.front().first += 0.01;
  VerifyReport r = verify_decomposition(d, target, 1e-9);
  CHECK_FALSE(r.ok);
  CHECK(r.min_weight == doctest::Approx(-0.01));
}

TEST_CASE("theorem3 certifies exactly the unit 1-norm ball") {
  SUBCASE("noisy GHZ3 threshold 1/7") {
    CertificateResult in = theorem3(tilde_of(noisy_ghz(3, 1.0 / 7 - 0.005)));
    CHECK(in.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(in.decomposition.has_value());
    CHECK(verify_decomposition(*in.decomposition,
                               noisy_ghz(3, 1.0 / 7 - 0.005), 1e-9)
              .ok);
    CertificateResult out = theorem3(tilde_of(noisy_ghz(3, 1.0 / 7 + 0.005)));
    CHECK(out.verdict.verdict == Verdict::Inconclusive);
    CHECK_FALSE(out.decomposition.has_value());
  }
  SUBCASE("state A threshold 1/2") {
    CHECK(theorem3(tilde_of(state_A(0.49))).verdict.verdict ==
          Verdict::SeparableCertified);
    CHECK(theorem3(tilde_of(state_A(0.51))).verdict.verdict ==
          Verdict::Inconclusive);
  }
  SUBCASE("maximally mixed gives the single-term decomposition") {
    DensityMatrix mixed =
        validate_density(identity(8) / 8.0, SystemShape{{2, 2, 2}});
    CertificateResult r = theorem3(tilde_of(mixed));
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    CHECK(r.decomposition->terms.size() == 1);
    CHECK(verify_decomposition(*r.decomposition, mixed, 1e-12).ok);
  }
  SUBCASE("wrong shape or convention throws") {
    DensityMatrix qutrit = validate_density(identity(3) / 3.0, SystemShape{{3}});
    CHECK_THROWS_AS(theorem3(to_bloch(qutrit, Convention::Tilde)),
                    std::invalid_argument);
    DensityMatrix qubits = validate_density(identity(4) / 4.0, SystemShape{{2, 2}});
    CHECK_THROWS_AS(theorem3(to_bloch(qubits, Convention::Check)),
                    UnsupportedConvention);
  }
}

TEST_CASE("theorem4 on the noisy GHZ3 family") {
  SUBCASE("certifies up to 1/5 with indices (3,3,3)") {
    CertificateResult r = theorem4(tilde_of(noisy_ghz(3, 0.19)));
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.verdict.chosen_indices.size() == 1);
    CHECK(r.verdict.chosen_indices[0] == MultiIndex{3, 3, 3});
    CHECK(theorem4(tilde_of(noisy_ghz(3, 0.21))).verdict.verdict ==
          Verdict::Inconclusive);
  }
  SUBCASE("boundary decomposition reconstructs at alpha = 0.2") {
    DensityMatrix rho = noisy_ghz(3, 0.2);
    CertificateResult r = theorem4(tilde_of(rho));
    REQUIRE(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    VerifyReport v = verify_decomposition(*r.decomposition, rho, 1e-9);
    CHECK(v.ok);
    CHECK(v.frobenius_distance < 1e-12);
  }
  SUBCASE("all pair components zero degenerates to the theorem3 bound") {
    CertificateResult r = theorem4(tilde_of(state_A(0.3)));
    CHECK(r.verdict.bound == doctest::Approx(1.0));
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    CHECK(verify_decomposition(*r.decomposition, state_A(0.3), 1e-9).ok);
  }
}

TEST_CASE("theorem4 certifies the bound-entangled family at alpha = 1/5") {
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    DensityMatrix rho = reshape(bound_entangled(a, 0.2), SystemShape{{2, 2, 2}});
    CertificateResult r = theorem4(tilde_of(rho));
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    CHECK(verify_decomposition(*r.decomposition, rho, 1e-9).ok);
  }
}

TEST_CASE("theorem5 diagonal-sign family certifies up to c = 1/3") {
  auto diagonal_state = [](double c) {
    BlochVector b = zero_bloch(SystemShape{{2, 2, 2}}, Convention::Tilde);
    for (int t = 1; t <= 3; ++t) {
      b.at({0, t, t}) = c;
      b.at({t, 0, t}) = c;
      b.at({t, t, 0}) = c;
    }
    return b;
  };
  SUBCASE("certified boundary case reconstructs and is PPT") {
    BlochVector b = diagonal_state(0.3);
    CertificateResult r = theorem5(b);
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    CHECK(r.verdict.bound == doctest::Approx(1.0 + 6 * 0.3));
    REQUIRE(r.decomposition.has_value());
    Matrix target = from_bloch(b);
    CHECK(verify_decomposition(*r.decomposition, target, 1e-9).ok);
    DensityMatrix rho = validate_density(target, b.shape, 1e-10);
    CHECK(ppt_all_bipartitions(rho));
  }
  SUBCASE("beyond 1/3 the bound no longer reaches the norm") {
    CertificateResult r = theorem5(diagonal_state(0.35));
    CHECK(r.verdict.verdict == Verdict::Inconclusive);
  }
  SUBCASE("partially degenerate assignment still reconstructs") {
    BlochVector b = zero_bloch(SystemShape{{2, 2, 2}}, Convention::Tilde);
    for (int t : {1, 2}) {
      b.at({0, t, t}) = 0.45;
      b.at({t, 0, t}) = 0.45;
      b.at({t, t, 0}) = 0.45;
    }
    CertificateResult r = theorem5(b);
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    CHECK(r.verdict.bound == doctest::Approx(1.0 + 4 * 0.45));
    REQUIRE(r.decomposition.has_value());
    CHECK(verify_decomposition(*r.decomposition, from_bloch(b), 1e-9).ok);
  }
  SUBCASE("on noisy GHZ3 theorem5 cannot beat theorem4") {
    BlochVector b = tilde_of(noisy_ghz(3, 0.19));
    CHECK(theorem5(b).verdict.bound <= theorem4(b).verdict.bound + 1e-12);
  }
}

TEST_CASE("theorem6 on the noisy GHZ4 family") {
  SUBCASE("certifies up to 1/9 with indices (3,3,3,3) and lessmid 3 alpha") {
    double alpha = 0.105;
    CertificateResult r = theorem6(tilde_of(noisy_ghz(4, alpha)));
    CHECK(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.verdict.chosen_indices.size() == 1);
    CHECK(r.verdict.chosen_indices[0] == MultiIndex{3, 3, 3, 3});
    CHECK(r.verdict.detail.at("lessmid") ==
          doctest::Approx(3 * alpha).epsilon(1e-12));
    CHECK(theorem6(tilde_of(noisy_ghz(4, 0.12))).verdict.verdict ==
          Verdict::Inconclusive);
  }
  SUBCASE("boundary decomposition reconstructs at alpha = 1/9") {
    DensityMatrix rho = noisy_ghz(4, 1.0 / 9);
    CertificateResult r = theorem6(tilde_of(rho));
    REQUIRE(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    VerifyReport v = verify_decomposition(*r.decomposition, rho, 1e-9);
    CHECK(v.ok);
  }
  SUBCASE("maximally mixed is certified trivially") {
    DensityMatrix mixed =
        validate_density(identity(16) / 16.0, SystemShape{{2, 2, 2, 2}});
    CHECK(theorem6(tilde_of(mixed)).verdict.verdict ==
          Verdict::SeparableCertified);
  }
  SUBCASE("a single full-support component degenerates to theorem3") {
    for (double c : {0.9, 1.05}) {
      BlochVector b = zero_bloch(SystemShape{{2, 2, 2, 2}}, Convention::Tilde);
      b.at({1, 1, 1, 1}) = c;
      CertificateResult six = theorem6(b);
      CertificateResult three = theorem3(b);
      CHECK(six.verdict.bound == doctest::Approx(1.0));
      CHECK((six.verdict.verdict == Verdict::SeparableCertified) ==
            (three.verdict.verdict == Verdict::SeparableCertified));
      CHECK((six.verdict.verdict == Verdict::SeparableCertified) == (c <= 1.0));
      if (six.decomposition)
        CHECK(verify_decomposition(*six.decomposition, from_bloch(b), 1e-9).ok);
    }
  }
}

TEST_CASE("theorem6 gate rejects zero-broken sign patterns") {
  // Tuple (1,1,1,1) passes the zero-tolerant sign conditions but its
  // zero-adjusted pattern solves to no character row: rho_1100 = 0 forces
  // eps_1 = +1 while eps_2 eps_4 = -1. The gate must route certification
  // through a compatible tuple instead.
  BlochVector b = zero_bloch(SystemShape{{2, 2, 2, 2}}, Convention::Tilde);
  b.at({1, 0, 1, 0}) = -0.1;
  b.at({1, 0, 0, 1}) = 0.1;
  b.at({0, 1, 1, 0}) = 0.1;
  b.at({0, 1, 0, 1}) = 0.1;
  b.at({0, 0, 1, 1}) = -0.1;
  b.at({1, 1, 1, 1}) = 0.1;
  CertificateResult r = theorem6(b);
  CHECK(r.verdict.verdict == Verdict::SeparableCertified);  // ||rho||_1 = 0.6
  CHECK(r.verdict.bound == doctest::Approx(1.0));  // never 1 + 2*0.2
  REQUIRE(r.verdict.chosen_indices.size() == 1);
  CHECK(r.verdict.chosen_indices[0] != MultiIndex{1, 1, 1, 1});
  REQUIRE(r.decomposition.has_value());
  CHECK(verify_decomposition(*r.decomposition, from_bloch(b), 1e-9).ok);
}

TEST_CASE("theorem7 part 1 matches theorem3 on qubit shapes") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 30; ++rep) {
    SystemShape shape{{2, 2, 2}};
    // mix of inside-ball and outside-ball states
    DensityMatrix rho =
        rep % 2 ? random_state(shape, RandomKind::Generic, rng())
                : random_ball_state(shape, Convention::Tilde, rng);
    CertificateResult t3 = theorem3(to_bloch(rho, Convention::Tilde));
    CertificateResult t7 = theorem7(to_bloch(rho, Convention::Check));
    if (t7.verdict.detail.at("part") == 1)
      CHECK(t3.verdict.verdict == t7.verdict.verdict);
    else  // parts 2-3 only widen the certified region
      CHECK(t7.verdict.bound >= 1.0);
    if (t7.verdict.verdict == Verdict::SeparableCertified) {
      REQUIRE(t7.decomposition.has_value());
      CHECK(verify_decomposition(*t7.decomposition, rho, 1e-9).ok);
    }
  }
}

TEST_CASE("theorem7 certifies weakly-noisy qutrit isotropic states") {
  // ||s_rho||_1 = 16 alpha for d=3: certified iff alpha <= 1/16 < 1/4
  DensityMatrix in = isotropic(3, 0.06);
  CertificateResult r = theorem7(to_bloch(in, Convention::Check));
  CHECK(r.verdict.verdict == Verdict::SeparableCertified);
  CHECK(r.verdict.lhs == doctest::Approx(16 * 0.06).epsilon(1e-10));
  REQUIRE(r.decomposition.has_value());
  CHECK(verify_decomposition(*r.decomposition, in, 1e-9).ok);
  CHECK(ppt_all_bipartitions(in));

  CHECK(theorem7(to_bloch(isotropic(3, 0.07), Convention::Check))
            .verdict.verdict == Verdict::Inconclusive);

  DensityMatrix mixed =
      validate_density(identity(12) / 12.0, SystemShape{{3, 4}});
  CHECK(theorem7(to_bloch(mixed, Convention::Check)).verdict.verdict ==
        Verdict::SeparableCertified);

  CHECK_THROWS_AS(theorem7(to_bloch(mixed, Convention::Tilde)),
                  UnsupportedConvention);
}

TEST_CASE("theorem7 certifies random check-ball states on [2,4]") {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 15; ++rep) {
    DensityMatrix rho =
        random_ball_state(SystemShape{{2, 4}}, Convention::Check, rng);
    CertificateResult r = theorem7(to_bloch(rho, Convention::Check));
    REQUIRE(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    CHECK(verify_decomposition(*r.decomposition, rho, 1e-9).ok);
    CHECK(ppt_all_bipartitions(rho));
  }
}

TEST_CASE("theorem7 parts 2-3 extend the ball on a qutrit triple") {
  BlochVector b = zero_bloch(SystemShape{{3, 3, 3}}, Convention::Check);
  double c = 0.45;
  b.at({0, 1, 1}) = c;
  b.at({1, 0, 1}) = c;
  b.at({1, 1, 0}) = c;
  CertificateResult r = theorem7(b);
  CHECK(r.verdict.lhs == doctest::Approx(3 * c));  // beyond part 1's ball
  CHECK(r.verdict.verdict == Verdict::SeparableCertified);
  CHECK(r.verdict.detail.at("part") == 2);
  REQUIRE(r.decomposition.has_value());
  Matrix target = from_bloch(b);
  CHECK(verify_decomposition(*r.decomposition, target, 1e-9).ok);
  // the certificate vouches for the matrix being a state at all
  DensityMatrix rho = validate_density(target, b.shape, 1e-10);
  CHECK(ppt_all_bipartitions(rho));
}

TEST_CASE("ghz-compatible states") {
  SUBCASE("N=2 reduces to (I + s_i x s_j)/4") {
    GhzCompatible g = ghz_compatible_state(2, {1, 3});
    Matrix expected = (identity(4) + kron(pauli(1), pauli(3))) / 4.0;
    CHECK((g.state.mat - expected).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(verify_decomposition(g.decomposition, g.state, 1e-12).ok);
  }
  SUBCASE("N=3 axes (3,3,3) is the GHZ certificate block") {
    GhzCompatible g = ghz_compatible_state(3, {3, 3, 3});
    BlochVector b = tilde_of(g.state);
    CHECK(b.at({3, 3, 0}) == doctest::Approx(1.0));
    CHECK(b.at({3, 0, 3}) == doctest::Approx(1.0));
    CHECK(b.at({0, 3, 3}) == doctest::Approx(1.0));
    int nonzero = 0;
    for (double v : b.components) nonzero += v != 0.0;
    CHECK(nonzero == 3);
    CHECK(verify_decomposition(g.decomposition, g.state, 1e-12).ok);
  }
  SUBCASE("N=4 axes (3,3,3,3) carries the even-weight pattern") {
    GhzCompatible g = ghz_compatible_state(4, {3, 3, 3, 3});
    BlochVector b = tilde_of(g.state);
    int nonzero = 0;
    for (double v : b.components) nonzero += v != 0.0;
    CHECK(nonzero == 7);  // six pairs plus the full tuple
    CHECK(b.at({3, 3, 3, 3}) == doctest::Approx(1.0));
    CHECK(b.at({3, 3, 0, 0}) == doctest::Approx(1.0));
    CHECK(verify_decomposition(g.decomposition, g.state, 1e-12).ok);
  }
}

TEST_CASE("sufficient criteria never contradict the necessary ones") {
  // dense sweeps over the catalog families
  std::vector<std::pair<DensityMatrix, BlochVector>> states;
  for (double alpha : {0.05, 0.2, 0.35, 0.5, 0.65}) {
    states.emplace_back(noisy_ghz(3, alpha), tilde_of(noisy_ghz(3, alpha)));
    states.emplace_back(state_A(alpha), tilde_of(state_A(alpha)));
  }
  for (auto& [rho, b] : states) {
    bool entangled =
        theorem2_check(correlation_tensor(b)).verdict == Verdict::Entangled;
    std::vector<CertificateResult> certs;
    certs.push_back(theorem3(b));
    certs.push_back(theorem4(b));
    certs.push_back(theorem5(b));
    for (const CertificateResult& c : certs) {
      if (c.verdict.verdict == Verdict::SeparableCertified) {
        CHECK_FALSE(entangled);
        CHECK(ppt_all_bipartitions(rho));
        REQUIRE(c.decomposition.has_value());
        CHECK(verify_decomposition(*c.decomposition, rho, 1e-9).ok);
      }
    }
  }
}

TEST_CASE("certified random ball states stay PPT and self-validate") {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 40; ++rep) {
    SystemShape shape = rep % 2 ? SystemShape{{2, 2, 2}} : SystemShape{{2, 2}};
    DensityMatrix rho = random_ball_state(shape, Convention::Tilde, rng);
    CertificateResult r = theorem3(to_bloch(rho, Convention::Tilde));
    REQUIRE(r.verdict.verdict == Verdict::SeparableCertified);
    REQUIRE(r.decomposition.has_value());
    CHECK(verify_decomposition(*r.decomposition, rho, 1e-9).ok);
    CHECK(ppt_all_bipartitions(rho));
  }
}

TEST_CASE("theorem bounds dominate theorem3 whenever indices are admissible") {
  std::mt19937_64 rng(81);
  for (int rep = 0; rep < 25; ++rep) {
    DensityMatrix rho3 =
        random_state(SystemShape{{2, 2, 2}}, RandomKind::Generic, rng());
    CertificateResult r4 = theorem4(tilde_of(rho3));
    if (!r4.verdict.detail.count("no_admissible_indices"))
      CHECK(r4.verdict.bound >= 1.0);
    DensityMatrix rho4 =
        random_state(SystemShape{{2, 2, 2, 2}}, RandomKind::Generic, rng());
    CertificateResult r6 = theorem6(tilde_of(rho4));
    if (!r6.verdict.detail.count("no_admissible_indices"))
      CHECK(r6.verdict.bound >= 1.0);
  }
}
