#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "cwb/groupring/checks.hpp"

using namespace cwb;
using namespace cwb::groupring;

namespace {

NCSeries mono(Monomial m, int c, int cap) { return NCSeries::monomial(std::move(m), c, cap); }

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, gens - 1), sign(0, 1);
  Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

using M3 = std::array<std::array<long long, 3>, 3>;

M3 mul(const M3& x, const M3& y) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

// Unitriangular model of the g = 1 Heisenberg group: a, b, delta = [a, b].
M3 matrix_of(const HeisenbergElement& e) {
  M3 r{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const M3 a{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}, ai{{{1, -1, 0}, {0, 1, 0}, {0, 0, 1}}};
  const M3 b{{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}, bi{{{1, 0, 0}, {0, 1, -1}, {0, 0, 1}}};
  const M3 d{{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}, di{{{1, 0, -1}, {0, 1, 0}, {0, 0, 1}}};
  auto pw = [&](const M3& p, const M3& n, long long k) {
    for (long long i = 0; i < std::abs(k); ++i) r = mul(r, k > 0 ? p : n);
  };
  pw(a, ai, e.m[0]);
  pw(b, bi, e.n[0]);
  pw(d, di, e.k);
  return r;
}

}  // namespace

TEST_CASE("magnus expansion examples") {
  const Word g1 = generator(0), g2 = generator(1);
  CHECK(magnus_expand(concat(g1, inverse(g1)), 3) == NCSeries::one(3));

  NCSeries expected2 = mono({0, 1}, 1, 2) - mono({1, 0}, 1, 2);
  CHECK(magnus_expand(commutator(g1, g2), 2) - NCSeries::one(2) == expected2);

  NCSeries expected3 = mono({0, 1}, 1, 3) - mono({1, 0}, 1, 3) + mono({1, 0, 1}, 1, 3) - mono({0, 1, 0}, 1, 3) -
                       mono({0, 1, 1}, 1, 3) + mono({1, 0, 0}, 1, 3);
  CHECK(magnus_expand(commutator(g1, g2), 3) - NCSeries::one(3) == expected3);

  NCSeries inv = NCSeries::one(4) - mono({0}, 1, 4) + mono({0, 0}, 1, 4) - mono({0, 0, 0}, 1, 4) + mono({0, 0, 0, 0}, 1, 4);
  CHECK(magnus_expand(inverse(g1), 4) == inv);
}

TEST_CASE("magnus expansion is multiplicative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    const NCSeries uv = magnus_expand(concat(u, v), 3);
    CHECK(uv == (magnus_expand(u, 3) * magnus_expand(v, 3)).truncated(3));
    CHECK(uv.coefficient({}) == 1);
  }
}

TEST_CASE("truncation drops monomials above the cap") {
  const NCSeries s = mono({0, 1}, 1, 2) * mono({2}, 1, 2);
  CHECK(s.is_zero());
  CHECK((mono({0}, 2, 3) * mono({1, 1}, 3, 3)).coefficient({0, 1, 1}) == 6);
}

TEST_CASE("mod J^4 identity") {
  for (int g = 1; g <= 4; ++g) {
    const SurfaceAlphabet a{Genus(g)};
    const NCSeries lhs = magnus_expand(surface_relator(a), 3) - NCSeries::one(3);
    CHECK(lhs == modJ4_lhs(a));
    const Word meridians = concat(generator(a.d_b()), generator(a.d_q()));
    CHECK(magnus_expand(meridians, 3) - NCSeries::one(3) == modJ4_rhs(a));
    CHECK(verify_modJ4(Genus(g)).passed());

    const NCSeries defect = modJ4_defect(Genus(g), 4);
    CHECK_FALSE(defect.is_zero());
    CHECK(defect.min_degree() == 4);
  }
}

TEST_CASE("heisenberg commutators and center") {
  const Heisenberg h{Genus(2)};
  CHECK(h.commutator(h.a(1), h.b(1)) == h.delta());
  CHECK(h.commutator(h.a(1), h.b(2)) == h.identity());
  CHECK(h.commutator(h.a(1), h.a(2)) == h.identity());
  CHECK(h.is_central(h.delta()));
  CHECK_FALSE(h.is_central(h.a(1)));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> e(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    HeisenbergElement x{{e(rng), e(rng)}, {e(rng), e(rng)}, e(rng)};
    CHECK(h.multiply(h.delta(), x) == h.multiply(x, h.delta()));
    CHECK(h.multiply(x, h.inverse(x)) == h.identity());
  }
  const auto ab = h.abelianization(h.multiply(h.power(h.a(1), 3), h.b(2)));
  CHECK(ab == std::vector<long long>{3, 0, 0, 1});
  for (const Word& r : h.relators()) CHECK(h.evaluate(r) == h.identity());
}

TEST_CASE("heisenberg g=1 multiplication table matches unitriangular matrices") {
  const Heisenberg h{Genus(1)};
  std::vector<HeisenbergElement> elems;
  for (long long m = -2; m <= 2; ++m)
    for (long long n = -2; n <= 2; ++n)
      for (long long k = -2; k <= 2; ++k) elems.push_back({{m}, {n}, k});
  for (const auto& x : elems)
    for (const auto& y : elems) CHECK(matrix_of(h.multiply(x, y)) == mul(matrix_of(x), matrix_of(y)));
}

TEST_CASE("J^2/J^3 rank by brute force") {
  CHECK(j2j3_rank(Genus(1)).rank == 4);
  CHECK(j2j3_rank(Genus(2)).rank == 11);
  CHECK(j2j3_rank(Genus(2)).rank == lattice::compute_K(Genus(2)).K.cols());
  CHECK(j2j3_rank(Genus(1)).rank == lattice::compute_K(Genus(1)).K.cols());
}

TEST_CASE("collino congruence") {
  CHECK(collino_coefficient(Genus(2)) == 1);
  CHECK(collino_coefficient(Genus(3)) == 2);
  CHECK(collino_coefficient(Genus(5)) == 4);
  for (int g = 2; g <= 4; ++g) {
    const NCSeries d = collino_defect(Genus(g));
    CHECK((d.is_zero() || d.min_degree() >= 4));
    CHECK(verify_collino(Genus(g)).passed());
  }
  const SurfaceAlphabet a{Genus(2)};
  const NCSeries s = magnus_expand(commutator(generator(a.c(1)), generator(a.c(3))), 4) - NCSeries::one(4);
  CHECK((s * s).min_degree() >= 4);
  CHECK_THROWS_AS(verify_collino(Genus(1)), InvalidArgument);
}

TEST_CASE("chen pairing examples") {
  const FormWord w12{0, 1};
  CHECK(chen_pair(w12, Monomial{2}) == SymPoly::period(2, {0, 1}));
  CHECK(chen_pair(w12, Monomial{2, 3}) == SymPoly::period(2, {0}) * SymPoly::period(3, {1}));
  CHECK(chen_pair(w12, Monomial{}).is_zero());
  CHECK(chen_pair(FormWord{0, 1, 2}, Monomial{4, 5}) ==
        SymPoly::period(4, {0, 1}) * SymPoly::period(5, {2}) + SymPoly::period(4, {0}) * SymPoly::period(5, {1, 2}));
  CHECK(chen_pair(FormWord{0, 1, 2}, Monomial{1, 2, 3}) ==
        SymPoly::period(1, {0}) * SymPoly::period(2, {1}) * SymPoly::period(3, {2}));
  FormalIterint I;
  CHECK_THROWS_AS(I.add({0, 1, 2, 3}, SymPoly::scalar(1)), InvalidArgument);
  I.add({0, 1}, SymPoly::scalar(1));
  CHECK(chen_pair(I, NCSeries::one(3)).is_zero());
}

TEST_CASE("shuffle identity after pairing with a single generator") {
  NormalizationRules rules;
  for (int k = 0; k < 3; ++k) {
    const NCSeries m = magnus_expand(generator(k), 3);
    auto pair = [&](FormWord w) {
      FormalIterint I;
      I.add(std::move(w), SymPoly::scalar(1));
      return chen_pair(I, m);
    };
    // lengths (1,1)
    CHECK(normalize(pair({0}) * pair({1}) - pair({0, 1}) - pair({1, 0}), rules).is_zero());
    CHECK(normalize(pair({1}) * pair({1}) - Rational(2) * pair({1, 1}), rules).is_zero());
    // lengths (1,2)
    CHECK(normalize(pair({0}) * pair({1, 2}) - pair({0, 1, 2}) - pair({1, 0, 2}) - pair({1, 2, 0}), rules).is_zero());
    CHECK(normalize(pair({2}) * pair({0, 1}) - pair({2, 0, 1}) - pair({0, 2, 1}) - pair({0, 1, 2}), rules).is_zero());
  }
}

TEST_CASE("composition rule for random words") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Word al = random_word(rng, 3, 4), be = random_word(rng, 3, 4);
    const NCSeries A = magnus_expand(al, 3), B = magnus_expand(be, 3), AB = magnus_expand(concat(al, be), 3);
    auto P = [](const FormWord& w, const NCSeries& s) {
      FormalIterint I;
      I.add(w, SymPoly::scalar(1));
      return chen_pair(I, s);
    };
    const FormWord w1{0}, w2{1}, w3{2}, w12{0, 1}, w23{1, 2}, w123{0, 1, 2};
    CHECK(P(w12, AB) == P(w12, A) + P(w1, A) * P(w2, B) + P(w12, B));
    CHECK(P(w123, AB) == P(w123, A) + P(w12, A) * P(w3, B) + P(w1, A) * P(w23, B) + P(w123, B));
  }
}

TEST_CASE("lyndon words and shuffles") {
  CHECK(is_lyndon({0, 1}));
  CHECK_FALSE(is_lyndon({1, 0}));
  CHECK_FALSE(is_lyndon({0, 0}));
  CHECK(is_lyndon({0, 0, 1}));
  CHECK(lyndon_factorization({1, 0, 1}) == std::vector<FormWord>{{1}, {0, 1}});
  const auto sh = shuffle({0}, {1, 2});
  CHECK(sh.size() == 3);
  CHECK(sh.at({0, 1, 2}) == 1);
  CHECK(sh.at({1, 0, 2}) == 1);
  CHECK(sh.at({1, 2, 0}) == 1);
  CHECK(shuffle({0}, {0}).at({0, 0}) == 2);
}

TEST_CASE("normalization rules are explicit inputs") {
  const SymPoly a12 = SymPoly::constant("a", 1, 2), a21 = SymPoly::constant("a", 2, 1);
  const SymPoly ab12 = SymPoly::constant("abar", 1, 2);
  NormalizationRules none;
  none.shuffle = false;
  CHECK_FALSE(normalize(a12 - a21, none).is_zero());
  CHECK_FALSE(normalize(ab12 + a12, none).is_zero());
  const auto k = NormalizationRules::kaenders();
  CHECK(normalize(a12 - a21, k).is_zero());
  CHECK(normalize(ab12 + a12, k).is_zero());

  NormalizationRules z;
  z.zeros.insert(Atom::period(4, {0}));
  CHECK(normalize(SymPoly::period(4, {0}) * SymPoly::period(1, {1}), z).is_zero());
  CHECK_FALSE(normalize(SymPoly::period(4, {1}), z).is_zero());
}

TEST_CASE("lemma on the left-hand side of the mod J^4 identity") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(lhs_lemma_remainder(Genus(g), true).is_zero());
    CHECK(verify_lhs_lemma(Genus(g)).passed());
  }
  const SurfaceAlphabet loops{Genus(1)};
  const FormAlphabet forms = FormAlphabet::standard(Genus(1));
  CHECK(lhs_lemma_remainder(Genus(1), false) ==
        normalize(lhs_cubic_block(Genus(1), loops, forms), NormalizationRules::kaenders()));
  CHECK_FALSE(lhs_lemma_remainder(Genus(1), false).is_zero());
}

TEST_CASE("meridian product pairing vanishes") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(dbdq_pairing(Genus(g), true).is_zero());
    CHECK(verify_dbdq_vanish(Genus(g)).passed());
  }
  const SurfaceAlphabet loops{Genus(2)};
  const FormAlphabet forms = FormAlphabet::standard(Genus(2));
  CHECK(dbdq_pairing(Genus(2), true, false, true).is_zero());
  CHECK(dbdq_pairing(Genus(2), false, false, true) ==
        SymPoly::period(loops.d_b(), {forms.index("w")}) * SymPoly::period(loops.d_q(), {forms.index("xi")}));
}
