#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwb/curve/intersection.hpp"

using namespace cwb;
using namespace cwb::curve;

namespace {

const char* const curves[] = {"x^5 - 1", "x*(x-1)*(x-2)*(x-3)*(x-4)", "x^7 - x - 1", "x^6 - 1", "x^8 + 3*x - 2"};

}  // namespace

TEST_CASE("candidate words") {
  const auto w2 = candidate_words(2);
  REQUIRE(w2.size() == 4);
  CHECK(w2[0] == LassoWord{0, 1});
  CHECK(w2[1] == LassoWord{2, 1, 0, 3});
  CHECK(w2[2] == LassoWord{2, 1});
  CHECK(w2[3] == LassoWord{4, 3});
  for (int g = 2; g <= 4; ++g)
    for (const auto& w : candidate_words(g)) CHECK(w.size() % 2 == 0);
}

TEST_CASE("standard symplectic matrix") {
  const auto J = standard_symplectic(2);
  CHECK(J[0][2] == 1);
  CHECK(J[2][0] == -1);
  CHECK(J[0][1] == 0);
  CHECK(J[1][3] == 1);
}

TEST_CASE("homology basis is certified symplectic on every test curve") {
  for (const char* text : curves) {
    const auto c = Curve::build(text);
    const auto basis = HomologyBasis::build(c);
    const int g = c->genus();
    const auto M = intersection_matrix(basis);
    CHECK(M == standard_symplectic(g));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) CHECK(M[i][j] == 0);
    CHECK(certify_basis(basis).passed());
    for (int nu = 0; nu < 2 * g; ++nu) CHECK(basis.cycle(nu).is_closed());
    CHECK_FALSE(basis.describe().empty());
  }
}

TEST_CASE("reversing one b-cycle breaks certification with a sign flip") {
  const auto c = Curve::build("x^5 - 1");
  const auto basis = HomologyBasis::build(c);
  const auto flipped = basis.with_reversed(2);
  const auto M = intersection_matrix(flipped);
  CHECK(M[0][2] == -1);
  CHECK(M[2][0] == 1);
  CHECK(M[1][3] == 1);
  const auto r = certify_basis(flipped);
  CHECK_FALSE(r.passed());
  CHECK(r.witness.contains("intersection_matrix"));
}

TEST_CASE("intersection numbers are antisymmetric and reverse with orientation") {
  const auto c = Curve::build("x^7 - x - 1");
  const auto words = candidate_words(3);
  std::vector<LiftedPolyline> loops;
  for (std::size_t l = 0; l < words.size(); ++l)
    loops.push_back(lift_word(*c, words[l], c->clearance() * 0.15L * std::polar(1.0L, 0.7L + 1.3L * l),
                              c->clearance() * (0.35L + 0.5L * l / words.size())));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    CHECK(intersection_number(*c, loops[i], loops[i]) == 0);
    for (std::size_t j = 0; j < loops.size(); ++j) {
      const int ij = intersection_number(*c, loops[i], loops[j]);
      CHECK(ij == -intersection_number(*c, loops[j], loops[i]));
      if (i != j) CHECK(intersection_number(*c, reversed(loops[i]), loops[j]) == -ij);
    }
  }
}

TEST_CASE("lifted loops close on their starting sheet") {
  const auto c = Curve::build("x^5 - 1");
  for (const auto& w : candidate_words(2)) {
    const auto p = lift_word(*c, w, 0, c->clearance() * 0.4L);
    REQUIRE(p.x.size() > 10);
    CHECK(std::abs(p.x.back() - p.x.front()) < 1e-12L);
    CHECK(std::abs(p.y.back() - p.y.front()) < 1e-9L * std::abs(p.y.front()));
  }
}
