#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cwb/groupring/checks.hpp"

using namespace cwb;
using namespace cwb::groupring;

namespace {

// Set CWB_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
void golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(CWB_GOLDEN_DIR) + "/" + name;
  if (std::getenv("CWB_UPDATE_GOLDEN")) {
    std::ofstream(path) << text << "\n";
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text + "\n");
}

}  // namespace

TEST_CASE("commutator expansion at cap 3") {
  const SurfaceAlphabet a{Genus(1)};
  const NCSeries s = magnus_expand(commutator(generator(a.c(1)), generator(a.c(2))), 3) - NCSeries::one(3);
  golden("commutator_cap3.txt", s.render(a));
}

TEST_CASE("surface relation at g=2") {
  const SurfaceAlphabet a{Genus(2)};
  golden("modJ4_lhs_g2.txt", modJ4_lhs(a).render(a));
  golden("modJ4_rhs_g2.txt", modJ4_rhs(a).render(a));
}

TEST_CASE("mod J^4 defect at cap 4, g=1") {
  const SurfaceAlphabet a{Genus(1)};
  golden("modJ4_defect_cap4_g1.txt", modJ4_defect(Genus(1), 4).render(a));
}

TEST_CASE("cubic correction block at g=1") {
  const SurfaceAlphabet loops{Genus(1)};
  const FormAlphabet forms = FormAlphabet::standard(Genus(1));
  golden("lhs_without_cubic_g1.txt", lhs_lemma_remainder(Genus(1), false).render(loops, forms));
}

TEST_CASE("meridian pairing without zero declarations") {
  const SurfaceAlphabet loops{Genus(2)};
  const FormAlphabet forms = FormAlphabet::standard(Genus(2));
  golden("dbdq_undeclared_g2.txt", dbdq_pairing(Genus(2), false, false, true).render(loops, forms));
  golden("dbdq_declared_g2.txt", dbdq_pairing(Genus(2), true).render(loops, forms));
}

TEST_CASE("collino defect at g=3") {
  const SurfaceAlphabet a{Genus(3)};
  golden("collino_defect_g3.txt", collino_defect(Genus(3)).render(a));
}
