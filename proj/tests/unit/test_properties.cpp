#include <doctest.h>

#include "../support/properties.hpp"

TEST_SUITE("properties") {

TEST_CASE("algebraic laws") {
  const wls::props::Options opt;
  for (const auto& o : wls::props::run_all(opt)) {
    CAPTURE(o.name);
    for (const auto& note : o.notes) MESSAGE(note);
    CHECK(o.violations == 0);
    CHECK(o.sampled >= opt.samples);
    CHECK(o.exhaustive > 0);
  }
}

}
