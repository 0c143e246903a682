#include <numeric>
#include <vector>

#include "doctest.h"
#include "lme/classify.hpp"
#include "lme/enumerate.hpp"
#include "lme/errors.hpp"

using namespace lme;

namespace {

DimVec dv(std::initializer_list<std::int64_t> d) { return DimVec::validate(d); }

}  // namespace

TEST_CASE("classify known vectors") {
  SUBCASE("(2,5,5): delta = -2 branch, dimension gmax - 3") {
    const Classification c = classify(dv({2, 5, 5}));
    CHECK(c.status == Status::PositiveDim);
    CHECK(c.dim == 2);
    CHECK(c.rule == Branch::DeltaEquals);
    CHECK(c.invariants.delta == -2);
    CHECK(c.invariants.r == 22);
    CHECK(c.invariants.gmax == 5);
  }
  SUBCASE("(2,3,4): r = 0 point") {
    const Classification c = classify(dv({2, 3, 4}));
    CHECK(c.status == Status::Point);
    CHECK(c.dim == 0);
    CHECK(c.rule == Branch::DeltaBelow);
    CHECK(c.invariants.delta == -3);
  }
  SUBCASE("(2,2,5): r < 0 empty") {
    const Classification c = classify(dv({2, 2, 5}));
    CHECK(c.status == Status::Empty);
    CHECK(c.dim == -1);
    CHECK(c.invariants.delta == -11);
    CHECK(c.invariants.r == -8);
  }
  SUBCASE("(3,3,3): expected-dimension branch") {
    const Classification c = classify(dv({3, 3, 3}));
    CHECK(c.status == Status::PositiveDim);
    CHECK(c.dim == 2);
    CHECK(c.rule == Branch::DeltaAbove);
  }
  SUBCASE("(2,2,2): delta = -2 with gmax 2 collapses to a point") {
    const Classification c = classify(dv({2, 2, 2}));
    CHECK(c.status == Status::Point);
    CHECK(c.dim == 0);
    CHECK(c.rule == Branch::DeltaEquals);
  }
  SUBCASE("(1,2,2): trivial slot accepted, still a point") {
    const Classification c = classify(dv({1, 2, 2}));
    CHECK(c.status == Status::Point);
    CHECK(dimension(dv({1, 2, 2})) == 0);
  }
}

TEST_CASE("classify_2bc") {
  SUBCASE("equal entries") {
    const Classification c = classify_2bc(5, 5);
    CHECK(c.status == Status::PositiveDim);
    CHECK(c.dim == 2);
  }
  SUBCASE("consecutive-multiples ratio") {
    const Classification c = classify_2bc(4, 6);
    CHECK(c.status == Status::Point);
  }
  SUBCASE("everything else is empty") {
    const Classification c = classify_2bc(3, 7);
    CHECK(c.status == Status::Empty);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(classify_2bc(1, 2), Error);
    CHECK_THROWS_AS(classify_2bc(5, 4), Error);
  }
  SUBCASE("agrees with classify everywhere in range") {
    for (std::int64_t b = 2; b <= 64; ++b)
      for (std::int64_t c = b; c <= 64; ++c)
        CHECK(classify_2bc(b, c).dim == classify(dv({2, b, c})).dim);
  }
}

TEST_CASE("hyperdeterminant format condition") {
  CHECK(hyperdet_nonzero(dv({2, 2, 3})));
  CHECK_FALSE(hyperdet_nonzero(dv({2, 2, 4})));
  for (std::int64_t d = 2; d <= 10; ++d) CHECK(hyperdet_nonzero(dv({d, d})));

  // Strictly weaker than non-emptiness: (4,5,10) has a vanishing
  // hyperdeterminant format yet positive-dimensional moduli.
  const DimVec d = dv({4, 5, 10});
  CHECK_FALSE(hyperdet_nonzero(d));
  CHECK(2 * Wide(d.back()) <= d.head_product());
  CHECK(classify(d).status == Status::PositiveDim);
}

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(dv({2, 3, 6}), 20) == std::vector<Wide>{6, 12, 18});
  CHECK(invariant_degrees(dv({2, 2, 2}), 5) == std::vector<Wide>{2, 4});
  CHECK(invariant_degrees(dv({2, 3, 5}), 29).empty());
  CHECK(lcm_all(dv({2, 3, 5})) == 30);
}

TEST_CASE("cross_check agreement on known vectors") {
  for (auto raw : std::vector<std::vector<std::int64_t>>{
           {2, 3, 4}, {3, 3, 3}, {2, 2, 5}, {2, 5, 5}, {4, 4}, {2, 3, 6}}) {
    const ConsistencyReport rep = cross_check(DimVec::validate(raw));
    CHECK(rep.agree);
    CHECK(rep.closed_form.dim == rep.recursive_dim);
  }
}

TEST_CASE("two-entry classification: points exactly on the diagonal") {
  for (std::int64_t a = 2; a <= 64; ++a) {
    for (std::int64_t b = a; b <= 64; ++b) {
      const Classification c = classify(dv({a, b}));
      if (a == b) {
        CHECK(c.status == Status::Point);
      } else {
        CHECK(c.status == Status::Empty);
      }
    }
  }
}

TEST_CASE("classification properties over the small sweep") {
  EnumerationBounds bounds;
  bounds.n_min = 2;
  bounds.n_max = 5;
  bounds.max_product = 256;

  bool found_hyperdet_gap = false;
  enumerate_dims(bounds, [&](const DimVec& d) {
    const ConsistencyReport rep = cross_check(d);
    CHECK(rep.agree);

    const Wide dl = rep.closed_form.invariants.delta;
    const Wide r = rep.closed_form.invariants.r;
    if (dl >= -2) CHECK(r > 0);
    if (dl < -2) CHECK(r <= 0);

    // Empty iff r < 0.
    CHECK((rep.closed_form.status == Status::Empty) == (r < 0));

    // delta = -2 vectors end on a (2,a,a) core with a = gmax.
    if (dl == -2) {
      const DimVec core = strip_ones(rep.trace.terminal());
      REQUIRE(core.size() == 3);
      CHECK(core[0] == 2);
      CHECK(core[1] == core[2]);
      CHECK(core[1] == rep.closed_form.invariants.gmax);
    }

    if (!hyperdet_nonzero(d) && rep.closed_form.status != Status::Empty)
      found_hyperdet_gap = true;
  });
  CHECK(found_hyperdet_gap);
}
