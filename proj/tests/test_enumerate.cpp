#include <set>
#include <vector>

#include "doctest.h"
#include "lme/enumerate.hpp"
#include "lme/errors.hpp"
#include "lme/format.hpp"

using namespace lme;

TEST_CASE("pair count with entries up to 8") {
  EnumerationBounds bounds;
  bounds.n_min = 2;
  bounds.n_max = 2;
  bounds.max_product = 64;
  bounds.max_entry = 8;

  std::vector<RecordRow> rows;
  enumerate(bounds, [&](const RecordRow& r) { rows.push_back(r); });
  CHECK(rows.size() == 28);  // pairs 2 <= a <= b <= 8

  // (2,2) is the first row and a single point.
  REQUIRE(!rows.empty());
  CHECK(rows.front().dims == DimVec::validate({2, 2}));
  CHECK(rows.front().status == 0);

  // Lexicographic order, no duplicates.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> prev;
  for (const RecordRow& r : rows) {
    CHECK(seen.insert(r.dims.vec()).second);
    if (!prev.empty()) CHECK(prev < r.dims.vec());
    prev = r.dims.vec();
  }
}

TEST_CASE("triples up to product 30") {
  EnumerationBounds bounds;
  bounds.n_min = 3;
  bounds.n_max = 3;
  bounds.max_product = 30;

  bool saw_234 = false;
  bool saw_225 = false;
  enumerate(bounds, [&](const RecordRow& r) {
    if (r.dims == DimVec::validate({2, 3, 4})) {
      saw_234 = true;
      CHECK(r.status == 0);
      CHECK(r.terminal == DimVec::validate({1, 2, 2}));
      CHECK(r.trace_length == 2);
      CHECK(r.lcm == 12);
    }
    if (r.dims == DimVec::validate({2, 2, 5})) {
      saw_225 = true;
      CHECK(r.status == -1);
      CHECK(r.terminal_case.tag == TerminalTag::CaseA);
    }
  });
  CHECK(saw_234);
  CHECK(saw_225);
}

TEST_CASE("vectors with 1s appear only with two nontrivial entries") {
  EnumerationBounds bounds;
  bounds.n_min = 3;
  bounds.n_max = 3;
  bounds.max_product = 8;

  std::set<std::vector<std::int64_t>> dims;
  enumerate(bounds, [&](const RecordRow& r) { dims.insert(r.dims.vec()); });
  CHECK(dims.count({1, 2, 2}));
  CHECK(!dims.count({1, 1, 2}));
  CHECK(!dims.count({1, 1, 8}));
}

TEST_CASE("require_nontrivial=false routes invalid tuples to the skip sink") {
  EnumerationBounds bounds;
  bounds.n_min = 2;
  bounds.n_max = 2;
  bounds.max_product = 6;
  bounds.require_nontrivial = false;

  std::size_t rows = 0;
  std::vector<std::vector<std::int64_t>> skipped;
  enumerate(
      bounds, [&](const RecordRow&) { ++rows; },
      [&](const std::vector<std::int64_t>& d, const Error& e) {
        skipped.push_back(d);
        CHECK(e.code() == Errc::InsufficientNontrivial);
      });
  // (1,1)..(1,6) are skipped; (2,2), (2,3) survive.
  CHECK(rows == 2);
  CHECK(skipped.size() == 6);
}

TEST_CASE("bounds validation") {
  EnumerationBounds bad;
  bad.n_min = 1;
  CHECK_THROWS_AS(enumerate(bad, [](const RecordRow&) {}), Error);
  bad = EnumerationBounds{};
  bad.max_product = 3;
  CHECK_THROWS_AS(enumerate(bad, [](const RecordRow&) {}), Error);
  bad = EnumerationBounds{};
  bad.n_max = 1;
  CHECK_THROWS_AS(enumerate(bad, [](const RecordRow&) {}), Error);
}

TEST_CASE("row rendering") {
  EnumerationBounds bounds;
  bounds.n_min = 3;
  bounds.n_max = 3;
  bounds.max_product = 24;

  std::vector<RecordRow> rows;
  enumerate(bounds, [&](const RecordRow& r) { rows.push_back(r); });
  for (const RecordRow& r : rows) {
    if (r.dims == DimVec::validate({2, 3, 4})) {
      CHECK(row_csv(r) == "2x3x4,-3,0,2,24,0,b,1x2x2,2,true,12");
      const Json j = row_json(r);
      CHECK(j["dims"] == Json::array({2, 3, 4}));
      CHECK(j["status"] == 0);
      CHECK(j["terminal_case"] == "b");
      CHECK(j["hyperdet_nonzero"] == true);
    }
  }
}
