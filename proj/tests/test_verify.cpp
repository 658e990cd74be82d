#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "monideal/verify.hpp"
#include "test_helpers.hpp"

using namespace monideal;

TEST_CASE("ceil_half matches the ceiling definition") {
  CHECK(ceil_half(2) == 1);
  CHECK(ceil_half(3) == 2);
  CHECK(ceil_half(4) == 2);
  CHECK(ceil_half(5) == 3);
}

TEST_CASE("intro example verifies") {
  CheckReport r = verify_intro_example();
  INFO(r.to_json().dump(2));
  CHECK(r.ok());
  CHECK(r.passes == 5);
}

TEST_CASE("worked examples verify") {
  CheckReport r = verify_examples();
  INFO(r.to_json().dump(2));
  CHECK(r.ok());
  CHECK(r.passes == 12);
}

TEST_CASE("lemma sweep over the two-variable family") {
  SweepResult sweep = sweep_lemma_dim2(4, 8);
  CHECK(sweep.report.ok());
  CHECK(sweep.records.size() == 4 * 7);

  auto find = [&](long long a, long long c) -> const SweepRecord& {
    for (const auto& r : sweep.records)
      if (r.a == a && r.c == c) return r;
    FAIL("missing cell");
    return sweep.records.front();
  };
  const SweepRecord& hypothesis_cell = find(2, 4);
  CHECK(hypothesis_cell.is_closed);
  CHECK(hypothesis_cell.normal_verdict == Verdict::normal);
  CHECK(hypothesis_cell.bound_holds);
  const SweepRecord& m2_cell = find(1, 2);  // J = m^2
  CHECK(m2_cell.is_closed);
  CHECK(m2_cell.mu == 3);
  // outside the hypothesis: recorded but never asserted
  const SweepRecord& outside = find(3, 4);
  CHECK_FALSE(outside.bound_holds);
  CHECK_FALSE(outside.is_closed);
  CHECK_THROWS_AS(sweep_lemma_dim2(1, 1), std::invalid_argument);
}

TEST_CASE("theorem sweep over the three-variable family") {
  SweepResult sweep = sweep_theorem_dim3(6);
  CHECK(sweep.report.ok());

  auto find = [&](long long a, long long b, long long c) -> const SweepRecord& {
    for (const auto& r : sweep.records)
      if (r.a == a && r.b == b && r.c == c) return r;
    FAIL("missing cell");
    return sweep.records.front();
  };
  const SweepRecord& closed_cell = find(2, 2, 4);
  CHECK(closed_cell.is_closed);
  CHECK(closed_cell.normal_verdict == Verdict::normal);
  const SweepRecord& m2_cell = find(1, 1, 2);
  CHECK(m2_cell.is_closed);
  CHECK(m2_cell.mu == 6);
  const SweepRecord& witness_cell = find(1, 3, 4);
  CHECK_FALSE(witness_cell.is_closed);
  REQUIRE(witness_cell.witness);
  CHECK(*witness_cell.witness == test_helpers::ev({0, 1, 2}));
}

TEST_CASE("sweep CSV has the fixed schema and is byte-stable") {
  SweepResult sweep = sweep_lemma_dim2(2, 3);
  std::ostringstream a, b;
  write_sweep_csv(a, sweep);
  write_sweep_csv(b, sweep_lemma_dim2(2, 3));
  CHECK(a.str() == b.str());
  CHECK(a.str().starts_with("a,b,c,is_closed,bound_holds,normal_verdict,witness,mu,colength\n"));
  CHECK(a.str().find("1,,2,true,true,normal,,3,3\n") != std::string::npos);

  std::ostringstream c;
  write_sweep_csv(c, sweep_theorem_dim3(4));
  // the (1,3,4) row carries the YZ^2 witness
  CHECK(c.str().find("1,3,4,false,false,not_normal,y*z^2,6,") != std::string::npos);
}

TEST_CASE("random closed ideal stream is deterministic and well-formed") {
  CorpusSpec spec{.dim = 3, .trials = 12, .seed = 99};
  RandomClosedIdeals one(spec), two(spec);
  for (int t = 0; t < 12; ++t) {
    MonomialIdeal I = one.next();
    CHECK(I == two.next());
    CHECK(is_integrally_closed(I));
    CHECK(is_m_primary(I));
  }
  RandomClosedIdeals other(CorpusSpec{.dim = 3, .trials = 12, .seed = 100});
  bool all_same = true;
  RandomClosedIdeals fresh(spec);
  for (int t = 0; t < 12; ++t)
    if (!(other.next() == fresh.next())) all_same = false;
  CHECK_FALSE(all_same);
}

TEST_CASE("theorem consequences hold on the worked instances") {
  using test_helpers::ideal;
  // mu <= d+2 with v exactly 2
  MonomialIdeal e351 = ideal(3, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {0, 0, 1}});
  CHECK(e351.mu() == 5);
  CHECK(v_quotient(e351) == 2);
  // contained in m^2, so mu is at least d(d+1)/2 = 6
  MonomialIdeal intro = ideal(3, {{7, 0, 0}, {0, 3, 0}, {0, 0, 2}, {5, 1, 0},
                                  {4, 0, 1}, {3, 2, 0}, {2, 1, 1}, {0, 2, 1}});
  CHECK(rsop_count(intro) == 0);
  CHECK(intro.mu() == 8);
}

TEST_CASE("corpus checks pass with nonempty hypotheses") {
  CorpusSpec small{.dim = 3, .trials = 40, .seed = 42};
  for (const CheckReport& r :
       {corpus_check_div2(small), corpus_check_watanabe(small),
        corpus_check_main_normality(small),
        corpus_check_zariski(CorpusSpec{.dim = 2, .trials = 40, .seed = 42})}) {
    INFO(r.to_json().dump(2));
    CHECK(r.ok());
    CHECK(r.passes > 0);
  }
  CHECK_THROWS_AS(corpus_check_div2(CorpusSpec{.dim = 2}), std::invalid_argument);
  CHECK_THROWS_AS(corpus_check_zariski(CorpusSpec{.dim = 3}), std::invalid_argument);
}

TEST_CASE("check reports serialize to the fixed JSON schema") {
  CheckReport r{.check_name = "demo", .params = {{"k", 1}}};
  r.expect(true, "in", "want", "got");
  r.expect(false, "bad-in", "want2", "got2");
  auto j = r.to_json();
  CHECK(j.size() == 4);
  CHECK(j.contains("check_name"));
  CHECK(j.contains("params"));
  CHECK(j["passes"] == 1);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0] ==
        nlohmann::ordered_json({{"input", "bad-in"}, {"expected", "want2"}, {"got", "got2"}}));

  // identical runs serialize identically
  CorpusSpec spec{.dim = 3, .trials = 10, .seed = 5};
  CHECK(corpus_check_div2(spec).to_json().dump() == corpus_check_div2(spec).to_json().dump());
}
