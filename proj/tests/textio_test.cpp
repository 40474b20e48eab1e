#include "doctest.h"
#include "lpbc/textio.hpp"

using namespace lpbc;

TEST_CASE("matroid text round trip") {
  const Matroid m = uniform_matroid(2, 3);
  const std::string text = to_text(m);
  CHECK(text == "matroid 3 2\nbasis 1 2\nbasis 1 3\nbasis 2 3\n");
  const ParsedObject parsed = parse_object(text);
  CHECK(std::get<Matroid>(parsed) == m);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = "# header\nmatroid 2 1\n\nbasis 1  # inline comment\nbasis 2\n";
  CHECK(std::get<Matroid>(parse_object(text)) == uniform_matroid(1, 2));
}

TEST_CASE("rank-0 matroids serialize with empty basis lines") {
  MultiGraph g;
  g.vertex_count = 0;
  g.edges = {GraphEdge::make_free()};
  const Matroid m = bicircular_matroid(g);
  const std::string text = to_text(m);
  CHECK(text == "matroid 1 0\nbasis\n");
  CHECK(std::get<Matroid>(parse_object(text)) == m);
}

TEST_CASE("graph round trip") {
  const MultiGraph g = catalog_graph("R4");
  const ParsedObject parsed = parse_object(to_text(g));
  CHECK(std::get<MultiGraph>(parsed) == g);
}

TEST_CASE("lpm and intervals round trips") {
  const LatticePathPresentation l{5, 5, "EEEENNENNN", "NENNENEENE"};
  CHECK(to_text(l) == "lpm 5 5\nP EEEENNENNN\nQ NENNENEENE\n");
  const auto parsed = std::get<LatticePathPresentation>(parse_object(to_text(l)));
  CHECK(parsed.lower == l.lower);
  CHECK(parsed.upper == l.upper);

  const StandardPresentation s = to_standard_presentation(l);
  const auto parsed_s = std::get<StandardPresentation>(parse_object(to_text(s)));
  CHECK(parsed_s.intervals == s.intervals);
}

TEST_CASE("family round trip including empty sets") {
  SetFamily f;
  f.n = 3;
  f.sets = {mask_of({1, 2}), 0, mask_of({3})};
  CHECK(to_text(f) == "family 3 3\nset 1 2\nset\nset 3\n");
  const auto parsed = std::get<SetFamily>(parse_object(to_text(f)));
  CHECK(parsed.sets == f.sets);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_object("matroid 3 2\nbasis 1 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_object("intervals 4 2\ninterval 1 2\ninterval 1 3\n");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_error);
    CHECK(std::string(e.what()).find("chain") != std::string::npos);
  }
}

TEST_CASE("strictly increasing basis elements are enforced") {
  CHECK_THROWS_AS(parse_object("matroid 3 2\nbasis 2 1\n"), Error);
}

TEST_CASE("witness block format") {
  MinorWitness w;
  w.target_name = "U3_5";
  w.contract = mask_of({2});
  w.remove = mask_of({4, 7});
  w.iso = {2, 1, 3, 4, 5};
  CHECK(witness_to_text(w) ==
        "witness U3_5\ncontract 2\ndelete 4 7\nmap 1:2 2:1 3:3 4:4 5:5\n");
}

TEST_CASE("realize_matroid covers every kind") {
  CHECK(realize_matroid(parse_object("lpm 2 1\nP EEN\nQ NEE\n")) == uniform_matroid(1, 3));
  CHECK(realize_matroid(parse_object("intervals 2 1\ninterval 1 2\n")) == uniform_matroid(1, 2));
  CHECK(realize_matroid(parse_object("family 2 2\nset 1 2\nset 1 2\n")) == uniform_matroid(2, 2));
  CHECK(realize_matroid(parse_object("graph 2\nlink 1 2\nlink 1 2\nlink 1 2\n")) ==
        uniform_matroid(2, 3));
  CHECK(realize_matroid(parse_object("matroid 1 1\nbasis 1\n")) == uniform_matroid(1, 1));
}
