#include <gtest/gtest.h>

#include <random>

#include "braidkit/invariants.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/random.hpp"
#include "braidkit/search.hpp"

using namespace braidkit;

TEST(Json, WordRoundTrip) {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 300; ++k) {
    const auto w = random_braid_word(1 + static_cast<int>(rng() % 8), 20, rng);
    const auto text = word_to_json(w).dump();
    EXPECT_EQ(word_from_json(json::parse(text)), w);
  }
}

TEST(Json, WordShape) {
  const auto j = word_to_json(parse_braid_word("s1 s2^-1", 3));
  EXPECT_EQ(j, json::parse(R"({"n": 3, "letters": [1, -2]})"));
  EXPECT_THROW(word_from_json(json::parse(R"({"n": 3, "letters": [3]})")), ParseError);
  EXPECT_THROW(word_from_json(json::parse(R"({"letters": [1]})")), ParseError);
  EXPECT_THROW(word_from_json(json::parse(R"({"n": "x", "letters": [1]})")), ParseError);
}

TEST(Json, NormalFormRoundTrip) {
  std::mt19937_64 rng(92);
  for (int k = 0; k < 300; ++k) {
    const auto nf = left_normal_form(random_braid_word(2 + static_cast<int>(rng() % 5), 16, rng));
    EXPECT_EQ(normal_form_from_json(json::parse(normal_form_to_json(nf).dump())), nf);
  }
}

TEST(Json, NormalFormShapeAndRenormalization) {
  const auto j = normal_form_to_json(left_normal_form(parse_braid_word("s1^-1", 3)));
  EXPECT_EQ(j, json::parse(R"({"n": 3, "delta_power": -1, "factors": [[3, 1, 2]]})"));
  // [2,1,3][2,1,3] is s1 s1, not left-weighted as written but still a valid braid
  const auto nf = normal_form_from_json(json::parse(R"({"n": 3, "delta_power": 0, "factors": [[2,1,3],[2,1,3]]})"));
  EXPECT_EQ(nf, left_normal_form(parse_braid_word("s1^2", 3)));
  EXPECT_THROW(normal_form_from_json(json::parse(R"({"n": 3, "delta_power": 0, "factors": [[1,2]]})")), ParseError);
  EXPECT_THROW(normal_form_from_json(json::parse(R"({"n": 3, "delta_power": 0, "factors": [[1,1,2]]})")), ParseError);
}

TEST(Json, PolynomialRoundTrip) {
  std::mt19937_64 rng(93);
  for (int k = 0; k < 40; ++k) {
    const auto w = random_braid_word(2 + static_cast<int>(rng() % 3), 10, rng);
    for (const auto& p : {jones_polynomial(w), alexander_polynomial(w).poly}) {
      EXPECT_EQ(polynomial_from_json(json::parse(polynomial_to_json(p).dump())), p);
    }
  }
  EXPECT_EQ(polynomial_to_json(jones_polynomial(parse_braid_word("s1^2", 2))), json::parse("[[1, -1], [5, -1]]"));
  EXPECT_THROW(polynomial_from_json(json::parse("[[1]]")), ParseError);
}

TEST(Json, MoveSequenceRoundTrip) {
  std::mt19937_64 rng(94);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_braid_word(2 + static_cast<int>(rng() % 3), 8, rng);
    const auto [end, seq] = scramble(w, 5, rng());
    const auto back = move_sequence_from_json(json::parse(move_sequence_to_json(seq).dump()));
    EXPECT_EQ(back, seq);
    EXPECT_EQ(replay(w, back), end);
  }
  EXPECT_THROW(move_sequence_from_json(json::parse(R"([{"move": "twist", "result_word": {"n": 2, "letters": []}}])")),
               ParseError);
  EXPECT_THROW(move_sequence_from_json(json::parse("{}")), ParseError);
}

TEST(Json, BuiltinTemplatesRoundTrip) {
  for (const auto& t : builtin_templates()) {
    EXPECT_EQ(template_from_json(json::parse(template_to_json(t).dump())), t) << t.name;
  }
}

TEST(Json, RandomTemplatesRoundTrip) {
  std::mt19937_64 rng(95);
  for (int k = 0; k < 200; ++k) {
    Template t;
    t.name = "t" + std::to_string(k);
    const int strands = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < strands; ++i) t.left.strand_weights.push_back(1 + static_cast<int>(rng() % 3));
    t.right.strand_weights = t.left.strand_weights;
    t.left.block_arities = t.right.block_arities = {{"A", 1}, {"B", 2}};
    for (auto* side : {&t.left, &t.right}) {
      const int items = static_cast<int>(rng() % 6);
      for (int i = 0; i < items; ++i) {
        switch (rng() % 3) {
          case 0: side->schema.push_back(SchemaItem::slot("A", 1 + static_cast<int>(rng() % strands))); break;
          case 1: side->schema.push_back(SchemaItem::slot("B", 1 + static_cast<int>(rng() % (strands - 1)))); break;
          default:
            side->schema.push_back(SchemaItem::crossing(1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 ? 1 : -1));
        }
      }
    }
    EXPECT_EQ(template_from_json(json::parse(template_to_json(t).dump())), t);
  }
}

TEST(Json, TemplateValidation) {
  EXPECT_THROW(template_from_json(json::parse(R"({"weights": [1, 1], "left": [{"x": [2, 1]}], "right": [], "blocks": {}})")),
               ParseError);
  EXPECT_THROW(template_from_json(json::parse(R"({"weights": [1, 1], "left": [{"b": "Z"}], "right": [], "blocks": {}})")),
               ParseError);
  const auto t = template_from_json(
      json::parse(R"({"name": "swap", "weights": [1, 1], "left": [{"x": [1, 1]}], "right": [{"x": [1, 1]}], "blocks": {}})"));
  EXPECT_EQ(t.name, "swap");
  EXPECT_EQ(t.left.schema.at(0), SchemaItem::crossing(1, 1));
}
