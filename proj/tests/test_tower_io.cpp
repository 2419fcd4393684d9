#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "kneserlab/error.hpp"
#include "kneserlab/tower_io.hpp"

using namespace kneserlab;
using nlohmann::json;

namespace {

json spec_of(const std::string& description) { return json::parse(tower_to_json(*build_tower(description)).dump()); }

// Message of the Parse error raised for j, or "" when it parses.
std::string parse_error(const json& j) {
  try {
    tower_spec_from_json(j);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse) << e.what();
    return e.what();
  }
  return "";
}

}  // namespace

TEST(TowerIo, RoundTripKeepsTheHash) {
  for (const char* d : {"gf:2:4", "gf:3:3", "gf:2:5:x^5+x^2+1", "insep:2:t", "insep:3:t", "insep:2:t,s:x^2+x+1"}) {
    const TowerPtr a = build_tower(d);
    const TowerPtr b = tower_from_json(json::parse(tower_to_json(*a).dump()));
    EXPECT_EQ(a->hash(), b->hash()) << d;
    EXPECT_EQ(a->canonical_text(), b->canonical_text()) << d;
    EXPECT_EQ(a->spec().labels, b->spec().labels) << d;
  }
}

TEST(TowerIo, ExplicitSigmaSurvives) {
  json j = spec_of("gf:2:3");
  j["sigma"] = {"1", "0", "1"};
  const TowerPtr t = tower_from_json(j);
  ASSERT_EQ(t->default_sigma().size(), 3u);
  EXPECT_FALSE(t->default_sigma()[0].is_zero());
  EXPECT_TRUE(t->default_sigma()[1].is_zero());
  EXPECT_EQ(tower_to_json(*t)["sigma"], json({"1", "0", "1"}));
}

TEST(TowerIo, MalformedFieldsAreNamed) {
  const json good = spec_of("gf:2:3");
  json j = good;
  j.erase("dim");
  EXPECT_NE(parse_error(j).find("'dim'"), std::string::npos);

  j = good;
  j["base"]["kind"] = "octonion";
  EXPECT_NE(parse_error(j).find("'base.kind'"), std::string::npos);

  j = good;
  j["base"]["p"] = -2;
  EXPECT_NE(parse_error(j).find("'base.p'"), std::string::npos);

  j = good;
  j["tensor"][1][2][0] = true;
  EXPECT_NE(parse_error(j).find("'tensor[1][2][0]'"), std::string::npos);

  j = good;
  j["tensor"][2].erase(0);
  EXPECT_NE(parse_error(j).find("'tensor[2]'"), std::string::npos);

  j = good;
  j["labels"] = {"1", "a"};
  EXPECT_NE(parse_error(j).find("'labels'"), std::string::npos);

  j = good;
  j["sigma"] = {"1", "0", "x"};
  EXPECT_NE(parse_error(j).find("'sigma[2]'"), std::string::npos);

  EXPECT_NE(parse_error(json::array()).find("'(root)'"), std::string::npos);
  EXPECT_EQ(parse_error(good), "");
}

TEST(TowerIo, InvariantBreakIsNotAParseError) {
  json j = spec_of("gf:2:3");
  j["tensor"][0][0] = {"0", "1", "0"};  // 1 * 1 = a
  try {
    tower_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TowerInvariant) << e.what();
  }
}

TEST(TowerIo, FilesResolveByExtension) {
  const std::string path = testing::TempDir() + "kneserlab_tower_io.json";
  {
    std::ofstream out(path);
    out << tower_to_json(*build_tower("gf:2:4")).dump(2);
  }
  const TowerPtr t = resolve_tower(path);
  EXPECT_EQ(t->hash(), build_tower("gf:2:4")->hash());
  EXPECT_EQ(resolve_tower("gf:2:4")->dim(), 4u);
  std::remove(path.c_str());
  EXPECT_THROW(resolve_tower(path), Error);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    load_tower_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
  std::remove(path.c_str());
}
