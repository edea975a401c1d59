#include <map>
#include <set>

#include <gtest/gtest.h>

#include "overpart/bijections.hpp"
#include "overpart/enumerate.hpp"
#include "overpart/serialize.hpp"

using namespace overpart;

namespace {

using Group = std::set<std::string>;

// Images of every element of the domain union, grouped by source and branch.
std::map<std::string, std::map<std::string, std::string>> images_by_branch(Theorem t, int n) {
  std::map<std::string, std::map<std::string, std::string>> out;
  for (SourceTag src : domain_sources(t)) {
    for (const auto& pi : family_members(domain_family(t), n - source_offset(src))) {
      if (applicable_branches(t, pi, src).empty()) continue;
      const MapTrace tr = apply_map(t, pi, src, n);
      out[source_name(src) + " " + tr.branch][format(pi)] = format(tr.output);
    }
  }
  return out;
}

Group keys(const std::map<std::string, std::string>& m) {
  Group g;
  for (const auto& [k, v] : m) g.insert(k);
  return g;
}

Group values(const std::map<std::string, std::string>& m) {
  Group g;
  for (const auto& [k, v] : m) g.insert(v);
  return g;
}

}  // namespace

// --- T1 ---------------------------------------------------------------------

TEST(MapT1, SmallArrows) {
  auto tr = map_t1(parse("5,1"), SourceTag::n, 6);
  EXPECT_EQ(tr.branch, "f2");
  EXPECT_EQ(format(tr.output), "5,1o");
  tr = map_t1(parse("5"), SourceTag::n_minus_1, 6);
  EXPECT_EQ(tr.branch, "f3");
  EXPECT_EQ(format(tr.output), "6o");
  tr = map_t1(parse("3,2"), SourceTag::n_minus_1, 6);
  EXPECT_EQ(tr.branch, "f4");
  EXPECT_EQ(format(tr.output), "3,3");
  tr = map_t1(parse("4,2"), SourceTag::n, 6);
  EXPECT_EQ(tr.branch, "f1");
  EXPECT_EQ(format(tr.output), "4,2");
  EXPECT_EQ(tr.target, "PEX");
}

TEST(MapT1, PreconditionErrors) {
  EXPECT_THROW(map_t1(parse("4,1,1"), SourceTag::n, 6), precondition_error);
  EXPECT_THROW(map_t1(parse("5,1"), SourceTag::n, 7), precondition_error);
  EXPECT_THROW(map_t1(parse("5,1"), SourceTag::n_minus_2, 8), precondition_error);
  try {
    map_t1(parse("3,2o,1,1"), SourceTag::n, 7);
    FAIL();
  } catch (const precondition_error& e) {
    EXPECT_NE(std::string(e.what()).find("appears 2 times"), std::string::npos) << e.what();
  }
}

TEST(InvT1, SmallInverses) {
  auto [pi, src] = inv_t1(parse("6o"), 6);
  EXPECT_EQ(format(pi), "5");
  EXPECT_EQ(src, SourceTag::n_minus_1);
  std::tie(pi, src) = inv_t1(parse("2,2,2"), 6);
  EXPECT_EQ(format(pi), "2,2,1");
  EXPECT_EQ(src, SourceTag::n_minus_1);
  std::tie(pi, src) = inv_t1(parse("4,2"), 6);
  EXPECT_EQ(format(pi), "4,2");
  EXPECT_EQ(src, SourceTag::n);
  std::tie(pi, src) = inv_t1(parse("3o,2,1o"), 6);
  EXPECT_EQ(format(pi), "3o,2,1");
  EXPECT_EQ(src, SourceTag::n);
  EXPECT_THROW(inv_t1(parse("5,1"), 6), precondition_error);
  EXPECT_THROW(inv_t1(parse("1o"), 1), precondition_error);
}

TEST(MapT1, SmallGroups) {
  const auto g = images_by_branch(Theorem::t1, 6);
  EXPECT_EQ(keys(g.at("N f1")), (Group{"6", "4,2", "4o,2"}));
  EXPECT_EQ(values(g.at("N f1")), (Group{"6", "4,2", "4o,2"}));
  EXPECT_EQ(keys(g.at("N f2")), (Group{"5,1", "5o,1", "3,2,1", "3o,2,1", "3,2o,1", "3o,2o,1"}));
  EXPECT_EQ(values(g.at("N f2")), (Group{"5,1o", "5o,1o", "3,2,1o", "3o,2,1o", "3,2o,1o", "3o,2o,1o"}));
  EXPECT_EQ(keys(g.at("N-1 f3")), (Group{"5", "4,1", "4o,1"}));
  EXPECT_EQ(values(g.at("N-1 f3")), (Group{"6o", "4,2o", "4o,2o"}));
  EXPECT_EQ(keys(g.at("N-1 f4")), (Group{"3,2", "3o,2", "2,2,1", "2o,2,1"}));
  EXPECT_EQ(values(g.at("N-1 f4")), (Group{"3,3", "3o,3", "2,2,2", "2o,2,2"}));
  EXPECT_EQ(g.size(), 4u);
}

// --- T2 ---------------------------------------------------------------------

TEST(MapT2, SmallArrows) {
  struct Case {
    const char* in;
    SourceTag src;
    const char* branch;
    const char* out;
    const char* target;
  };
  const Case cases[] = {
      {"6,1", SourceTag::n, "A", "6", "PE-copy1"},
      {"5,2", SourceTag::n, "B", "5,1o", "POEX"},
      {"7", SourceTag::n, "C", "6o", "PE-copy2"},
      {"3,2", SourceTag::n_minus_2, "D", "3,3", "POEX"},
      {"2,2,1", SourceTag::n_minus_2, "E", "2,2,2", "PE-copy2"},
  };
  for (const Case& c : cases) {
    const MapTrace tr = map_t2(parse(c.in), c.src, 7);
    EXPECT_EQ(tr.branch, c.branch) << c.in;
    EXPECT_EQ(format(tr.output), c.out) << c.in;
    EXPECT_EQ(tr.target, c.target) << c.in;
  }
}

TEST(MapT2, SmallGroups) {
  const auto g = images_by_branch(Theorem::t2, 7);
  EXPECT_EQ(keys(g.at("N A")), (Group{"6,1", "6o,1", "4,2,1", "4o,2,1", "4,2o,1", "4o,2o,1", "2,2,2,1", "2o,2,2,1"}));
  EXPECT_EQ(values(g.at("N A")), (Group{"6", "6o", "4,2", "4o,2", "4,2o", "4o,2o", "2,2,2", "2o,2,2"}));
  EXPECT_EQ(keys(g.at("N B")), (Group{"5,2", "5o,2"}));
  EXPECT_EQ(values(g.at("N B")), (Group{"5,1o", "5o,1o"}));
  EXPECT_EQ(keys(g.at("N C")), (Group{"7", "4,3", "4o,3"}));
  EXPECT_EQ(values(g.at("N C")), (Group{"6o", "4,2o", "4o,2o"}));
  EXPECT_EQ(keys(g.at("N-2 D")), (Group{"3,2", "3o,2"}));
  EXPECT_EQ(values(g.at("N-2 D")), (Group{"3,3", "3o,3"}));
  EXPECT_EQ(keys(g.at("N-2 E")), (Group{"5", "4,1", "4o,1", "2,2,1", "2o,2,1"}));
  EXPECT_EQ(values(g.at("N-2 E")), (Group{"6", "4,2", "4o,2", "2,2,2", "2o,2,2"}));
}

// --- T3 ---------------------------------------------------------------------

TEST(MapT3, OddArrows) {
  auto tr = map_t3_odd(parse("8,1"), 9);
  EXPECT_EQ(tr.branch, "odd-plain");
  EXPECT_EQ(format(tr.output), "7");
  EXPECT_EQ(tr.target, "SPTKO-N-2");
  EXPECT_TRUE(tr.sign_flip);
  tr = map_t3_odd(parse("6,2o,1"), 9);
  EXPECT_EQ(tr.branch, "odd-overlined");
  EXPECT_EQ(format(tr.output), "6,3");
  EXPECT_EQ(tr.target, "SPTKO-N");
  EXPECT_TRUE(tr.sign_flip);
  EXPECT_EQ(format(map_t3_odd(parse("8o,1"), 9).output), "9");
  EXPECT_EQ(format(map_t3_odd(parse("6,2,1"), 9).output), "6,1");
}

// An s2 value carrying both copies is read through its plain copy, which is
// the part immediately after s in canonical order.
TEST(MapT3, BothCopiesOfS2UsePlainBranch) {
  auto tr = map_t3_odd(parse("4o,4,1"), 9);
  EXPECT_EQ(tr.branch, "odd-plain");
  EXPECT_EQ(format(tr.output), "4o,3");
  tr = map_t3_odd(parse("4,2o,2,1"), 9);
  EXPECT_EQ(format(tr.output), "4,2o,1");
  tr = map_t3_odd(parse("2o,2,2,2,1"), 9);
  EXPECT_EQ(format(tr.output), "2o,2,2,1");
}

TEST(MapT3, EvenArrows) {
  auto tr = map_t3_even(parse("7,2"), SourceTag::n, 9);
  EXPECT_EQ(format(tr.output), "7,1o");
  EXPECT_TRUE(tr.sign_flip);
  EXPECT_EQ(format(map_t3_even(parse("5,4"), SourceTag::n, 9).output), "5,3o");
  tr = map_t3_even(parse("5,2"), SourceTag::n_minus_2, 9);
  EXPECT_EQ(format(tr.output), "5,3");
  EXPECT_EQ(tr.target, "POEX");
  EXPECT_TRUE(tr.sign_flip);
}

TEST(MapT3, PreconditionErrors) {
  EXPECT_THROW(map_t3_odd(parse("6,3"), 9), precondition_error);
  EXPECT_THROW(map_t3_even(parse("8,1"), SourceTag::n, 9), precondition_error);
  EXPECT_THROW(map_t3(parse("7"), SourceTag::n_minus_2, 9), precondition_error);
  EXPECT_THROW(map_t3(parse("6,3,1"), SourceTag::n, 10), precondition_error);
}

TEST(MapT3, SmallGroups) {
  const auto g = images_by_branch(Theorem::t3, 9);
  const auto& plain = g.at("N odd-plain");
  EXPECT_EQ(keys(plain), (Group{"6,2,1", "6o,2,1", "4,4,1", "4o,4,1", "2,2,2,2,1", "2o,2,2,2,1", "8,1", "4,2,2,1",
                                "4o,2,2,1", "4,2o,2,1", "4o,2o,2,1"}));
  EXPECT_EQ(values(plain), (Group{"6,1", "6o,1", "4,3", "4o,3", "2,2,2,1", "2o,2,2,1", "7", "4,2,1", "4o,2,1",
                                  "4,2o,1", "4o,2o,1"}));
  const auto& over = g.at("N odd-overlined");
  EXPECT_EQ(keys(over), (Group{"6,2o,1", "6o,2o,1", "8o,1"}));
  EXPECT_EQ(values(over), (Group{"6,3", "6o,3", "9"}));
  EXPECT_EQ(keys(g.at("N even-N")), (Group{"7,2", "7o,2", "5,4", "5o,4"}));
  EXPECT_EQ(values(g.at("N even-N")), (Group{"7,1o", "7o,1o", "5,3o", "5o,3o"}));
  EXPECT_EQ(keys(g.at("N-2 even-N-2")), (Group{"5,2", "5o,2"}));
  EXPECT_EQ(values(g.at("N-2 even-N-2")), (Group{"5,3", "5o,3"}));
}

// --- T4 ---------------------------------------------------------------------

TEST(MapT4, SmallArrows) {
  auto tr = map_t4(parse("9"), SourceTag::n, 9, Variant::e);
  EXPECT_EQ(format(tr.output), "8o");
  EXPECT_EQ(tr.target, "PE");
  tr = map_t4(parse("6,2,1"), SourceTag::n, 9, Variant::e);
  EXPECT_EQ(tr.branch, "CaseII-N-s1");
  EXPECT_EQ(format(tr.output), "6,2");
  tr = map_t4(parse("4,2,1"), SourceTag::n_minus_2, 9, Variant::e);
  EXPECT_EQ(format(tr.output), "4,2,2");
  EXPECT_EQ(tr.target, "PE");
}

TEST(MapT4, MirroredVariant) {
  const MapTrace tr = map_t4(parse("7,2"), SourceTag::n, 9, Variant::o);
  EXPECT_EQ(tr.branch, "CaseI-N");
  EXPECT_EQ(format(tr.output), "7,1o");
  EXPECT_EQ(tr.target, "CE");
  EXPECT_TRUE(tr.sign_flip);
  EXPECT_THROW(map_t4(parse("7,2"), SourceTag::n, 9, Variant::e), precondition_error);
}

TEST(MapT4, SmallGroups) {
  const auto g = images_by_branch(Theorem::t4e, 9);
  EXPECT_EQ(keys(g.at("N CaseII-N-s1")),
            (Group{"6,2,1", "6o,2,1", "6,2o,1", "6o,2o,1", "4,4,1", "4o,4,1", "2,2,2,2,1", "2o,2,2,2,1"}));
  EXPECT_EQ(values(g.at("N CaseII-N-s1")),
            (Group{"6,2", "6o,2", "6,2o", "6o,2o", "4,4", "4o,4", "2,2,2,2", "2o,2,2,2"}));
  EXPECT_EQ(keys(g.at("N CaseII-N")), (Group{"9"}));
  EXPECT_EQ(values(g.at("N CaseII-N")), (Group{"8o"}));
  EXPECT_EQ(keys(g.at("N-2 CaseII-N-2")), (Group{"7", "4,2,1", "4o,2,1", "4,2o,1", "4o,2o,1"}));
  EXPECT_EQ(values(g.at("N-2 CaseII-N-2")), (Group{"8", "4,2,2", "4o,2,2", "4,2o,2", "4o,2o,2"}));
  EXPECT_EQ(g.size(), 3u);
}

// --- shared -----------------------------------------------------------------

TEST(Branches, ExactlyOneGuardPerDomainElement) {
  for (Theorem t : {Theorem::t1, Theorem::t2, Theorem::t4e, Theorem::t4o}) {
    for (int n = 3; n <= 18; ++n)
      for (SourceTag src : domain_sources(t))
        for (const auto& pi : family_members(domain_family(t), n - source_offset(src)))
          ASSERT_EQ(applicable_branches(t, pi, src).size(), 1u) << theorem_name(t) << " " << format(pi);
  }
}

TEST(MapTrace, JsonRoundTrip) {
  for (int n = 3; n <= 12; ++n)
    for (const auto& pi : family_members({FamilyId::sptko, 1}, n)) {
      if (applicable_branches(Theorem::t2, pi, SourceTag::n).empty()) continue;
      const MapTrace tr = map_t2(pi, SourceTag::n, n);
      const auto j = to_json(tr);
      ASSERT_EQ(map_trace_from_json(nlohmann::json::parse(j.dump())), tr);
    }
  const auto j = to_json(map_t1(parse("5,1"), SourceTag::n, 6));
  EXPECT_EQ(j.dump(),
            R"({"branch":"f2","input":"5,1","output":"5,1o","signFlip":false,"sourceTag":"N","targetTag":"PEX","theorem":"T1"})");
}
