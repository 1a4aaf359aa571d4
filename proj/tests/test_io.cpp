#include <gtest/gtest.h>

#include <string>

#include "lrsnc/io.hpp"

using namespace lrsnc;

namespace {

TEST(ZeroPattern, ParsesCommentsAndEmptyRows) {
    const auto rows = parse_zero_pattern("# header\n2 4\n\n-\n  1  \n");
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::size_t>{1, 3}));
    EXPECT_TRUE(rows[1].empty());
    EXPECT_EQ(rows[2], std::vector<std::size_t>{0});
}

TEST(ZeroPattern, ErrorsCarryLineNumbers) {
    try {
        parse_zero_pattern("1\n2 x\n");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_zero_pattern("0\n"), parse_error);
    EXPECT_THROW(parse_zero_pattern("# only a comment\n"), parse_error);
}

TEST(ZeroPattern, FormatRoundTrip) {
    const SupportConstraint sc(5, {{1, 3}, {}, {0}});
    EXPECT_EQ(format_zero_pattern(sc), "2 4\n-\n1\n");
    EXPECT_EQ(SupportConstraint(5, parse_zero_pattern(format_zero_pattern(sc))), sc);
}

TEST(Serialization, ConstrainedCodeRoundTrip) {
    const auto F = FieldTower::make(3, 1, 2);
    const auto cc = synthesize(F, OrderedPartition({2, 2}), 2, SupportConstraint(4, {{1}, {0}}));
    const auto text = serialize(cc);
    EXPECT_NE(text.find("[field]"), std::string::npos);
    const auto back = deserialize_constrained_code(text);
    EXPECT_EQ(back.G, cc.G);
    EXPECT_EQ(back.T, cc.T);
    EXPECT_EQ(back.sc, cc.sc);
    EXPECT_EQ(back.code.partition, cc.code.partition);
    EXPECT_EQ(serialize(back), text);
}

TEST(Serialization, SubcodeRoundTrip) {
    const auto F = FieldTower::make(3, 1, 2);
    const auto cc = subcode_generator(F, OrderedPartition({2, 2}), 2, SupportConstraint(4, {{1}, {1}}));
    const auto back = deserialize_constrained_code(serialize(cc));
    EXPECT_EQ(back.G, cc.G);
    EXPECT_TRUE(back.is_subcode());
}

TEST(Serialization, RejectsTamperedGenerator) {
    const auto F = FieldTower::make(3, 1, 2);
    const auto cc = synthesize(F, OrderedPartition({2, 2}), 2, SupportConstraint(4, {{1}, {0}}));
    auto text = serialize(cc);
    const auto pos = text.find("[G]");
    ASSERT_NE(pos, std::string::npos);
    const auto row = text.find('\n', pos) + 1;
    text[row] = text[row] == '1' ? '2' : '1';
    EXPECT_THROW(deserialize_constrained_code(text), parse_error);
    EXPECT_THROW(deserialize_constrained_code("[field]\n3,1\n"), parse_error);
}

TEST(GeneratorCsv, HeaderAndRows) {
    const auto F = FieldTower::make(3, 1, 2);
    Matrix<Elem> G(1, 2, F.one());
    EXPECT_EQ(generator_csv(F, G, OrderedPartition({1, 1})), "# p=3,e=1,m=2,k=1,partition=1 1\n1,1\n");
}

TEST(Json, InstanceRoundTrip) {
    const std::string text = R"({"h":2,"r":[1,2],"S":[[1],[1,2]],"t":1,"rho":0,"ell":2})";
    const auto inst = parse_instance(text);
    EXPECT_EQ(inst.S[1], (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(inst.ell, 2u);
    const auto again = instance_from_json(to_json(inst));
    EXPECT_EQ(again.S, inst.S);
    EXPECT_EQ(again.r, inst.r);
}

TEST(Json, InstanceErrors) {
    EXPECT_THROW(parse_instance("{"), parse_error);
    EXPECT_THROW(parse_instance(R"({"h":1,"r":[1],"S":[[2]]})"), parse_error);
    EXPECT_THROW(parse_instance(R"({"h":2,"r":[1],"S":[[1]]})"), parse_error);
    EXPECT_THROW(parse_instance(R"({"r":[1],"S":[[1]]})"), parse_error);
}

TEST(Json, DesignRoundTrip) {
    NetworkInstance inst;
    inst.h = 2;
    inst.r = {1, 1};
    inst.S = {{0}, {0, 1}};
    inst.t = 0;
    inst.rho = 1;
    inst.ell = 2;
    const auto d = build_distributed_code(inst);
    const auto j = to_json(d);
    EXPECT_EQ(j.at("packet_length").get<std::size_t>(), d.n + d.field.m);
    const auto back = design_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.n_J, d.n_J);
    EXPECT_EQ(back.blocks, d.blocks);
    ASSERT_EQ(back.code.has_value(), d.code.has_value());
    if (d.code) {
        EXPECT_EQ(back.code->G, d.code->G);
    }
}

}  // namespace
