#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

#include "qap/cli.h"
#include "qap/partition.h"
#include "su8_tables.h"
#include "test_support.h"

using namespace qap;
using qap::testing::kTables;
using qap::testing::set_of;
using qap::testing::Table;

namespace {

using RowSet = std::set<std::tuple<SpinorSet, SpinorSet, SpinorSet>>;

RowSet reference_rows(const Table &t) {
    RowSet out;
    for (const auto &r : t.rows) out.insert({set_of(3, r.w), set_of(3, r.w_hat), set_of(3, r.b)});
    return out;
}

RowSet computed_rows(const QAPartition &q) {
    RowSet out;
    for (uint32_t i = 1; i < 8; i++) out.insert({q.cell(i, 1), q.cell(i, 0), q.group()[i].elements()});
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpinorSet scan_spinors(const std::string &text) {
    static const std::regex re(R"((i·)?S\[([01]+)\|([01]+)\])");
    std::vector<Spinor> out;
    for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) {
        Spinor s(BitWord::from_string((*it)[2].str()), BitWord::from_string((*it)[3].str()));
        EXPECT_EQ((*it)[1].matched, self_parity(s)) << s.str();
        out.push_back(s);
    }
    return SpinorSet(3, out);
}

std::string fixture_path(const Table &t) {
    return std::string(QAP_FIXTURE_DIR) + "/" + t.fixture + ".txt";
}

}  // namespace

class Golden : public ::testing::TestWithParam<size_t> {};

TEST_P(Golden, CenterAndRowsMatchReference) {
    const auto &t = kTables[GetParam()];
    auto c = parse_label(t.label);
    EXPECT_EQ(c.base(), set_of(3, t.center));
    auto q = build_qap(c);
    EXPECT_EQ(computed_rows(q), reference_rows(t));
    std::set<SpinorSet> bs, want;
    for (uint32_t i = 0; i < 8; i++) bs.insert(q.group()[i].elements());
    want.insert(c.base());
    for (const auto &r : t.rows) want.insert(set_of(3, r.b));
    EXPECT_EQ(bs, want);
}

TEST_P(Golden, FixtureTextIsStable) {
    const auto &t = kTables[GetParam()];
    cli::RunConfig cfg;
    cfg.label = t.label;
    auto res = cli::cmd_table(cfg);
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, read_file(fixture_path(t)));
}

TEST_P(Golden, FixtureTextCarriesReferenceRows) {
    const auto &t = kTables[GetParam()];
    std::istringstream in(read_file(fixture_path(t)));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, t.label);
    std::getline(in, line);
    EXPECT_EQ(line.rfind("C: ", 0), 0u);
    EXPECT_EQ(scan_spinors(line), set_of(3, t.center));
    std::map<int, std::pair<SpinorSet, SpinorSet>> pairs;
    std::map<int, SpinorSet> bs;
    static const std::regex row(R"(B_(\d) \| W: (.*) \| Ŵ: (.*))");
    static const std::regex blist(R"(B_(\d) = \{(.*)\})");
    while (std::getline(in, line)) {
        std::smatch m;
        if (std::regex_match(line, m, row)) {
            pairs[std::stoi(m[1])] = {scan_spinors(m[2]), scan_spinors(m[3])};
        } else if (std::regex_match(line, m, blist)) {
            bs[std::stoi(m[1])] = scan_spinors(m[2]);
        } else {
            ADD_FAILURE() << "unexpected line: " << line;
        }
    }
    ASSERT_EQ(pairs.size(), 7u);
    ASSERT_EQ(bs.size(), 7u);
    RowSet got;
    for (auto &[i, pr] : pairs) got.insert({pr.first, pr.second, bs.at(i)});
    EXPECT_EQ(got, reference_rows(t));
}

INSTANTIATE_TEST_SUITE_P(Su8, Golden, ::testing::Values(0, 1, 2, 3), [](const auto &info) {
    return std::string(kTables[info.param].fixture);
});

TEST(GoldenJson, CellKeys) {
    auto q = build_qap(parse_label("C^{110}_{[001,100]}"));
    auto js = cli::render_table_json(q);
    EXPECT_NE(js.find("\"B:0/eps:1\""), std::string::npos);
    EXPECT_NE(js.find("\"B:7/eps:0\""), std::string::npos);
    EXPECT_NE(js.find("\"C^{110}_{[001,100]}\""), std::string::npos);
}
