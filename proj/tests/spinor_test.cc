#include <gtest/gtest.h>

#include "qap/errors.h"
#include "qap/spinor.h"
#include "test_support.h"

using namespace qap;
using qap::testing::Cx;
using qap::testing::Mat;
using qap::testing::sp;

namespace {

bool same(const ExactMatrix &a, const Mat &b) {
    if (a.dim() != b.n) return false;
    for (size_t r = 0; r < b.n; r++)
        for (size_t c = 0; c < b.n; c++)
            if (a.at(r, c).re != b.at(r, c).real() || a.at(r, c).im != b.at(r, c).imag()) return false;
    return true;
}

}  // namespace

TEST(Spinor, TextAndCode) {
    auto s = Spinor::parse("S[101|001]");
    EXPECT_EQ(s.zeta().str(), "101");
    EXPECT_EQ(s.alpha().str(), "001");
    EXPECT_EQ(s.str(), "S[101|001]");
    EXPECT_EQ(Spinor::from_code(3, s.code()), s);
    EXPECT_THROW(Spinor::parse("S[10|001]"), ContractError);
    EXPECT_THROW(Spinor::parse("101|001"), ContractError);
    EXPECT_EQ(sp("100", "100").display(), "i·S[100|100]");
    EXPECT_EQ(sp("101", "111").display(), "S[101|111]");
    EXPECT_EQ(PhasedSpinor(3, sp("1", "1")).str(), "-i·S[1|1]");
}

TEST(Spinor, OrderIsAlphaThenZeta) {
    EXPECT_LT(sp("111", "000"), sp("000", "001"));
    EXPECT_LT(sp("010", "001"), sp("011", "001"));
    auto all = qap::testing::all_spinors(3);
    for (size_t k = 1; k < all.size(); k++) {
        ASSERT_LT(all[k - 1], all[k]);
        ASSERT_LT(all[k - 1].code(), all[k].code());
    }
}

TEST(Spinor, BiAdd) {
    auto s = sp("110", "011");
    EXPECT_EQ(bi_add(Spinor::identity(3), s), s);
    EXPECT_TRUE(bi_add(s, s).is_identity());
    EXPECT_EQ(bi_add(sp("101", "001"), sp("100", "010")), sp("001", "011"));
    EXPECT_THROW(bi_add(sp("1", "0"), sp("10", "00")), ContractError);
}

TEST(Spinor, Product) {
    auto t = sp("011", "110");
    EXPECT_EQ(product(Spinor::identity(3), t), PhasedSpinor(t));
    EXPECT_EQ(product(sp("001", "010"), sp("010", "001")), PhasedSpinor(2, sp("011", "011")));
    EXPECT_EQ(product(sp("100", "100"), sp("100", "100")), PhasedSpinor(2, Spinor::identity(3)));
}

TEST(Spinor, Commutes) {
    auto s = sp("101", "011");
    EXPECT_TRUE(commutes(s, s));
    EXPECT_FALSE(commutes(sp("001", "001"), sp("000", "001")));
    const char *ex1[][2] = {{"000", "000"}, {"001", "000"}, {"010", "000"}, {"011", "000"},
                            {"100", "100"}, {"101", "100"}, {"110", "100"}, {"111", "100"}};
    for (auto &a : ex1)
        for (auto &b : ex1) EXPECT_TRUE(commutes(sp(a[0], a[1]), sp(b[0], b[1])));
}

TEST(Spinor, SelfParityAndTranspose) {
    EXPECT_FALSE(self_parity(Spinor::identity(3)));
    EXPECT_TRUE(self_parity(sp("100", "100")));
    EXPECT_FALSE(self_parity(sp("101", "111")));
    EXPECT_EQ(transpose(sp("100", "100")), PhasedSpinor(2, sp("100", "100")));
    for (const auto &s : qap::testing::all_spinors(2)) {
        auto m = to_matrix(s);
        ASSERT_EQ(m.transpose(), to_matrix(transpose(s)));
    }
}

TEST(Spinor, MatrixExamples) {
    auto id = to_matrix(sp("0", "0"));
    EXPECT_EQ(id, ExactMatrix::identity(2));
    auto x = to_matrix(sp("0", "1"));
    EXPECT_EQ(x.at(0, 1), (GaussInt{1, 0}));
    EXPECT_EQ(x.at(1, 0), (GaussInt{1, 0}));
    EXPECT_EQ(x.at(0, 0), (GaussInt{0, 0}));
    auto y = to_matrix(sp("1", "1"));
    EXPECT_EQ(y.at(0, 1), (GaussInt{1, 0}));
    EXPECT_EQ(y.at(1, 0), (GaussInt{-1, 0}));
    EXPECT_THROW(to_matrix(Spinor::identity(7)), ResourceError);
}

TEST(Spinor, HermitianNormalization) {
    for (const auto &s : qap::testing::all_spinors(3)) {
        auto h = to_matrix(s, true);
        ASSERT_EQ(h, h.adjoint()) << s.str();
    }
}

TEST(Spinor, MatrixAgreesWithKroneckerOracle) {
    for (int p = 1; p <= 3; p++)
        for (const auto &s : qap::testing::all_spinors(p))
            for (int ph = 0; ph < 4; ph++)
                ASSERT_TRUE(same(to_matrix(PhasedSpinor(ph, s)), qap::testing::spinor_matrix(PhasedSpinor(ph, s))));
}

TEST(Spinor, ProductCommutesAndBiAddAgreeWithMatrices) {
    using namespace qap::testing;
    for (int p = 1; p <= 3; p++) {
        auto all = all_spinors(p);
        std::vector<Mat> mats;
        for (const auto &s : all) mats.push_back(spinor_matrix(p, s.zeta_bits(), s.alpha_bits()));
        for (size_t i = 0; i < all.size(); i++)
            for (size_t j = 0; j < all.size(); j++) {
                Mat st = mul(mats[i], mats[j]), ts = mul(mats[j], mats[i]);
                auto pr = product(all[i], all[j]);
                ASSERT_EQ(spinor_matrix(pr), st);
                ASSERT_EQ(pr.body, bi_add(all[i], all[j]));
                bool c = is_zero(add(st, scale(ts, -1)));
                bool a = is_zero(add(st, ts));
                ASSERT_EQ(commutes(all[i], all[j]), c);
                ASSERT_EQ(!commutes(all[i], all[j]), a);
            }
    }
}

TEST(Spinor, CommutingPairsCommuteWithTheirSum) {
    auto all = qap::testing::all_spinors(3);
    for (const auto &s : all)
        for (const auto &t : all) {
            if (!commutes(s, t)) continue;
            auto u = bi_add(s, t);
            ASSERT_TRUE(commutes(u, s));
            ASSERT_TRUE(commutes(u, t));
        }
}

TEST(Spinor, BiAddIsAGroup) {
    auto all = qap::testing::all_spinors(2);
    for (const auto &a : all)
        for (const auto &b : all) {
            ASSERT_EQ(bi_add(a, b), bi_add(b, a));
            for (const auto &c : all) ASSERT_EQ(bi_add(bi_add(a, b), c), bi_add(a, bi_add(b, c)));
        }
}
