#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "orlicz/conditions.hpp"
#include "orlicz/corpus.hpp"

using namespace orlicz;

TEST(Corpus, SizesAndNames) {
    EXPECT_EQ(function_corpus().size(), 12u);
    EXPECT_EQ(interval_corpus().size(), 6u);
    std::set<std::string> names;
    for (const auto& e : function_corpus()) names.insert(e.name);
    for (const auto& e : interval_corpus()) names.insert(e.name);
    EXPECT_EQ(names.size(), 18u);
    EXPECT_TRUE(find_corpus("gauss2"));
    EXPECT_TRUE(find_corpus("i_x075"));
    EXPECT_FALSE(find_corpus("missing"));
}

TEST(Corpus, GradientsMatchDifferences) {
    for (const auto* c : {&function_corpus(), &interval_corpus()})
        for (const auto& e : *c) {
            e.box.validate();
            const auto g = check_gradient(e.u, e.box);
            EXPECT_TRUE(g.consistent) << e.name << " worst " << g.worst;
        }
    for (int n : {2, 3})
        for (const auto& u : bump_corpus(n)) EXPECT_TRUE(check_gradient(u, BoxDomain::unit(n)).consistent) << u.label;
}

TEST(Corpus, IntervalFunctionsVanishAtZero) {
    for (const auto& e : interval_corpus()) {
        EXPECT_EQ(e.box.n, 1) << e.name;
        EXPECT_NEAR(e.u.value({0.0, 0.0, 0.0}), 0.0, 1e-15) << e.name;
    }
}

TEST(Corpus, BumpsVanishOnBoundary) {
    for (int n : {2, 3})
        for (const auto& u : bump_corpus(n))
            for (double s : {0.1, 0.5, 0.9}) {
                EXPECT_NEAR(u.value({0.0, s, s}), 0.0, 1e-14) << u.label;
                EXPECT_NEAR(u.value({s, 1.0, s}), 0.0, 1e-14) << u.label;
            }
    EXPECT_THROW(bump_corpus(4), std::invalid_argument);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Golden, ZygmundTables) {
    for (auto ex : {ZygmundExample::zygmund, ZygmundExample::zygmund2, ZygmundExample::classical}) {
        const std::string path = std::string(ORLICZ_GOLDEN_DIR) + "/" + to_string(ex) + ".csv";
        const std::string want = slurp(path);
        ASSERT_FALSE(want.empty()) << path;
        EXPECT_EQ(zygmund_csv(ex, default_zygmund_sweep(ex)), want) << path;
    }
}
