#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skewdyck/counting.hpp"

using namespace skewdyck;

namespace {

std::vector<std::string> letters_of(const std::vector<Path>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const Path& p : ps) out.push_back(p.letters());
    return out;
}

}  // namespace

TEST_CASE("automaton edges at the boundary") {
    Automaton allow(Model::LeftToRight, PeakPolicy::AllowAll);
    Automaton forbid(Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks);
    std::uint8_t F = 0, G = 1, H = 2;

    // dashed edge from the up-entered level-1 state into level 0
    auto t = allow.next(State{F, 1}, static_cast<std::uint8_t>(StepL2R::DownBlack));
    REQUIRE(t.has_value());
    CHECK(*t == State{G, 0});
    CHECK_FALSE(forbid.next(State{F, 1}, static_cast<std::uint8_t>(StepL2R::DownBlack)).has_value());

    // red layer: down-edges land in H, black-edges leave H into G
    t = forbid.next(State{G, 3}, static_cast<std::uint8_t>(StepL2R::DownRed));
    CHECK(*t == State{H, 2});
    t = forbid.next(State{H, 3}, static_cast<std::uint8_t>(StepL2R::DownRed));
    CHECK(*t == State{H, 2});
    t = forbid.next(State{H, 3}, static_cast<std::uint8_t>(StepL2R::DownBlack));
    CHECK(*t == State{G, 2});
    CHECK_FALSE(forbid.next(State{H, 3}, static_cast<std::uint8_t>(StepL2R::Up)).has_value());
    CHECK_FALSE(forbid.next(State{F, 3}, static_cast<std::uint8_t>(StepL2R::DownRed)).has_value());

    // dual model
    Automaton dual(Model::RightToLeft, PeakPolicy::ForbidLevel1Peaks);
    Automaton dual_allow(Model::RightToLeft, PeakPolicy::AllowAll);
    std::uint8_t A = 0, B = 1, C = 2;
    CHECK(*dual.next(State{B, 0}, static_cast<std::uint8_t>(StepR2L::UpBlack)) == State{A, 1});
    CHECK(*dual.next(State{A, 0}, static_cast<std::uint8_t>(StepR2L::UpBlue)) == State{C, 1});
    CHECK(*dual.next(State{B, 2}, static_cast<std::uint8_t>(StepR2L::Down)) == State{B, 1});
    CHECK_FALSE(dual.next(State{C, 2}, static_cast<std::uint8_t>(StepR2L::Down)).has_value());
    CHECK_FALSE(dual.next(State{B, 2}, static_cast<std::uint8_t>(StepR2L::UpBlue)).has_value());
    CHECK_FALSE(dual.next(State{A, 1}, static_cast<std::uint8_t>(StepR2L::Down)).has_value());
    CHECK(dual_allow.next(State{A, 1}, static_cast<std::uint8_t>(StepR2L::Down)).has_value());
    CHECK(dual.next(State{B, 1}, static_cast<std::uint8_t>(StepR2L::Down)).has_value());
}

TEST_CASE("enumerate reproduces the length-6 censuses") {
    auto forbid6 = enumerate(6, 0, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks);
    std::vector<std::string> want = {"UUUDDD", "UUUDDd", "UUUDdD", "UUUDdd", "UUDUDD", "UUDUDd"};
    CHECK(letters_of(forbid6) == want);

    CHECK(enumerate(6, 0, Model::LeftToRight, PeakPolicy::AllowAll).size() == 10);

    auto dual6 = enumerate(6, 0, Model::RightToLeft, PeakPolicy::ForbidLevel1Peaks);
    std::vector<std::string> want_dual = {"uuDuDD", "uuuDDD", "ubuDDD", "buDuDD", "buuDDD", "bbuDDD"};
    CHECK(letters_of(dual6) == want_dual);
}

TEST_CASE("enumerate edge cases") {
    CHECK(enumerate(2, 0, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks).empty());
    auto empty = enumerate(0, 0, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);
    CHECK(enumerate(3, 5, Model::LeftToRight, PeakPolicy::AllowAll).empty());
    CHECK_THROWS_AS(enumerate(17, 0, Model::LeftToRight, PeakPolicy::AllowAll),
                    std::invalid_argument);
    CHECK(enumerate(17, 1, Model::LeftToRight, PeakPolicy::AllowAll, 17).size() > 0);
}

TEST_CASE("count table boundary entries") {
    CountTable t(Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks, 8, 8);
    CHECK(t.layer_count(0, 0, 0) == 1);
    CHECK(t.layer_count(0, 0, 1) == 0);
    CHECK(t.layer_count(0, 0, 2) == 0);
    for (long j = 1; j <= 8; ++j) CHECK(t.count(0, j) == 0);
    CHECK(t.count(6, 0) == 6);
    CHECK(t.count(8, 0) == 22);
    // switching the closing step between black and red is a bijection
    CHECK(t.layer_count(4, 0, 1) == 1);  // G
    CHECK(t.layer_count(4, 0, 2) == 1);  // H
    CHECK(t.layer_count(4, 0, 0) == 0);  // F holds only the empty path at level 0

    for (long n = 0; n <= 8; ++n) {
        for (long j = 0; j <= 8; ++j) {
            if ((n - j) % 2 != 0) CHECK(t.count(n, j) == 0);
        }
    }

    CountTable allow(Model::LeftToRight, PeakPolicy::AllowAll, 6, 6);
    CHECK(allow.count(6, 0) == 10);
}

TEST_CASE("count and count_open fixtures") {
    CHECK(count(8, 0, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks) == 22);
    CHECK(count(1, 1, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks) == 1);
    CHECK(count(3, 1, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks) == 1);
    CHECK(count(6, 0, Model::RightToLeft, PeakPolicy::ForbidLevel1Peaks) == 6);
    CHECK(count_open(5, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks) == 8);
    CHECK(count_open(0, Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks) == 1);
    CHECK(count_open(4, Model::RightToLeft, PeakPolicy::ForbidLevel1Peaks) == 24);
}

TEST_CASE("enumeration agrees with the table everywhere") {
    for (Model m : {Model::LeftToRight, Model::RightToLeft}) {
        for (PeakPolicy pol : {PeakPolicy::AllowAll, PeakPolicy::ForbidLevel1Peaks}) {
            CountTable t(m, pol, 14, 14);
            for (long n = 0; n <= 14; ++n) {
                for (long j = 0; j <= n; ++j) {
                    auto paths = enumerate(n, j, m, pol);
                    CHECK(BigInt(paths.size()) == t.count(n, j));
                    if (n > 10) continue;  // validate each path only at small sizes
                    for (const Path& p : paths) {
                        CHECK(validate(p, pol).ok);
                        CHECK(final_level(p) == j);
                    }
                }
            }
        }
    }
}

TEST_CASE("closing-step color swap keeps level-0 counts balanced") {
    CountTable t(Model::LeftToRight, PeakPolicy::ForbidLevel1Peaks, 20, 20);
    for (long n = 2; n <= 20; n += 2) {
        CHECK(t.layer_count(n, 0, 1) == t.layer_count(n, 0, 2));
    }
}

TEST_CASE("level truncation is exact where no path can reach the cut") {
    for (Model m : {Model::LeftToRight, Model::RightToLeft}) {
        for (PeakPolicy pol : {PeakPolicy::AllowAll, PeakPolicy::ForbidLevel1Peaks}) {
            CountTable full(m, pol, 12, 24);
            CountTable square(m, pol, 12, 12);
            CountTable cut(m, pol, 12, 5);
            for (long n = 0; n <= 12; ++n) {
                for (long j = 0; j <= 12; ++j) {
                    CHECK(square.layer_count(n, j, 0) == full.layer_count(n, j, 0));
                    CHECK(square.layer_count(n, j, 1) == full.layer_count(n, j, 1));
                    CHECK(square.layer_count(n, j, 2) == full.layer_count(n, j, 2));
                    if ((n + j) / 2 <= 5) {
                        CHECK(cut.count(n, j) == full.count(n, j));
                    }
                }
            }
        }
    }
}
