#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "skewdyck/path.hpp"

using namespace skewdyck;

namespace {

constexpr auto U = StepL2R::Up;
constexpr auto D = StepL2R::DownBlack;
constexpr auto d = StepL2R::DownRed;

// The ten decorated drawings of length 6 (every skew shape of that length).
const std::vector<Path> kAllLength6 = {
    Path::l2r({U, U, U, D, D, D}), Path::l2r({U, U, U, D, D, d}),
    Path::l2r({U, U, U, D, d, D}), Path::l2r({U, U, U, D, d, d}),
    Path::l2r({U, U, D, D, U, D}), Path::l2r({U, D, U, U, D, D}),
    Path::l2r({U, D, U, U, D, d}), Path::l2r({U, U, D, U, D, D}),
    Path::l2r({U, U, D, U, D, d}), Path::l2r({U, D, U, D, U, D}),
};

// Every length-n step sequence in the given model.
std::vector<Path> all_sequences(Model m, std::size_t n) {
    std::vector<Path> out{Path(m)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Path> next;
        next.reserve(out.size() * 3);
        for (const Path& p : out) {
            for (std::uint8_t k = 0; k < 3; ++k) {
                Path q = p;
                q.push(k);
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("validate accepts the figure paths") {
    Path p = Path::l2r({U, U, D, D});
    CHECK(validate(p, PeakPolicy::ForbidLevel1Peaks).ok);
    for (const Path& q : kAllLength6) CHECK(validate(q, PeakPolicy::AllowAll).ok);
}

TEST_CASE("validate flags the unique length-2 peak") {
    ValidationResult r = validate(Path::l2r({U, D}), PeakPolicy::ForbidLevel1Peaks);
    CHECK_FALSE(r.ok);
    CHECK(r.index == 1);
    CHECK(r.reason == ViolationReason::PeakAtLevelOne);
    CHECK(validate(Path::l2r({U, D}), PeakPolicy::AllowAll).ok);
}

TEST_CASE("validate flags forbidden adjacencies in both models") {
    ValidationResult r = validate(Path::l2r({U, U, d}), PeakPolicy::AllowAll);
    CHECK_FALSE(r.ok);
    CHECK(r.index == 2);
    CHECK(r.reason == ViolationReason::ForbiddenPattern);
    r = validate(Path::l2r({U, U, d}), PeakPolicy::ForbidLevel1Peaks);
    CHECK((!r.ok && r.index == 2 && r.reason == ViolationReason::ForbiddenPattern));

    // red-then-up
    r = validate(Path::l2r({U, U, D, d, U}), PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 4 && r.reason == ViolationReason::ForbiddenPattern));

    // dual: blue-then-down and down-then-blue
    r = validate(Path::r2l({StepR2L::UpBlue, StepR2L::Down}), PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 1 && r.reason == ViolationReason::ForbiddenPattern));
    r = validate(Path::r2l({StepR2L::UpBlack, StepR2L::UpBlack, StepR2L::Down, StepR2L::UpBlue}),
                 PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 3 && r.reason == ViolationReason::ForbiddenPattern));
}

TEST_CASE("validate flags the dual level-1 peak only without the dashed edge") {
    Path p = Path::r2l({StepR2L::UpBlack, StepR2L::Down});
    CHECK(validate(p, PeakPolicy::AllowAll).ok);
    ValidationResult r = validate(p, PeakPolicy::ForbidLevel1Peaks);
    CHECK((!r.ok && r.index == 1 && r.reason == ViolationReason::PeakAtLevelOne));

    // a down into level 0 that does not close a peak is fine
    Path q = Path::r2l({StepR2L::UpBlack, StepR2L::UpBlack, StepR2L::Down, StepR2L::Down});
    CHECK(validate(q, PeakPolicy::ForbidLevel1Peaks).ok);
}

TEST_CASE("validate flags dips below the axis") {
    ValidationResult r = validate(Path::l2r({D}), PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 0 && r.reason == ViolationReason::BelowLevelZero));
    r = validate(Path::l2r({U, D, D}), PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 2 && r.reason == ViolationReason::BelowLevelZero));
    r = validate(Path::r2l({StepR2L::Down}), PeakPolicy::AllowAll);
    CHECK((!r.ok && r.index == 0 && r.reason == ViolationReason::BelowLevelZero));
}

TEST_CASE("final level") {
    CHECK(final_level(Path(Model::LeftToRight)) == 0);
    CHECK(final_level(Path::l2r({U, U, D})) == 1);
    CHECK(final_level(Path::l2r({U, U, U, D, d})) == 1);
    CHECK(final_level(Path::r2l({StepR2L::UpBlue, StepR2L::UpBlack})) == 2);
}

TEST_CASE("decorated_to_skew walks the three step kinds") {
    PointSequence pts = decorated_to_skew(Path::l2r({U, D}));
    PointSequence want{{0, 0}, {1, 1}, {2, 0}};
    CHECK(pts == want);

    // the shape with two skew steps from the length-6 figure
    pts = decorated_to_skew(Path::l2r({U, U, U, D, d, d}));
    want = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 2}, {3, 1}, {2, 0}};
    CHECK(pts == want);

    CHECK_THROWS_AS(decorated_to_skew(Path::r2l({StepR2L::UpBlack})), std::invalid_argument);
}

TEST_CASE("self-intersection is an edge property") {
    CHECK_FALSE(is_self_intersecting(decorated_to_skew(Path::l2r({U, D}))));
    for (const Path& q : kAllLength6) {
        CHECK_FALSE(is_self_intersecting(decorated_to_skew(q)));
    }
    // up, up, red-down doubles back over the same unit segment
    PointSequence doubled = decorated_to_skew(Path::l2r({U, U, d, U}));
    CHECK(is_self_intersecting(doubled));
}

TEST_CASE("drawing bijection at small lengths") {
    // validate (with the dashed edge) accepts exactly the step sequences whose
    // skew drawing stays weakly above the axis and never repeats an edge
    for (std::size_t n = 0; n <= 9; ++n) {
        std::size_t accepted = 0, closed = 0;
        std::set<PointSequence> drawings;
        for (const Path& p : all_sequences(Model::LeftToRight, n)) {
            bool lhs = validate(p, PeakPolicy::AllowAll).ok;
            bool rhs = prefix_nonnegative(p) && !is_self_intersecting(decorated_to_skew(p));
            CHECK(lhs == rhs);
            if (lhs) {
                ++accepted;
                drawings.insert(decorated_to_skew(p));
                if (final_level(p) == 0) ++closed;
            }
        }
        CHECK(accepted == drawings.size());
        if (n == 6) CHECK(closed == 10);  // the classic length-6 census
    }
}

TEST_CASE("validate is prefix monotone") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (Model m : {Model::LeftToRight, Model::RightToLeft}) {
            for (PeakPolicy pol : {PeakPolicy::AllowAll, PeakPolicy::ForbidLevel1Peaks}) {
                for (const Path& p : all_sequences(m, n)) {
                    if (!validate(p, pol).ok) continue;
                    Path prefix(m);
                    for (std::size_t i = 0; i < p.size(); ++i) {
                        prefix.push(p.kind(i));
                        CHECK(validate(prefix, pol).ok);
                    }
                    CHECK(final_level(p) >= 0);
                    CHECK((final_level(p) - static_cast<long>(n)) % 2 == 0);
                }
            }
        }
    }
}
