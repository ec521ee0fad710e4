#ifndef SKEWDYCK_PATH_HPP
#define SKEWDYCK_PATH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace skewdyck {

enum class Model : std::uint8_t { LeftToRight, RightToLeft };

// The dashed edge of the state diagram: present (AllowAll) models every
// decorated path, removed (ForbidLevel1Peaks) excludes peaks at level 1.
enum class PeakPolicy : std::uint8_t { AllowAll, ForbidLevel1Peaks };

// Left-to-right step kinds. DownRed is the south-east drawn stand-in for the
// skew south-west step.
enum class StepL2R : std::uint8_t { Up = 0, DownBlack = 1, DownRed = 2 };

// Right-to-left (dual) step kinds; red down-steps of the other reading
// direction become blue up-steps.
enum class StepR2L : std::uint8_t { Down = 0, UpBlack = 1, UpBlue = 2 };

// A step sequence in one of the two reading models. Steps are stored as the
// per-model kind index (the declaration order above), which is also the
// ordering used for lexicographic enumeration.
class Path {
public:
    explicit Path(Model m) : model_(m) {}
    Path(Model m, std::vector<std::uint8_t> kinds) : model_(m), kinds_(std::move(kinds)) {}
    static Path l2r(std::initializer_list<StepL2R> steps);
    static Path r2l(std::initializer_list<StepR2L> steps);

    Model model() const { return model_; }
    std::size_t size() const { return kinds_.size(); }
    std::uint8_t kind(std::size_t i) const { return kinds_[i]; }
    const std::vector<std::uint8_t>& kinds() const { return kinds_; }

    void push(std::uint8_t kind) { kinds_.push_back(kind); }
    void pop() { kinds_.pop_back(); }

    // One letter per step: U/D/d for left-to-right, u/b/D for the dual model.
    std::string letters() const;

    friend bool operator==(const Path& a, const Path& b) = default;

private:
    Model model_;
    std::vector<std::uint8_t> kinds_;
};

// +1 or -1 level change of a step kind in the given model.
int level_delta(Model model, std::uint8_t kind);

// Sum of level changes (ups minus downs).
long final_level(const Path& path);

// True when no prefix of the path goes below level 0.
bool prefix_nonnegative(const Path& path);

enum class ViolationReason : std::uint8_t {
    None,
    BelowLevelZero,
    ForbiddenPattern,
    PeakAtLevelOne,
};

struct ValidationResult {
    bool ok = true;
    std::size_t index = 0;  // earliest offending step when !ok
    ViolationReason reason = ViolationReason::None;
};

std::string describe(const ValidationResult& r);

// Checks prefix nonnegativity and the forbidden step adjacencies of the
// model's state diagram; with ForbidLevel1Peaks the dashed edge is absent.
ValidationResult validate(const Path& path, PeakPolicy policy);

struct Point {
    long x = 0;
    long y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

using PointSequence = std::vector<Point>;

// Draws a left-to-right path as its skew shape from the origin:
// Up -> (+1,+1), DownBlack -> (+1,-1), DownRed -> (-1,-1).
// Requires a left-to-right, prefix-nonnegative path.
PointSequence decorated_to_skew(const Path& path);

// True when some unit segment is traversed twice (in either direction).
// Vertex re-visits alone do not count.
bool is_self_intersecting(const PointSequence& pts);

}  // namespace skewdyck

#endif
