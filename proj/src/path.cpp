#include "skewdyck/path.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace skewdyck {

Path Path::l2r(std::initializer_list<StepL2R> steps) {
    Path p(Model::LeftToRight);
    for (StepL2R s : steps) p.push(static_cast<std::uint8_t>(s));
    return p;
}

Path Path::r2l(std::initializer_list<StepR2L> steps) {
    Path p(Model::RightToLeft);
    for (StepR2L s : steps) p.push(static_cast<std::uint8_t>(s));
    return p;
}

std::string Path::letters() const {
    static constexpr char l2r_letters[3] = {'U', 'D', 'd'};
    static constexpr char r2l_letters[3] = {'D', 'u', 'b'};
    const char* map = model_ == Model::LeftToRight ? l2r_letters : r2l_letters;
    std::string out;
    out.reserve(kinds_.size());
    for (std::uint8_t k : kinds_) out.push_back(map[k]);
    return out;
}

int level_delta(Model model, std::uint8_t kind) {
    if (model == Model::LeftToRight) {
        return kind == static_cast<std::uint8_t>(StepL2R::Up) ? +1 : -1;
    }
    return kind == static_cast<std::uint8_t>(StepR2L::Down) ? -1 : +1;
}

long final_level(const Path& path) {
    long level = 0;
    for (std::size_t i = 0; i < path.size(); ++i) level += level_delta(path.model(), path.kind(i));
    return level;
}

bool prefix_nonnegative(const Path& path) {
    long level = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        level += level_delta(path.model(), path.kind(i));
        if (level < 0) return false;
    }
    return true;
}

std::string describe(const ValidationResult& r) {
    if (r.ok) return "ok";
    std::string why;
    switch (r.reason) {
        case ViolationReason::BelowLevelZero: why = "path dips below level 0"; break;
        case ViolationReason::ForbiddenPattern: why = "forbidden step pattern"; break;
        case ViolationReason::PeakAtLevelOne: why = "peak at level 1"; break;
        default: why = "unknown"; break;
    }
    return "violation at step " + std::to_string(r.index) + ": " + why;
}

ValidationResult validate(const Path& path, PeakPolicy policy) {
    const bool l2r = path.model() == Model::LeftToRight;
    long level = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const std::uint8_t k = path.kind(i);
        const int delta = level_delta(path.model(), k);
        if (level + delta < 0) {
            return {false, i, ViolationReason::BelowLevelZero};
        }
        if (i > 0) {
            const std::uint8_t prev = path.kind(i - 1);
            bool pattern;
            if (l2r) {
                // up then red, or red then up
                pattern = (prev == static_cast<std::uint8_t>(StepL2R::Up) &&
                           k == static_cast<std::uint8_t>(StepL2R::DownRed)) ||
                          (prev == static_cast<std::uint8_t>(StepL2R::DownRed) &&
                           k == static_cast<std::uint8_t>(StepL2R::Up));
            } else {
                // blue then down, or down then blue
                pattern = (prev == static_cast<std::uint8_t>(StepR2L::UpBlue) &&
                           k == static_cast<std::uint8_t>(StepR2L::Down)) ||
                          (prev == static_cast<std::uint8_t>(StepR2L::Down) &&
                           k == static_cast<std::uint8_t>(StepR2L::UpBlue));
            }
            if (pattern) {
                return {false, i, ViolationReason::ForbiddenPattern};
            }
            if (policy == PeakPolicy::ForbidLevel1Peaks && level == 1 && delta == -1 &&
                level_delta(path.model(), prev) == +1) {
                // the previous step rose from level 0; dropping straight back
                // is the removed dashed edge of the state diagram
                return {false, i, ViolationReason::PeakAtLevelOne};
            }
        }
        level += delta;
    }
    return {};
}

PointSequence decorated_to_skew(const Path& path) {
    if (path.model() != Model::LeftToRight) {
        throw std::invalid_argument("decorated_to_skew: path must be left-to-right");
    }
    PointSequence pts;
    pts.reserve(path.size() + 1);
    Point p{0, 0};
    pts.push_back(p);
    for (std::size_t i = 0; i < path.size(); ++i) {
        switch (static_cast<StepL2R>(path.kind(i))) {
            case StepL2R::Up: p.x += 1; p.y += 1; break;
            case StepL2R::DownBlack: p.x += 1; p.y -= 1; break;
            case StepL2R::DownRed: p.x -= 1; p.y -= 1; break;
        }
        if (p.y < 0) {
            throw std::invalid_argument("decorated_to_skew: path is not prefix-valid");
        }
        pts.push_back(p);
    }
    return pts;
}

bool is_self_intersecting(const PointSequence& pts) {
    std::set<std::pair<Point, Point>> segments;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Point a = pts[i], b = pts[i + 1];
        if (b < a) std::swap(a, b);
        if (!segments.emplace(a, b).second) return true;
    }
    return false;
}

}  // namespace skewdyck
