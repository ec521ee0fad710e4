#include "skewdyck/counting.hpp"

#include <stdexcept>

namespace skewdyck {

namespace {
const BigInt kZeroCount = 0;

constexpr std::uint8_t F = static_cast<std::uint8_t>(LayerL2R::F);
constexpr std::uint8_t G = static_cast<std::uint8_t>(LayerL2R::G);
constexpr std::uint8_t H = static_cast<std::uint8_t>(LayerL2R::H);
constexpr std::uint8_t A = static_cast<std::uint8_t>(LayerR2L::A);
constexpr std::uint8_t B = static_cast<std::uint8_t>(LayerR2L::B);
constexpr std::uint8_t C = static_cast<std::uint8_t>(LayerR2L::C);
}  // namespace

std::optional<State> Automaton::next(State s, std::uint8_t step_kind) const {
    if (model_ == Model::LeftToRight) {
        switch (static_cast<StepL2R>(step_kind)) {
            case StepL2R::Up:
                if (s.layer == H) return std::nullopt;  // red-then-up
                return State{F, s.level + 1};
            case StepL2R::DownBlack:
                if (s.level == 0) return std::nullopt;
                if (s.layer == F && s.level == 1 && policy_ == PeakPolicy::ForbidLevel1Peaks) {
                    return std::nullopt;  // dashed edge removed
                }
                return State{G, s.level - 1};
            case StepL2R::DownRed:
                if (s.level == 0) return std::nullopt;
                if (s.layer == F) return std::nullopt;  // up-then-red
                return State{H, s.level - 1};
        }
        return std::nullopt;
    }
    switch (static_cast<StepR2L>(step_kind)) {
        case StepR2L::Down:
            if (s.level == 0) return std::nullopt;
            if (s.layer == C) return std::nullopt;  // blue-then-down
            if (s.layer == A && s.level == 1 && policy_ == PeakPolicy::ForbidLevel1Peaks) {
                return std::nullopt;  // dual dashed edge removed
            }
            return State{B, s.level - 1};
        case StepR2L::UpBlack:
            return State{A, s.level + 1};
        case StepR2L::UpBlue:
            if (s.layer == B) return std::nullopt;  // down-then-blue
            return State{C, s.level + 1};
    }
    return std::nullopt;
}

namespace {

void enumerate_rec(const Automaton& aut, State s, std::size_t remaining, long target,
                   Path& prefix, std::vector<Path>& out) {
    if (remaining == 0) {
        if (s.level == target) out.push_back(prefix);
        return;
    }
    // unreachable: too far from the target, or wrong parity
    long gap = s.level > target ? s.level - target : target - s.level;
    if (gap > static_cast<long>(remaining) ||
        (static_cast<long>(remaining) - gap) % 2 != 0) {
        return;
    }
    for (std::uint8_t k = 0; k < 3; ++k) {
        std::optional<State> t = aut.next(s, k);
        if (!t) continue;
        prefix.push(k);
        enumerate_rec(aut, *t, remaining - 1, target, prefix, out);
        prefix.pop();
    }
}

}  // namespace

std::vector<Path> enumerate(std::size_t n, long j, Model model, PeakPolicy policy,
                            std::size_t cap) {
    if (n > cap) {
        throw std::invalid_argument("enumerate: length " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    }
    std::vector<Path> out;
    if (j < 0) return out;
    Automaton aut(model, policy);
    Path prefix(model);
    enumerate_rec(aut, aut.start(), n, j, prefix, out);
    return out;
}

CountTable::CountTable(Model model, PeakPolicy policy, long n_max, long j_max)
    : model_(model), policy_(policy), n_max_(n_max), j_max_(j_max) {
    if (n_max < 0 || j_max < 0) {
        throw std::invalid_argument("CountTable: negative bounds");
    }
    Automaton aut(model, policy);
    counts_.assign(static_cast<std::size_t>(n_max + 1),
                   std::vector<std::array<BigInt, 3>>(static_cast<std::size_t>(j_max + 1)));
    counts_[0][0][aut.start().layer] = 1;
    for (long n = 0; n < n_max; ++n) {
        for (long j = 0; j <= j_max; ++j) {
            if ((n - j) % 2 != 0) continue;  // parity: unreachable states
            for (std::uint8_t layer = 0; layer < 3; ++layer) {
                const BigInt& c = counts_[n][j][layer];
                if (c == 0) continue;
                for (std::uint8_t k = 0; k < 3; ++k) {
                    std::optional<State> t = aut.next(State{layer, j}, k);
                    if (!t || t->level > j_max) continue;
                    counts_[n + 1][t->level][t->layer] += c;
                }
            }
        }
    }
}

const BigInt& CountTable::layer_count(long n, long j, std::uint8_t layer) const {
    if (n < 0 || n > n_max_ || j < 0 || j > j_max_ || layer > 2) return kZeroCount;
    return counts_[n][j][layer];
}

BigInt CountTable::count(long n, long j) const {
    return layer_count(n, j, 0) + layer_count(n, j, 1) + layer_count(n, j, 2);
}

BigInt CountTable::count_open(long n) const {
    BigInt total = 0;
    for (long j = 0; j <= j_max_; ++j) total += count(n, j);
    return total;
}

std::vector<BigInt> CountTable::layer_series_at_level(long level, std::uint8_t layer) const {
    std::vector<BigInt> out(static_cast<std::size_t>(n_max_ + 1));
    for (long n = 0; n <= n_max_; ++n) out[n] = layer_count(n, level, layer);
    return out;
}

BigInt count(long n, long j, Model model, PeakPolicy policy) {
    if (n < 0 || j < 0 || j > n) return 0;
    return CountTable(model, policy, n, n).count(n, j);
}

BigInt count_open(long n, Model model, PeakPolicy policy) {
    if (n < 0) return 0;
    return CountTable(model, policy, n, n).count_open(n);
}

}  // namespace skewdyck
