#ifndef SKEWDYCK_COUNTING_HPP
#define SKEWDYCK_COUNTING_HPP

#include <array>
#include <optional>
#include <vector>

#include "skewdyck/path.hpp"
#include "skewdyck/rational.hpp"

namespace skewdyck {

// Layer of the three-layer state diagram: which step type last entered the
// state. Indices follow the per-model enums below.
enum class LayerL2R : std::uint8_t { F = 0, G = 1, H = 2 };  // up, down-black, down-red
enum class LayerR2L : std::uint8_t { A = 0, B = 1, C = 2 };  // up-black, down, up-blue

struct State {
    std::uint8_t layer = 0;
    long level = 0;
    friend bool operator==(const State&, const State&) = default;
};

// Transition function of the layered state diagram. Levels are unbounded;
// transitions are computed on demand from the drawn edges. The dashed edge
// (down from the just-risen level-1 state into level 0) is present only
// under AllowAll.
class Automaton {
public:
    Automaton(Model model, PeakPolicy policy) : model_(model), policy_(policy) {}

    Model model() const { return model_; }
    PeakPolicy policy() const { return policy_; }

    // Start state: level 0 in the up-entered layer (F resp. A); it carries
    // the empty path.
    State start() const { return {0, 0}; }

    std::optional<State> next(State s, std::uint8_t step_kind) const;

private:
    Model model_;
    PeakPolicy policy_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// All valid paths of length n ending at level j, in lexicographic order of
// step kinds. Throws std::invalid_argument when n exceeds the cap.
std::vector<Path> enumerate(std::size_t n, long j, Model model, PeakPolicy policy,
                            std::size_t cap = kDefaultEnumerationCap);

// Exact path counts per (length, level, layer), by forward dynamic
// programming over the automaton with levels truncated at j_max. The entry
// at (n, j) is exact whenever (n + j) / 2 <= j_max; in particular
// j_max = n_max covers the whole table.
class CountTable {
public:
    CountTable(Model model, PeakPolicy policy, long n_max, long j_max);

    Model model() const { return model_; }
    PeakPolicy policy() const { return policy_; }
    long n_max() const { return n_max_; }
    long j_max() const { return j_max_; }

    // Zero outside the table bounds.
    const BigInt& layer_count(long n, long j, std::uint8_t layer) const;
    BigInt count(long n, long j) const;
    BigInt count_open(long n) const;

    // Counts at a fixed (level, layer) as a sequence in the length n.
    std::vector<BigInt> layer_series_at_level(long level, std::uint8_t layer) const;

private:
    Model model_;
    PeakPolicy policy_;
    long n_max_;
    long j_max_;
    std::vector<std::vector<std::array<BigInt, 3>>> counts_;  // [n][j][layer]
};

BigInt count(long n, long j, Model model, PeakPolicy policy);
BigInt count_open(long n, Model model, PeakPolicy policy);

}  // namespace skewdyck

#endif
