#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "veer/grid.hpp"

namespace veer {

// points[c] is the row of the lattice corner chosen in column c; corners sit at integer
// coordinates on the torus, markings at cell centres.
struct GridState {
    std::vector<int> points;

    auto operator<=>(const GridState&) const = default;
};

// A chain over F2: sorted, duplicate free.
using ChainF2 = std::vector<GridState>;

struct Bigrading {
    int maslov = 0;
    int alexander2 = 0;

    bool operator==(const Bigrading&) const = default;
};

GridState theta_state(const GridDiagram& g);
int maslov(const GridDiagram& g, const GridState& x);
int alexander2(const GridDiagram& g, const GridState& x);
Bigrading bigrading(const GridDiagram& g, const GridState& x);

ChainF2 boundary(const GridDiagram& g, const GridState& x);
ChainF2 boundary(const GridDiagram& g, const ChainF2& c);
ChainF2 normalize(ChainF2 c);
bool is_cycle(const GridDiagram& g, const ChainF2& c);
bool has_incoming_rectangle(const GridDiagram& g, const GridState& x);

constexpr int kPackedMaxN = 16;

struct EnumerateLimits {
    int n_max = 11;
};

// Calls visit for every state with the given bigrading; returns the count.
std::size_t enumerate_states(const GridDiagram& g, Bigrading target,
                             const std::function<void(const GridState&)>& visit,
                             const EnumerateLimits& limits = {});
std::vector<GridState> states_with_grading(const GridDiagram& g, Bigrading target,
                                           const EnumerateLimits& limits = {});

enum class SolveStrategy {
    // Assemble only the block of the boundary map that touches the chain.
    Component,
    // Enumerate every state of the source grading.
    FullGrading,
};

struct SolverLimits {
    int n_max = 11;
    std::size_t max_entries = 20'000'000;
    std::size_t max_states = 5'000'000;
    SolveStrategy strategy = SolveStrategy::Component;
    bool fast_path = true;
};

struct NonvanishingResult {
    enum class Status { Nonzero, Zero, Aborted };
    enum class Reason { None, NoIncomingRectangle, SolverNoSolution };

    Status status = Status::Aborted;
    Reason reason = Reason::None;
    ChainF2 witness;
    std::string limit;
    Bigrading grading;
    std::size_t sources = 0;
    std::size_t targets = 0;
};

NonvanishingResult is_boundary(const GridDiagram& g, const ChainF2& c, const SolverLimits& limits = {});
NonvanishingResult theta_nonvanishing(const GridDiagram& g, const SolverLimits& limits = {});

const char* to_string(NonvanishingResult::Status s);
const char* to_string(NonvanishingResult::Reason r);

}  // namespace veer
