#pragma once

/// @file gates.hpp
/// @brief The reversible gate library: eight gates as exact boolean
///        bijections, their parity-preservation flags, and their
///        hardware-complexity cost vectors.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revadd {

/// The eight supported reversible gate kinds.
///
/// FG, TG and PG are reversible but not parity preserving; F2G, FRG, NFT,
/// IG and MIG preserve input parity on every pattern. Fault-tolerant
/// builders accept only the parity-preserving kinds.
enum class GateKind : uint8_t { FG, F2G, FRG, TG, PG, NFT, IG, MIG };

inline constexpr std::array<GateKind, 8> all_gate_kinds = {
    GateKind::FG,  GateKind::F2G, GateKind::FRG, GateKind::TG,
    GateKind::PG,  GateKind::NFT, GateKind::IG,  GateKind::MIG,
};

/// Line count of the gate (inputs == outputs).
[[nodiscard]] constexpr int gate_arity(GateKind kind) {
    switch (kind) {
    case GateKind::FG:
        return 2;
    case GateKind::F2G:
    case GateKind::FRG:
    case GateKind::TG:
    case GateKind::PG:
    case GateKind::NFT:
        return 3;
    case GateKind::IG:
    case GateKind::MIG:
        return 4;
    }
    return 0;
}

/// Declared parity-preservation flag. Matches exhaustive checking of the
/// gate's truth table (asserted in the test suite).
[[nodiscard]] constexpr bool gate_parity_preserving(GateKind kind) {
    switch (kind) {
    case GateKind::F2G:
    case GateKind::FRG:
    case GateKind::NFT:
    case GateKind::IG:
    case GateKind::MIG:
        return true;
    case GateKind::FG:
    case GateKind::TG:
    case GateKind::PG:
        return false;
    }
    return false;
}

[[nodiscard]] constexpr std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::FG:
        return "FG";
    case GateKind::F2G:
        return "F2G";
    case GateKind::FRG:
        return "FRG";
    case GateKind::TG:
        return "TG";
    case GateKind::PG:
        return "PG";
    case GateKind::NFT:
        return "NFT";
    case GateKind::IG:
        return "IG";
    case GateKind::MIG:
        return "MIG";
    }
    return "?";
}

[[nodiscard]] std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Hardware-complexity triple: counts of two-input XOR (alpha), two-input
/// AND (beta) and NOT (delta) evaluations. Component-wise addition is used
/// for netlist totals.
struct CostVector {
    int alpha = 0;
    int beta = 0;
    int delta = 0;

    constexpr CostVector& operator+=(const CostVector& o) {
        alpha += o.alpha;
        beta += o.beta;
        delta += o.delta;
        return *this;
    }
    friend constexpr CostVector operator+(CostVector a, const CostVector& b) { return a += b; }
    friend constexpr CostVector operator*(int n, const CostVector& c) {
        return {n * c.alpha, n * c.beta, n * c.delta};
    }
    friend constexpr bool operator==(const CostVector&, const CostVector&) = default;

    /// True if every component is <= the corresponding component of `o`.
    [[nodiscard]] constexpr bool within(const CostVector& o) const {
        return alpha <= o.alpha && beta <= o.beta && delta <= o.delta;
    }
};

/// Renders "6a+4b+2d" (a = XOR, b = AND, d = NOT count).
[[nodiscard]] std::string to_string(const CostVector& cost);

/// Fixed per-gate cost vector. The assignment is the unique one that
/// reproduces every published per-design complexity total from its gate
/// inventory; NOT terms reusable inside one gate are counted once.
[[nodiscard]] constexpr CostVector gate_cost(GateKind kind) {
    switch (kind) {
    case GateKind::FG:
        return {1, 0, 0};
    case GateKind::F2G:
        return {2, 0, 0};
    case GateKind::FRG:
        return {2, 4, 1};
    case GateKind::TG:
        return {1, 1, 0};
    case GateKind::PG:
        return {2, 1, 0};
    case GateKind::NFT:
        return {3, 3, 1};
    case GateKind::IG:
        return {4, 3, 1};
    case GateKind::MIG:
        return {3, 2, 1};
    }
    return {};
}

/// Evaluates one gate on an input tuple of exactly `gate_arity(kind)` bits.
///
/// Gate semantics (line A first):
///   FG  (A,B)     -> (A, A^B)
///   F2G (A,B,C)   -> (A, A^B, A^C)
///   FRG (A,B,C)   -> (A, A ? C : B, A ? B : C)
///   TG  (A,B,C)   -> (A, B, AB^C)
///   PG  (A,B,C)   -> (A, A^B, AB^C)
///   NFT (A,B,C)   -> (A^B, !B C ^ A !C, BC ^ A !C)
///   IG  (A,B,C,D) -> (A, A^B, AB^C, BD ^ !B (A^D))
///   MIG (A,B,C,D) -> (A, A^B, AB^C, A !B ^ D)
///
/// @throws std::invalid_argument on input length != arity, naming the gate
[[nodiscard]] std::vector<uint8_t> eval_gate(GateKind kind, std::span<const uint8_t> inputs);

/// Pattern form of eval_gate: bit (arity-1-i) of `pattern` is line i, so
/// line A is the most significant bit. Pattern must be < 2^arity.
[[nodiscard]] uint32_t eval_pattern(GateKind kind, uint32_t pattern);

/// Exact bijection table of an n-line gate: mapping[i] is the output
/// pattern for input pattern i, line A as the most significant bit.
struct TruthTable {
    int arity = 0;
    std::vector<uint16_t> mapping;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Tabulates eval_gate over all 2^arity input patterns.
[[nodiscard]] TruthTable truth_table(GateKind kind);

/// True iff the mapping is a permutation of {0, ..., 2^arity - 1}.
/// @throws std::invalid_argument on a malformed table (wrong entry count
///         or an entry out of range)
[[nodiscard]] bool is_bijective(const TruthTable& table);

/// True iff every input pattern maps to an output pattern of equal parity.
/// Requires a well-formed, bijective table.
[[nodiscard]] bool is_parity_preserving(const TruthTable& table);

} // namespace revadd
