#pragma once

/// @file analysis.hpp
/// @brief Metric extraction, the published-results comparison table,
///        functional adder verification, and single-wire fault injection.

#include "revadd/builders.hpp"
#include "revadd/netlist.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace revadd {

using Inventory = std::map<GateKind, int>;

/// Sum of count * gate_cost(kind) over the inventory.
[[nodiscard]] CostVector inventory_cost(const Inventory& inventory);

/// Gate, constant-input and garbage-output counts plus the hardware
/// complexity of one netlist.
struct MetricsRecord {
    Inventory gate_counts;
    int total_gates = 0;
    int constant_inputs = 0;
    int garbage_outputs = 0;
    CostVector cost;
};

/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] MetricsRecord metrics(const Netlist& netlist);

/// One row of the published comparison of fault-tolerant adders, as
/// printed by the source: design label, gate inventory, complexity,
/// constant inputs and garbage outputs.
struct ReferenceRow {
    std::string design;
    Inventory inventory;
    int printed_gate_total = 0;
    CostVector printed_cost;
    int printed_constants = 0;
    int printed_garbage = 0;
    /// Builder reproducing this design, when it is one this toolkit ships.
    std::optional<AdderFamily> built;
    /// Known transcription quirks of the source, carried as data.
    std::vector<std::string> source_notes;
};

/// The ten published rows, in print order.
[[nodiscard]] const std::vector<ReferenceRow>& reference_table();

enum class RowStatus : uint8_t {
    exact_match,            ///< recomputation and (when built) measurement equal the printed row
    within_budget,          ///< measured blueprint meets or beats every printed column
    exceeds_budget,         ///< measured blueprint is worse than a printed column
    reference_inconsistent, ///< the printed cost does not match the row's own inventory
};

[[nodiscard]] std::string_view row_status_name(RowStatus status);

struct ComparisonRow {
    ReferenceRow printed;
    CostVector recomputed_cost; ///< inventory_cost of the printed inventory
    bool cost_consistent = false;
    std::optional<MetricsRecord> measured; ///< metrics of the shipped blueprint, when built
    RowStatus status = RowStatus::exact_match;
    std::vector<std::string> notes;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
};

/// Builds every shipped blueprint, measures it, recomputes each printed
/// complexity from the per-gate cost vectors and classifies every row.
[[nodiscard]] ComparisonTable table1_report();

struct VerifyOptions {
    bool exhaustive = true;
    uint64_t samples = 100000; ///< random vectors on top of the corner set, when sampled
    uint64_t seed = 42;
};

struct Counterexample {
    uint64_t a = 0;
    uint64_t b = 0;
    int carry_in = 0;
    uint64_t got_sum = 0;
    int got_carry = 0;
};

struct VerifyReport {
    std::string circuit;
    AdderShape shape;
    bool pass = false;
    uint64_t vectors = 0;
    bool exhaustive = true;
    std::optional<Counterexample> counterexample;
};

/// Checks sum + 2^w carry == a + b + c over the chosen vector set.
/// Sampled mode always includes the corner vectors (zero, all-ones,
/// alternating masks, single bits, full propagate).
/// @throws std::invalid_argument on an invalid netlist or if the netlist
///         interface does not match the shape (2w+1 inputs, w+1 outputs)
[[nodiscard]] VerifyReport verify_adder(const Netlist& netlist, const AdderShape& shape,
                                        const VerifyOptions& options = {});

struct FaultSweepOptions {
    int exhaustive_bound = 20; ///< exhaustive vectors up to this many primary inputs
    uint64_t samples = 64;     ///< sampled vectors above the bound
    uint64_t seed = 42;
    size_t max_listed = 20;    ///< cap on retained undetected-fault examples
};

struct UndetectedFault {
    std::string wire;
    uint64_t vector = 0; ///< primary-input pattern
};

/// Detection statistics for one observation set.
struct FaultObservation {
    uint64_t detected = 0;
    uint64_t undetected = 0;
    std::vector<UndetectedFault> examples; ///< first max_listed undetected faults
    [[nodiscard]] double coverage() const {
        const uint64_t total = detected + undetected;
        return total == 0 ? 1.0 : static_cast<double>(detected) / static_cast<double>(total);
    }
};

/// Fault-injection outcome: every wire (primary inputs, constants, every
/// gate output) inverted on every vector in scope, observed two ways.
struct FaultReport {
    std::string circuit;
    uint64_t wires = 0;
    uint64_t primary_inputs = 0;
    uint64_t vectors = 0;
    bool exhaustive = true;
    uint64_t injections = 0;
    FaultObservation full;         ///< parity over primary outputs and garbage
    FaultObservation outputs_only; ///< parity over primary outputs alone
};

/// Injects a single inverted wire per run and reports whether the fault
/// flips the observed output parity. A fault is detected when the XOR over
/// the observation set differs from the fault-free value.
/// @throws std::invalid_argument on an invalid netlist or one containing
///         non-parity-preserving gate kinds (the claim under test does not
///         apply to those circuits)
[[nodiscard]] FaultReport fault_sweep(const Netlist& netlist,
                                      const FaultSweepOptions& options = {});

} // namespace revadd
