#pragma once

/// @file netlist.hpp
/// @brief Fanout-free acyclic netlist representation, structural validation,
///        exact bit-level simulation, and the whole-circuit parity check.

#include "revadd/gates.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace revadd {

/// How a wire participates in the circuit. Input-side roles come from
/// declarations; output-side roles (internal / primary_output / garbage)
/// are derived from consumption.
enum class WireRole : uint8_t {
    primary_input,
    constant_zero,
    constant_one,
    internal,
    primary_output,
    garbage,
};

[[nodiscard]] std::string_view wire_role_name(WireRole role);

/// One gate in a netlist: ordered input and output wire ids, each list
/// exactly gate_arity(kind) long with no duplicates inside a list.
struct GateInstance {
    std::string id;
    GateKind kind = GateKind::FG;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

/// A circuit over named wires. Structural rules (single driver, no fanout,
/// acyclic, consumed wires are not primary outputs) are checked by
/// validate(), not enforced on construction, so invalid circuits can be
/// represented and diagnosed.
struct Netlist {
    std::string name;
    std::vector<std::string> inputs;                     ///< primary inputs, declared order
    std::vector<std::pair<std::string, bool>> constants; ///< constant wires and their fixed values
    std::vector<GateInstance> gates;
    std::vector<std::string> outputs;                    ///< primary outputs, declared order
    std::vector<std::string> declared_garbage;           ///< optional documentation, checked against derived garbage

    void add_input(std::string id) { inputs.push_back(std::move(id)); }
    void add_constant(std::string id, bool value) { constants.emplace_back(std::move(id), value); }
    void declare_output(std::string id) { outputs.push_back(std::move(id)); }
    GateInstance& add_gate(std::string id, GateKind kind, std::vector<std::string> ins,
                           std::vector<std::string> outs) {
        gates.push_back({std::move(id), kind, std::move(ins), std::move(outs)});
        return gates.back();
    }
};

/// One structural rule breach. `code` is a stable machine-readable tag:
/// arity-mismatch, duplicate-pin, duplicate-gate, multi-driver,
/// undefined-wire, fanout, output-consumed, duplicate-output, cycle,
/// bad-identifier, garbage-mismatch, line-imbalance.
struct Violation {
    std::string code;
    std::string subject; ///< offending wire or gate id
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string to_string() const;
};

/// Checks every structural rule and returns all violations found.
/// Violations are data; an empty report means the netlist is accepted by
/// simulation, serialization and analysis.
[[nodiscard]] ValidationReport validate(const Netlist& netlist);

/// Driven wires with no consumer that are not declared primary outputs,
/// ordered by (driver topological rank, id). Declarations rank before all
/// gates; gates are ranked in canonical topological order (lexical
/// tie-break on gate id).
/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] std::vector<std::string> garbage_wires(const Netlist& netlist);

/// (wire id, derived role) for every wire, in simulator wire order.
/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] std::vector<std::pair<std::string, WireRole>> wire_roles(const Netlist& netlist);

/// Structural identity: same name, same ordered primary inputs, constants
/// and primary outputs, and the same gates (compared as sets keyed by gate
/// id). Declared garbage is documentation and is not compared.
[[nodiscard]] bool structurally_equal(const Netlist& a, const Netlist& b);

/// Expands a pattern into bits: element j is bit (n-1-j) of `pattern`, so
/// the pattern reads left to right as a bitstring over the first n wires.
[[nodiscard]] std::vector<uint8_t> pattern_bits(uint64_t pattern, size_t n);

/// A value for every wire, indexed in Simulator wire order.
using Valuation = std::vector<uint8_t>;

struct SimOptions {
    /// Evaluate gates in reverse-lexical topological order instead of the
    /// canonical lexical one. Results must not depend on this; the knob
    /// exists so tests can exercise order independence.
    bool reverse_tie_break = false;
};

/// Compiled read-only view of a valid netlist for repeated simulation.
///
/// Wire order: primary inputs (declared order), constants (declared
/// order), then each gate's outputs in pin order following the chosen
/// topological gate order. Valuations returned by run() use this order.
class Simulator {
  public:
    /// @throws std::invalid_argument with the validation report text if
    ///         the netlist fails validate()
    explicit Simulator(const Netlist& netlist, SimOptions options = {});

    [[nodiscard]] size_t wire_count() const { return wire_ids_.size(); }
    [[nodiscard]] const std::vector<std::string>& wire_ids() const { return wire_ids_; }
    [[nodiscard]] std::optional<size_t> wire_index(std::string_view id) const;
    [[nodiscard]] WireRole role(size_t wire) const { return roles_[wire]; }

    /// Indices of primary inputs, in declared order.
    [[nodiscard]] const std::vector<size_t>& primary_inputs() const { return primary_inputs_; }
    /// Indices of primary outputs, in declared order.
    [[nodiscard]] const std::vector<size_t>& primary_outputs() const { return primary_outputs_; }
    /// All input-side lines: primary inputs plus constants.
    [[nodiscard]] const std::vector<size_t>& input_side() const { return input_side_; }
    /// All output-side lines: primary outputs plus garbage.
    [[nodiscard]] const std::vector<size_t>& output_side() const { return output_side_; }
    /// Garbage wires in canonical order.
    [[nodiscard]] const std::vector<size_t>& garbage() const { return garbage_; }
    /// Indices into the source netlist's gate vector, in evaluation order.
    [[nodiscard]] const std::vector<size_t>& gate_order() const { return gate_order_; }

    /// Evaluates the circuit on one primary-input assignment.
    /// `inputs` must have exactly primary_inputs().size() entries.
    [[nodiscard]] Valuation run(std::span<const uint8_t> inputs) const;

    /// As run(), but with wire `fault` inverted downstream of its driver:
    /// the driver computes normally, then every consumer and observer of
    /// the wire sees the flipped value.
    [[nodiscard]] Valuation run_with_fault(std::span<const uint8_t> inputs, size_t fault) const;

    /// Convenience for exhaustive scans: primary input j takes bit
    /// (n-1-j) of `pattern`.
    [[nodiscard]] Valuation run_pattern(uint64_t pattern) const;

    /// Value of a wire by id in a valuation produced by this simulator.
    /// @throws std::out_of_range for an unknown wire id
    [[nodiscard]] bool value(const Valuation& valuation, std::string_view id) const;

    /// XOR over the given line set.
    [[nodiscard]] int parity(const Valuation& valuation, const std::vector<size_t>& lines) const;

  private:
    struct CompiledGate {
        GateKind kind;
        uint8_t arity;
        std::array<uint32_t, 4> in;
        std::array<uint32_t, 4> out;
    };

    void run_into(std::span<const uint8_t> inputs, Valuation& vals,
                  std::optional<size_t> fault) const;

    std::vector<std::string> wire_ids_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<WireRole> roles_;
    std::vector<uint8_t> const_values_; // aligned with wire index; meaningful for constants
    std::vector<size_t> primary_inputs_;
    std::vector<size_t> primary_outputs_;
    std::vector<size_t> input_side_;
    std::vector<size_t> output_side_;
    std::vector<size_t> garbage_;
    std::vector<size_t> gate_order_;
    std::vector<CompiledGate> compiled_;
    size_t first_gate_wire_ = 0;
};

/// One-shot simulation of a valid netlist.
/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] Valuation simulate(const Netlist& netlist, std::span<const uint8_t> inputs);

struct ParityCheckOptions {
    int exhaustive_bound = 20; ///< exhaustive scan up to this many primary inputs
    uint64_t samples = 4096;   ///< seeded sample count above the bound
    uint64_t seed = 42;
};

enum class ParityStatus : uint8_t {
    holds,             ///< input-side XOR equals output-side XOR on every vector checked
    violated,          ///< a counterexample vector was found
    unsupported_gates, ///< circuit contains a non-parity-preserving gate kind
};

struct ParityCheckResult {
    ParityStatus status = ParityStatus::holds;
    uint64_t vectors = 0;
    bool exhaustive = true;
    std::optional<uint64_t> counterexample; ///< primary-input pattern, when violated
};

/// Checks the circuit-level parity law: XOR over all input-side lines
/// (primary inputs and constants) equals XOR over all output-side lines
/// (primary outputs and garbage) for every vector in scope. Circuits
/// containing non-parity-preserving gate kinds are reported as
/// unsupported, not failed.
/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] ParityCheckResult circuit_parity_holds(const Netlist& netlist,
                                                     const ParityCheckOptions& options = {});

} // namespace revadd
