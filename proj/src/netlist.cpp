#include "revadd/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace revadd {

std::string_view wire_role_name(WireRole role) {
    switch (role) {
    case WireRole::primary_input:
        return "primary_input";
    case WireRole::constant_zero:
        return "constant_zero";
    case WireRole::constant_one:
        return "constant_one";
    case WireRole::internal:
        return "internal";
    case WireRole::primary_output:
        return "primary_output";
    case WireRole::garbage:
        return "garbage";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    if (ok()) {
        return "valid";
    }
    std::ostringstream os;
    os << violations.size() << " violation(s):";
    for (const Violation& v : violations) {
        os << "\n  [" << v.code << "] " << v.message;
    }
    return os.str();
}

namespace {

bool valid_identifier(std::string_view id) {
    if (id.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_') {
        return false;
    }
    return std::all_of(id.begin(), id.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
    });
}

// Everything validate(), garbage_wires() and the Simulator need, built in
// one pass. When structure_ok is false only `report` is meaningful.
struct Index {
    ValidationReport report;
    bool structure_ok = false;

    // wire table in simulator order (inputs, constants, gate outputs by topo)
    std::vector<std::string> wire_ids;
    std::unordered_map<std::string, size_t> by_id;
    std::vector<WireRole> roles;
    std::vector<uint8_t> const_values;
    std::vector<int> driver_rank;   // 0 for declarations, 1 + topo position for gates
    std::vector<bool> consumed;
    std::vector<bool> is_primary_output;
    std::vector<size_t> gate_topo;  // indices into netlist.gates
};

void add_violation(ValidationReport& report, std::string code, std::string subject,
                   std::string message) {
    report.violations.push_back({std::move(code), std::move(subject), std::move(message)});
}

Index build_index(const Netlist& netlist, bool reverse_tie_break = false) {
    Index ix;
    ValidationReport& report = ix.report;

    if (!valid_identifier(netlist.name)) {
        add_violation(report, "bad-identifier", netlist.name,
                      "circuit name '" + netlist.name + "' is not a valid identifier");
    }

    // Drivers: declarations and gate output pins. Count them per wire id.
    struct Def {
        int drivers = 0;
        bool is_input = false;
        bool is_const = false;
        uint8_t const_value = 0;
        int driver_gate = -1; // index into netlist.gates when gate-driven
    };
    std::unordered_map<std::string, Def> defs;
    auto check_id = [&](const std::string& id, const char* what) {
        if (!valid_identifier(id)) {
            add_violation(report, "bad-identifier", id,
                          std::string(what) + " '" + id + "' is not a valid identifier");
        }
    };

    for (const std::string& id : netlist.inputs) {
        check_id(id, "input wire");
        Def& def = defs[id];
        def.drivers++;
        def.is_input = true;
    }
    for (const auto& [id, value] : netlist.constants) {
        check_id(id, "constant wire");
        Def& def = defs[id];
        def.drivers++;
        def.is_const = true;
        def.const_value = value ? 1 : 0;
    }

    std::set<std::string> gate_ids;
    for (size_t g = 0; g < netlist.gates.size(); ++g) {
        const GateInstance& gate = netlist.gates[g];
        check_id(gate.id, "gate");
        if (!gate_ids.insert(gate.id).second) {
            add_violation(report, "duplicate-gate", gate.id,
                          "gate id '" + gate.id + "' is defined more than once");
        }
        const size_t arity = static_cast<size_t>(gate_arity(gate.kind));
        if (gate.inputs.size() != arity) {
            std::ostringstream os;
            os << "gate '" << gate.id << "' (" << gate_name(gate.kind) << ") has "
               << gate.inputs.size() << " input pins, expected " << arity;
            add_violation(report, "arity-mismatch", gate.id, os.str());
        }
        if (gate.outputs.size() != arity) {
            std::ostringstream os;
            os << "gate '" << gate.id << "' (" << gate_name(gate.kind) << ") has "
               << gate.outputs.size() << " output pins, expected " << arity;
            add_violation(report, "arity-mismatch", gate.id, os.str());
        }
        auto flag_duplicates = [&](const std::vector<std::string>& pins, const char* side) {
            std::set<std::string> seen;
            for (const std::string& id : pins) {
                if (!seen.insert(id).second) {
                    add_violation(report, "duplicate-pin", gate.id,
                                  "gate '" + gate.id + "' lists wire '" + id + "' twice among its " +
                                      side);
                }
            }
        };
        flag_duplicates(gate.inputs, "inputs");
        flag_duplicates(gate.outputs, "outputs");
        for (const std::string& id : gate.outputs) {
            check_id(id, "wire");
            Def& def = defs[id];
            def.drivers++;
            def.driver_gate = static_cast<int>(g);
        }
        for (const std::string& id : gate.inputs) {
            check_id(id, "wire");
        }
    }

    for (const auto& [id, def] : std::map<std::string, Def>(defs.begin(), defs.end())) {
        if (def.drivers > 1) {
            std::ostringstream os;
            os << "wire '" << id << "' has " << def.drivers
               << " drivers; every wire must have exactly one";
            add_violation(report, "multi-driver", id, os.str());
        }
    }

    // Consumers and references.
    std::unordered_map<std::string, int> consumers;
    auto check_defined = [&](const std::string& id, const std::string& context) {
        if (defs.find(id) == defs.end()) {
            add_violation(report, "undefined-wire", id,
                          "undefined wire '" + id + "' referenced " + context);
        }
    };
    for (const GateInstance& gate : netlist.gates) {
        for (const std::string& id : gate.inputs) {
            check_defined(id, "as an input of gate '" + gate.id + "'");
            consumers[id]++;
        }
    }
    for (const auto& [id, count] : std::map<std::string, int>(consumers.begin(), consumers.end())) {
        if (count > 1) {
            std::ostringstream os;
            os << "wire '" << id << "' feeds " << count << " gate input pins; no fanout is allowed";
            add_violation(report, "fanout", id, os.str());
        }
    }

    std::set<std::string> output_set;
    for (const std::string& id : netlist.outputs) {
        check_defined(id, "in the primary output list");
        if (!output_set.insert(id).second) {
            add_violation(report, "duplicate-output", id,
                          "wire '" + id + "' is declared as a primary output more than once");
        } else if (consumers.count(id) != 0) {
            add_violation(report, "output-consumed", id,
                          "wire '" + id +
                              "' is consumed by a gate and cannot also be a primary output");
        }
    }
    for (const std::string& id : netlist.declared_garbage) {
        check_defined(id, "in the garbage declaration");
    }

    if (!report.ok()) {
        // Topology, garbage and balance need a structurally sane base.
        ix.structure_ok = false;
        return ix;
    }

    // Topological order with deterministic tie-break on gate id.
    const size_t gate_count = netlist.gates.size();
    std::vector<int> indegree(gate_count, 0);
    std::unordered_map<std::string, std::vector<size_t>> wire_consumers;
    for (size_t g = 0; g < gate_count; ++g) {
        for (const std::string& id : netlist.gates[g].inputs) {
            wire_consumers[id].push_back(g);
            if (defs[id].driver_gate >= 0) {
                indegree[g]++;
            }
        }
    }
    auto id_less = [&](size_t a, size_t b) {
        return reverse_tie_break ? netlist.gates[a].id > netlist.gates[b].id
                                 : netlist.gates[a].id < netlist.gates[b].id;
    };
    std::set<size_t, decltype(id_less)> ready(id_less);
    for (size_t g = 0; g < gate_count; ++g) {
        if (indegree[g] == 0) {
            ready.insert(g);
        }
    }
    while (!ready.empty()) {
        const size_t g = *ready.begin();
        ready.erase(ready.begin());
        ix.gate_topo.push_back(g);
        for (const std::string& id : netlist.gates[g].outputs) {
            auto it = wire_consumers.find(id);
            if (it == wire_consumers.end()) {
                continue;
            }
            for (size_t consumer : it->second) {
                if (--indegree[consumer] == 0) {
                    ready.insert(consumer);
                }
            }
        }
    }
    if (ix.gate_topo.size() != gate_count) {
        std::vector<std::string> cyclic;
        for (size_t g = 0; g < gate_count; ++g) {
            if (indegree[g] > 0) {
                cyclic.push_back(netlist.gates[g].id);
            }
        }
        std::sort(cyclic.begin(), cyclic.end());
        std::ostringstream os;
        os << "gate dependency cycle involving:";
        for (const std::string& id : cyclic) {
            os << " " << id;
        }
        add_violation(report, "cycle", cyclic.empty() ? "" : cyclic.front(), os.str());
        ix.structure_ok = false;
        return ix;
    }

    // Assemble the wire table in simulator order.
    auto add_wire = [&](const std::string& id, WireRole role, uint8_t const_value, int rank) {
        ix.by_id.emplace(id, ix.wire_ids.size());
        ix.wire_ids.push_back(id);
        ix.roles.push_back(role);
        ix.const_values.push_back(const_value);
        ix.driver_rank.push_back(rank);
        ix.consumed.push_back(consumers.count(id) != 0);
        ix.is_primary_output.push_back(output_set.count(id) != 0);
    };
    for (const std::string& id : netlist.inputs) {
        add_wire(id, WireRole::primary_input, 0, 0);
    }
    for (const auto& [id, value] : netlist.constants) {
        add_wire(id, value ? WireRole::constant_one : WireRole::constant_zero, value ? 1 : 0, 0);
    }
    for (size_t pos = 0; pos < ix.gate_topo.size(); ++pos) {
        const GateInstance& gate = netlist.gates[ix.gate_topo[pos]];
        for (const std::string& id : gate.outputs) {
            const bool is_output = output_set.count(id) != 0;
            const bool is_consumed = consumers.count(id) != 0;
            const WireRole role = is_output     ? WireRole::primary_output
                                  : is_consumed ? WireRole::internal
                                                : WireRole::garbage;
            add_wire(id, role, 0, static_cast<int>(pos) + 1);
        }
    }

    // Declared garbage is documentation; when present it must equal the
    // derived set exactly (as a multiset).
    std::vector<std::string> derived;
    for (size_t w = 0; w < ix.wire_ids.size(); ++w) {
        if (!ix.consumed[w] && !ix.is_primary_output[w]) {
            derived.push_back(ix.wire_ids[w]);
        }
    }
    std::sort(derived.begin(), derived.end());
    if (!netlist.declared_garbage.empty()) {
        std::vector<std::string> declared = netlist.declared_garbage;
        std::sort(declared.begin(), declared.end());
        if (declared != derived) {
            std::ostringstream os;
            os << "declared garbage does not match the derived set; derived:";
            for (const std::string& id : derived) {
                os << " " << id;
            }
            add_violation(report, "garbage-mismatch", netlist.name, os.str());
        }
    }

    const size_t input_side = netlist.inputs.size() + netlist.constants.size();
    const size_t output_side = netlist.outputs.size() + derived.size();
    if (input_side != output_side) {
        std::ostringstream os;
        os << "line imbalance: " << input_side << " input-side lines vs " << output_side
           << " output-side lines";
        add_violation(report, "line-imbalance", netlist.name, os.str());
    }

    ix.structure_ok = report.ok();
    return ix;
}

std::vector<std::string> sorted_garbage(const Index& ix) {
    std::vector<size_t> wires;
    for (size_t w = 0; w < ix.wire_ids.size(); ++w) {
        if (!ix.consumed[w] && !ix.is_primary_output[w]) {
            wires.push_back(w);
        }
    }
    std::sort(wires.begin(), wires.end(), [&](size_t a, size_t b) {
        if (ix.driver_rank[a] != ix.driver_rank[b]) {
            return ix.driver_rank[a] < ix.driver_rank[b];
        }
        return ix.wire_ids[a] < ix.wire_ids[b];
    });
    std::vector<std::string> result;
    result.reserve(wires.size());
    for (size_t w : wires) {
        result.push_back(ix.wire_ids[w]);
    }
    return result;
}

Index require_valid(const Netlist& netlist, bool reverse_tie_break = false) {
    Index ix = build_index(netlist, reverse_tie_break);
    if (!ix.report.ok()) {
        throw std::invalid_argument("netlist '" + netlist.name + "' is invalid: " +
                                    ix.report.to_string());
    }
    return ix;
}

} // namespace

ValidationReport validate(const Netlist& netlist) {
    return build_index(netlist).report;
}

std::vector<std::string> garbage_wires(const Netlist& netlist) {
    return sorted_garbage(require_valid(netlist));
}

std::vector<std::pair<std::string, WireRole>> wire_roles(const Netlist& netlist) {
    const Index ix = require_valid(netlist);
    std::vector<std::pair<std::string, WireRole>> result;
    result.reserve(ix.wire_ids.size());
    for (size_t w = 0; w < ix.wire_ids.size(); ++w) {
        result.emplace_back(ix.wire_ids[w], ix.roles[w]);
    }
    return result;
}

bool structurally_equal(const Netlist& a, const Netlist& b) {
    if (a.name != b.name || a.inputs != b.inputs || a.constants != b.constants ||
        a.outputs != b.outputs || a.gates.size() != b.gates.size()) {
        return false;
    }
    auto sorted_gates = [](const Netlist& n) {
        std::vector<GateInstance> gates = n.gates;
        std::sort(gates.begin(), gates.end(),
                  [](const GateInstance& x, const GateInstance& y) { return x.id < y.id; });
        return gates;
    };
    return sorted_gates(a) == sorted_gates(b);
}

std::vector<uint8_t> pattern_bits(uint64_t pattern, size_t n) {
    std::vector<uint8_t> bits(n);
    for (size_t j = 0; j < n; ++j) {
        bits[j] = static_cast<uint8_t>((pattern >> (n - 1 - j)) & 1);
    }
    return bits;
}

Simulator::Simulator(const Netlist& netlist, SimOptions options) {
    Index ix = require_valid(netlist, options.reverse_tie_break);
    const std::vector<std::string> garbage_ids = sorted_garbage(ix);

    wire_ids_ = std::move(ix.wire_ids);
    index_ = std::move(ix.by_id);
    roles_ = std::move(ix.roles);
    const_values_ = std::move(ix.const_values);
    gate_order_ = std::move(ix.gate_topo);
    first_gate_wire_ = netlist.inputs.size() + netlist.constants.size();

    for (size_t w = 0; w < wire_ids_.size(); ++w) {
        switch (roles_[w]) {
        case WireRole::primary_input:
            primary_inputs_.push_back(w);
            input_side_.push_back(w);
            break;
        case WireRole::constant_zero:
        case WireRole::constant_one:
            input_side_.push_back(w);
            break;
        default:
            break;
        }
    }
    // Primary outputs in declared order; a declaration-role wire may also
    // be a primary output (a pass-through circuit).
    for (const std::string& id : netlist.outputs) {
        primary_outputs_.push_back(index_.at(id));
    }
    for (const std::string& id : garbage_ids) {
        garbage_.push_back(index_.at(id));
    }
    output_side_ = primary_outputs_;
    output_side_.insert(output_side_.end(), garbage_.begin(), garbage_.end());

    compiled_.reserve(gate_order_.size());
    for (size_t g : gate_order_) {
        const GateInstance& gate = netlist.gates[g];
        CompiledGate cg{};
        cg.kind = gate.kind;
        cg.arity = static_cast<uint8_t>(gate_arity(gate.kind));
        for (size_t pin = 0; pin < cg.arity; ++pin) {
            cg.in[pin] = static_cast<uint32_t>(index_.at(gate.inputs[pin]));
            cg.out[pin] = static_cast<uint32_t>(index_.at(gate.outputs[pin]));
        }
        compiled_.push_back(cg);
    }
}

std::optional<size_t> Simulator::wire_index(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Simulator::run_into(std::span<const uint8_t> inputs, Valuation& vals,
                         std::optional<size_t> fault) const {
    if (inputs.size() != primary_inputs_.size()) {
        std::ostringstream os;
        os << "expected " << primary_inputs_.size() << " primary input bits, got "
           << inputs.size();
        throw std::invalid_argument(os.str());
    }
    vals.assign(wire_ids_.size(), 0);
    for (size_t j = 0; j < primary_inputs_.size(); ++j) {
        vals[primary_inputs_[j]] = inputs[j] & 1;
    }
    for (size_t w = 0; w < first_gate_wire_; ++w) {
        if (roles_[w] == WireRole::constant_zero || roles_[w] == WireRole::constant_one) {
            vals[w] = const_values_[w];
        }
    }
    if (fault && *fault < first_gate_wire_) {
        vals[*fault] ^= 1;
    }
    for (const CompiledGate& gate : compiled_) {
        uint32_t pattern = 0;
        for (size_t pin = 0; pin < gate.arity; ++pin) {
            pattern = (pattern << 1) | vals[gate.in[pin]];
        }
        const uint32_t out = eval_pattern(gate.kind, pattern);
        bool fault_here = false;
        for (size_t pin = 0; pin < gate.arity; ++pin) {
            const uint32_t w = gate.out[pin];
            vals[w] = static_cast<uint8_t>((out >> (gate.arity - 1 - pin)) & 1);
            fault_here |= fault && *fault == w;
        }
        if (fault_here) {
            vals[*fault] ^= 1;
        }
    }
}

Valuation Simulator::run(std::span<const uint8_t> inputs) const {
    Valuation vals;
    run_into(inputs, vals, std::nullopt);
    return vals;
}

Valuation Simulator::run_with_fault(std::span<const uint8_t> inputs, size_t fault) const {
    Valuation vals;
    run_into(inputs, vals, fault);
    return vals;
}

Valuation Simulator::run_pattern(uint64_t pattern) const {
    const std::vector<uint8_t> bits = pattern_bits(pattern, primary_inputs_.size());
    return run(bits);
}

bool Simulator::value(const Valuation& valuation, std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        throw std::out_of_range("unknown wire '" + std::string(id) + "'");
    }
    return valuation[it->second] != 0;
}

int Simulator::parity(const Valuation& valuation, const std::vector<size_t>& lines) const {
    int parity = 0;
    for (size_t w : lines) {
        parity ^= valuation[w];
    }
    return parity;
}

Valuation simulate(const Netlist& netlist, std::span<const uint8_t> inputs) {
    return Simulator(netlist).run(inputs);
}

ParityCheckResult circuit_parity_holds(const Netlist& netlist, const ParityCheckOptions& options) {
    const Simulator sim(netlist);

    for (const GateInstance& gate : netlist.gates) {
        if (!gate_parity_preserving(gate.kind)) {
            ParityCheckResult result;
            result.status = ParityStatus::unsupported_gates;
            result.vectors = 0;
            return result;
        }
    }

    const size_t n = sim.primary_inputs().size();
    ParityCheckResult result;
    auto check_pattern = [&](uint64_t pattern) {
        const Valuation vals = sim.run_pattern(pattern);
        result.vectors++;
        if (sim.parity(vals, sim.input_side()) != sim.parity(vals, sim.output_side())) {
            result.status = ParityStatus::violated;
            result.counterexample = pattern;
            return false;
        }
        return true;
    };

    if (n <= static_cast<size_t>(options.exhaustive_bound)) {
        result.exhaustive = true;
        for (uint64_t pattern = 0; pattern < (uint64_t{1} << n); ++pattern) {
            if (!check_pattern(pattern)) {
                return result;
            }
        }
    } else {
        result.exhaustive = false;
        std::mt19937_64 rng(options.seed);
        const uint64_t mask = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        for (uint64_t i = 0; i < options.samples; ++i) {
            if (!check_pattern(rng() & mask)) {
                return result;
            }
        }
    }
    result.status = ParityStatus::holds;
    return result;
}

} // namespace revadd
