#include "revadd/reports.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace revadd {

namespace {

using nlohmann::json;

std::string coverage_string(const FaultObservation& obs) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << obs.coverage() << " (" << obs.detected << "/"
       << obs.detected + obs.undetected << ")";
    return os.str();
}

json cost_json(const CostVector& cost) {
    return json{{"alpha", cost.alpha}, {"beta", cost.beta}, {"delta", cost.delta}};
}

json inventory_json(const Inventory& inventory) {
    json j = json::object();
    for (const auto& [kind, count] : inventory) {
        j[std::string(gate_name(kind))] = count;
    }
    return j;
}

json metrics_to_json(const MetricsRecord& record) {
    return json{{"gates", inventory_json(record.gate_counts)},
                {"total_gates", record.total_gates},
                {"constant_inputs", record.constant_inputs},
                {"garbage_outputs", record.garbage_outputs},
                {"cost", cost_json(record.cost)}};
}

std::string bit_string(uint64_t pattern, uint64_t width) {
    std::string bits;
    for (uint64_t i = 0; i < width; ++i) {
        bits.push_back((pattern >> (width - 1 - i)) & 1 ? '1' : '0');
    }
    return bits;
}

json observation_json(const FaultObservation& obs, uint64_t input_width) {
    json examples = json::array();
    for (const UndetectedFault& fault : obs.examples) {
        examples.push_back(
            json{{"wire", fault.wire}, {"vector", bit_string(fault.vector, input_width)}});
    }
    return json{{"detected", obs.detected},
                {"undetected", obs.undetected},
                {"coverage", obs.coverage()},
                {"examples", examples}};
}

} // namespace

std::string inventory_to_string(const Inventory& inventory) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [kind, count] : inventory) {
        if (count == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        os << count << " " << gate_name(kind);
        first = false;
    }
    if (first) {
        os << "none";
    }
    return os.str();
}

std::string metrics_text(const std::string& circuit, const MetricsRecord& record) {
    std::ostringstream os;
    os << "circuit " << circuit << "\n";
    os << "  gates:           " << record.total_gates;
    if (record.total_gates > 0) {
        os << " (" << inventory_to_string(record.gate_counts) << ")";
    }
    os << "\n";
    os << "  constant inputs: " << record.constant_inputs << "\n";
    os << "  garbage outputs: " << record.garbage_outputs << "\n";
    os << "  cost:            " << to_string(record.cost) << "\n";
    return os.str();
}

std::string metrics_json(const std::string& circuit, const MetricsRecord& record) {
    const json j = {{"circuit", circuit}, {"metrics", metrics_to_json(record)}};
    return j.dump(2) + "\n";
}

std::string comparison_text(const ComparisonTable& table) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "design" << std::setw(28) << "printed inventory"
       << std::setw(7) << "gates" << std::setw(15) << "cost" << std::setw(15) << "recomputed"
       << std::setw(7) << "const" << std::setw(9) << "garbage" << "status" << "\n";
    os << std::string(114, '-') << "\n";
    for (const ComparisonRow& row : table.rows) {
        os << std::left << std::setw(18) << row.printed.design << std::setw(28)
           << inventory_to_string(row.printed.inventory) << std::setw(7)
           << row.printed.printed_gate_total << std::setw(15) << to_string(row.printed.printed_cost)
           << std::setw(15) << to_string(row.recomputed_cost) << std::setw(7)
           << row.printed.printed_constants << std::setw(9) << row.printed.printed_garbage
           << row_status_name(row.status) << "\n";
        if (row.measured) {
            const MetricsRecord& m = *row.measured;
            os << "    measured: " << m.total_gates << " gates ("
               << inventory_to_string(m.gate_counts) << "), " << m.constant_inputs
               << " constants, " << m.garbage_outputs << " garbage, " << to_string(m.cost)
               << "\n";
        }
        for (const std::string& note : row.notes) {
            os << "    note: " << note << "\n";
        }
    }
    return os.str();
}

std::string comparison_json(const ComparisonTable& table) {
    json rows = json::array();
    for (const ComparisonRow& row : table.rows) {
        json r = {{"design", row.printed.design},
                  {"printed",
                   {{"inventory", inventory_json(row.printed.inventory)},
                    {"gates", row.printed.printed_gate_total},
                    {"cost", cost_json(row.printed.printed_cost)},
                    {"constant_inputs", row.printed.printed_constants},
                    {"garbage_outputs", row.printed.printed_garbage}}},
                  {"recomputed_cost", cost_json(row.recomputed_cost)},
                  {"cost_consistent", row.cost_consistent},
                  {"status", std::string(row_status_name(row.status))},
                  {"notes", row.notes}};
        r["measured"] = row.measured ? metrics_to_json(*row.measured) : json(nullptr);
        rows.push_back(std::move(r));
    }
    const json j = {{"table1", rows}};
    return j.dump(2) + "\n";
}

std::string fault_text(const FaultReport& report) {
    std::ostringstream os;
    os << "circuit " << report.circuit << ": " << report.wires << " wires x " << report.vectors
       << " vectors = " << report.injections << " injections"
       << (report.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    os << "  outputs+garbage observation: coverage " << coverage_string(report.full) << "\n";
    os << "  outputs-only observation:    coverage " << coverage_string(report.outputs_only)
       << "\n";
    for (const UndetectedFault& fault : report.full.examples) {
        os << "  undetected at outputs+garbage: wire " << fault.wire << ", vector "
           << bit_string(fault.vector, report.primary_inputs) << "\n";
    }
    return os.str();
}

std::string fault_json(const FaultReport& report) {
    const json j = {
        {"circuit", report.circuit},
        {"wires", report.wires},
        {"vectors", report.vectors},
        {"exhaustive", report.exhaustive},
        {"injections", report.injections},
        {"observed_at_outputs_and_garbage", observation_json(report.full, report.primary_inputs)},
        {"observed_at_outputs_only",
         observation_json(report.outputs_only, report.primary_inputs)},
    };
    return j.dump(2) + "\n";
}

std::string verify_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify " << report.circuit << " (" << family_name(report.shape.family) << ", width "
       << report.shape.width << "): " << (report.pass ? "PASS" : "FAIL") << ", " << report.vectors
       << " vectors" << (report.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    if (report.counterexample) {
        const Counterexample& cx = *report.counterexample;
        os << "  counterexample: a=" << cx.a << " b=" << cx.b << " c=" << cx.carry_in
           << " -> got sum=" << cx.got_sum << " carry=" << cx.got_carry << ", expected "
           << cx.a + cx.b + static_cast<uint64_t>(cx.carry_in) << "\n";
    }
    return os.str();
}

std::string verify_json(const VerifyReport& report) {
    json j = {{"circuit", report.circuit},
              {"family", std::string(family_name(report.shape.family))},
              {"width", report.shape.width},
              {"pass", report.pass},
              {"vectors", report.vectors},
              {"exhaustive", report.exhaustive}};
    if (report.counterexample) {
        const Counterexample& cx = *report.counterexample;
        j["counterexample"] = {{"a", cx.a},
                               {"b", cx.b},
                               {"carry_in", cx.carry_in},
                               {"got_sum", cx.got_sum},
                               {"got_carry", cx.got_carry},
                               {"expected", cx.a + cx.b + static_cast<uint64_t>(cx.carry_in)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump(2) + "\n";
}

} // namespace revadd
