#include "revadd/gates.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace revadd {

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind kind : all_gate_kinds) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string to_string(const CostVector& cost) {
    std::ostringstream os;
    os << cost.alpha << "a+" << cost.beta << "b+" << cost.delta << "d";
    return os.str();
}

std::vector<uint8_t> eval_gate(GateKind kind, std::span<const uint8_t> inputs) {
    const size_t arity = static_cast<size_t>(gate_arity(kind));
    if (inputs.size() != arity) {
        std::ostringstream os;
        os << "gate " << gate_name(kind) << " expects " << arity << " inputs, got "
           << inputs.size();
        throw std::invalid_argument(os.str());
    }
    const uint8_t a = inputs[0] & 1;
    const uint8_t b = arity > 1 ? inputs[1] & 1 : 0;
    const uint8_t c = arity > 2 ? inputs[2] & 1 : 0;
    const uint8_t d = arity > 3 ? inputs[3] & 1 : 0;

    switch (kind) {
    case GateKind::FG:
        return {a, static_cast<uint8_t>(a ^ b)};
    case GateKind::F2G:
        return {a, static_cast<uint8_t>(a ^ b), static_cast<uint8_t>(a ^ c)};
    case GateKind::FRG:
        // controlled swap: A low passes B,C through, A high exchanges them
        return {a, a ? c : b, a ? b : c};
    case GateKind::TG:
        return {a, b, static_cast<uint8_t>((a & b) ^ c)};
    case GateKind::PG:
        return {a, static_cast<uint8_t>(a ^ b), static_cast<uint8_t>((a & b) ^ c)};
    case GateKind::NFT:
        return {static_cast<uint8_t>(a ^ b),
                static_cast<uint8_t>(((b ^ 1) & c) ^ (a & (c ^ 1))),
                static_cast<uint8_t>((b & c) ^ (a & (c ^ 1)))};
    case GateKind::IG:
        return {a, static_cast<uint8_t>(a ^ b), static_cast<uint8_t>((a & b) ^ c),
                static_cast<uint8_t>((b & d) ^ ((b ^ 1) & (a ^ d)))};
    case GateKind::MIG:
        return {a, static_cast<uint8_t>(a ^ b), static_cast<uint8_t>((a & b) ^ c),
                static_cast<uint8_t>((a & (b ^ 1)) ^ d)};
    }
    throw std::invalid_argument("unknown gate kind");
}

uint32_t eval_pattern(GateKind kind, uint32_t pattern) {
    const int arity = gate_arity(kind);
    std::array<uint8_t, 4> in{};
    for (int i = 0; i < arity; ++i) {
        in[static_cast<size_t>(i)] = static_cast<uint8_t>((pattern >> (arity - 1 - i)) & 1);
    }
    const std::vector<uint8_t> out =
        eval_gate(kind, std::span<const uint8_t>(in.data(), static_cast<size_t>(arity)));
    uint32_t result = 0;
    for (int i = 0; i < arity; ++i) {
        result |= static_cast<uint32_t>(out[static_cast<size_t>(i)]) << (arity - 1 - i);
    }
    return result;
}

TruthTable truth_table(GateKind kind) {
    const int arity = gate_arity(kind);
    TruthTable table;
    table.arity = arity;
    table.mapping.resize(size_t{1} << arity);
    for (uint32_t pattern = 0; pattern < (uint32_t{1} << arity); ++pattern) {
        table.mapping[pattern] = static_cast<uint16_t>(eval_pattern(kind, pattern));
    }
    return table;
}

namespace {

void require_well_formed(const TruthTable& table) {
    if (table.arity < 0 || table.arity > 16) {
        throw std::invalid_argument("truth table arity out of range");
    }
    const size_t expected = size_t{1} << table.arity;
    if (table.mapping.size() != expected) {
        std::ostringstream os;
        os << "truth table of arity " << table.arity << " must have " << expected
           << " entries, has " << table.mapping.size();
        throw std::invalid_argument(os.str());
    }
    for (uint16_t entry : table.mapping) {
        if (entry >= expected) {
            std::ostringstream os;
            os << "truth table entry " << entry << " out of range for arity " << table.arity;
            throw std::invalid_argument(os.str());
        }
    }
}

} // namespace

bool is_bijective(const TruthTable& table) {
    require_well_formed(table);
    std::vector<bool> seen(table.mapping.size(), false);
    for (uint16_t entry : table.mapping) {
        if (seen[entry]) {
            return false;
        }
        seen[entry] = true;
    }
    return true;
}

bool is_parity_preserving(const TruthTable& table) {
    require_well_formed(table);
    for (size_t pattern = 0; pattern < table.mapping.size(); ++pattern) {
        const int in_parity = std::popcount(pattern) & 1;
        const int out_parity = std::popcount(static_cast<unsigned>(table.mapping[pattern])) & 1;
        if (in_parity != out_parity) {
            return false;
        }
    }
    return true;
}

} // namespace revadd
