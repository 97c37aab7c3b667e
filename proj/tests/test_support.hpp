#pragma once

/// @file test_support.hpp
/// @brief Shared test helpers: a seeded generator of random valid netlists.

#include "revadd/netlist.hpp"

#include <random>
#include <string>

namespace revadd::testing {

/// Builds a random netlist that satisfies every structural rule: gates
/// consume distinct, previously-unconsumed wires (no fanout, acyclic by
/// construction) and a random subset of the leftover wires becomes the
/// primary outputs.
inline Netlist random_valid_netlist(uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rand_below = [&](size_t n) { return static_cast<size_t>(rng() % n); };

    Netlist n;
    n.name = "rand_" + std::to_string(seed);

    int next_wire = 0;
    auto fresh = [&]() { return "w" + std::to_string(next_wire++); };

    std::vector<std::string> pool; // unconsumed wires, available as gate inputs
    const size_t input_count = 1 + rand_below(5);
    for (size_t i = 0; i < input_count; ++i) {
        n.add_input(fresh());
        pool.push_back(n.inputs.back());
    }
    const size_t const_count = rand_below(4);
    for (size_t i = 0; i < const_count; ++i) {
        n.add_constant(fresh(), rng() % 2 == 0);
        pool.push_back(n.constants.back().first);
    }

    const size_t gate_count = rand_below(9);
    for (size_t g = 0; g < gate_count; ++g) {
        const GateKind kind = all_gate_kinds[rand_below(all_gate_kinds.size())];
        const size_t arity = static_cast<size_t>(gate_arity(kind));
        while (pool.size() < arity) {
            n.add_constant(fresh(), rng() % 2 == 0);
            pool.push_back(n.constants.back().first);
        }
        std::vector<std::string> ins;
        for (size_t pin = 0; pin < arity; ++pin) {
            const size_t pick = rand_below(pool.size());
            ins.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        std::vector<std::string> outs;
        for (size_t pin = 0; pin < arity; ++pin) {
            outs.push_back(fresh());
            pool.push_back(outs.back());
        }
        n.add_gate("g" + std::to_string(g), kind, std::move(ins), std::move(outs));
    }

    for (const std::string& id : pool) {
        if (rng() % 2 == 0) {
            n.declare_output(id);
        }
    }
    return n;
}

} // namespace revadd::testing
