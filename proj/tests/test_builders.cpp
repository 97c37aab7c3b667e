/// @file test_builders.cpp
/// @brief Blueprint tests for the five adder families against the integer
///        addition oracle, plus structure and parity-law checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revadd/builders.hpp"
#include "test_support.hpp"

#include <map>
#include <stdexcept>

using namespace revadd;

namespace {

// Independent integer-addition oracle: decodes the A/B/c0 interface
// (A then B, most significant bit first, carry-in last; sums S0..S{w-1}
// then carry-out) and compares every requested vector with a + b + c.
bool oracle_adds(const Simulator& sim, int width, uint64_t a, uint64_t b, int c) {
    std::vector<uint8_t> in;
    for (int i = width - 1; i >= 0; --i) {
        in.push_back(static_cast<uint8_t>((a >> i) & 1));
    }
    for (int i = width - 1; i >= 0; --i) {
        in.push_back(static_cast<uint8_t>((b >> i) & 1));
    }
    in.push_back(static_cast<uint8_t>(c));

    const Valuation vals = sim.run(in);
    uint64_t sum = 0;
    for (int i = 0; i < width; ++i) {
        sum |= static_cast<uint64_t>(vals[sim.primary_outputs()[static_cast<size_t>(i)]]) << i;
    }
    const uint64_t carry = vals[sim.primary_outputs()[static_cast<size_t>(width)]];
    return sum + (carry << width) == a + b + static_cast<uint64_t>(c);
}

bool oracle_adds_exhaustive(const Netlist& n, int width) {
    const Simulator sim(n);
    for (uint64_t a = 0; a < (uint64_t{1} << width); ++a) {
        for (uint64_t b = 0; b < (uint64_t{1} << width); ++b) {
            for (int c = 0; c <= 1; ++c) {
                if (!oracle_adds(sim, width, a, b, c)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::map<GateKind, int> kind_counts(const Netlist& n) {
    std::map<GateKind, int> counts;
    for (const GateInstance& gate : n.gates) {
        counts[gate.kind]++;
    }
    return counts;
}

} // namespace

TEST_CASE("every builder output is valid, parity-preserving-only and balanced") {
    const std::vector<Netlist> all = {build_ftfa(), build_rca(4), build_cla2(), build_csa4(),
                                      build_hsa16()};
    for (const Netlist& n : all) {
        CAPTURE(n.name);
        const ValidationReport report = validate(n);
        CAPTURE(report.to_string());
        CHECK(report.ok());
        for (const GateInstance& gate : n.gates) {
            CHECK(gate_parity_preserving(gate.kind));
        }
        CHECK(n.inputs.size() + n.constants.size() ==
              n.outputs.size() + garbage_wires(n).size());
    }
}

TEST_CASE("circuit parity law holds on every builder output") {
    for (const Netlist& n : {build_ftfa(), build_rca(4), build_cla2(), build_csa4()}) {
        CAPTURE(n.name);
        const ParityCheckResult result = circuit_parity_holds(n);
        CHECK(result.status == ParityStatus::holds);
        CHECK(result.exhaustive);
    }
    ParityCheckOptions sampled;
    sampled.samples = 512;
    const ParityCheckResult result = circuit_parity_holds(build_hsa16(), sampled);
    CHECK(result.status == ParityStatus::holds);
    CHECK(!result.exhaustive);
}

TEST_CASE("ftfa: structure and exhaustive addition") {
    const Netlist n = build_ftfa();
    CHECK(n.gates.size() == 2);
    CHECK(kind_counts(n) == std::map<GateKind, int>{{GateKind::MIG, 2}});
    CHECK(n.constants.size() == 2);
    CHECK(garbage_wires(n).size() == 3);
    CHECK(oracle_adds_exhaustive(n, 1));

    const Simulator sim(n);
    const Valuation v110 = sim.run(std::vector<uint8_t>{1, 1, 0});
    CHECK(sim.value(v110, "Sum") == false);
    CHECK(sim.value(v110, "Cout") == true);
}

TEST_CASE("rca: chained stages, metrics scaling and addition") {
    CHECK_THROWS_AS(static_cast<void>(build_rca(0)), std::invalid_argument);

    for (int width : {1, 2, 4}) {
        const Netlist n = build_rca(width);
        CAPTURE(width);
        CHECK(n.gates.size() == static_cast<size_t>(2 * width));
        CHECK(n.constants.size() == static_cast<size_t>(2 * width));
        CHECK(garbage_wires(n).size() == static_cast<size_t>(3 * width));
        CHECK(oracle_adds_exhaustive(n, width));
    }

    // width 1 degenerates to the full-adder inventory
    const Netlist one = build_rca(1);
    const Netlist fa = build_ftfa();
    CHECK(one.gates.size() == fa.gates.size());
    CHECK(one.constants.size() == fa.constants.size());
    CHECK(garbage_wires(one).size() == garbage_wires(fa).size());
}

TEST_CASE("cla2: exhaustive addition and the look-ahead carry identities") {
    const Netlist n = build_cla2();
    CHECK(kind_counts(n) == std::map<GateKind, int>{{GateKind::F2G, 5}, {GateKind::MIG, 6}});
    CHECK(n.constants.size() == 18);
    CHECK(garbage_wires(n).size() == 20);
    CHECK(oracle_adds_exhaustive(n, 2));

    const Simulator sim(n);
    for (uint64_t a = 0; a < 4; ++a) {
        for (uint64_t b = 0; b < 4; ++b) {
            for (int c = 0; c <= 1; ++c) {
                const std::vector<uint8_t> in = {static_cast<uint8_t>((a >> 1) & 1),
                                                 static_cast<uint8_t>(a & 1),
                                                 static_cast<uint8_t>((b >> 1) & 1),
                                                 static_cast<uint8_t>(b & 1),
                                                 static_cast<uint8_t>(c)};
                const Valuation vals = sim.run(in);
                const int p0 = static_cast<int>((a & 1) ^ (b & 1));
                const int g0 = static_cast<int>(a & b & 1);
                const int p1 = static_cast<int>(((a >> 1) ^ (b >> 1)) & 1);
                const int g1 = static_cast<int>((a >> 1) & (b >> 1) & 1);
                const int c1 = g0 ^ (p0 & c);
                const int c2 = g1 ^ (p1 & g0) ^ (p1 & p0 & c);
                CHECK(sim.value(vals, "c1") == (c1 != 0));
                CHECK(sim.value(vals, "c2") == (c2 != 0));
            }
        }
    }

    // 3 + 1 + 0 = 4: sums clear, carry set
    const Valuation vals = sim.run(std::vector<uint8_t>{1, 1, 0, 1, 0});
    CHECK(sim.value(vals, "S0") == false);
    CHECK(sim.value(vals, "S1") == false);
    CHECK(sim.value(vals, "c2") == true);
}

TEST_CASE("csa4: exhaustive addition and skip-mux equivalence with the ripple carry") {
    const Netlist n = build_csa4();
    CHECK(kind_counts(n) == std::map<GateKind, int>{
                                {GateKind::F2G, 1}, {GateKind::NFT, 4}, {GateKind::MIG, 8}});
    CHECK(n.constants.size() == 13);
    CHECK(garbage_wires(n).size() == 17);
    CHECK(oracle_adds_exhaustive(n, 4));

    const Simulator sim(n);
    for (uint64_t pattern = 0; pattern < 512; ++pattern) {
        const Valuation vals = sim.run_pattern(pattern);
        CHECK(sim.value(vals, "Cout") == sim.value(vals, "c4"));
    }

    // 15 + 0 + 1: full propagate chain
    const Simulator s(n);
    const Valuation vals = s.run(std::vector<uint8_t>{1, 1, 1, 1, 0, 0, 0, 0, 1});
    for (const char* sum : {"S0", "S1", "S2", "S3"}) {
        CHECK(s.value(vals, sum) == false);
    }
    CHECK(s.value(vals, "Cout") == true);
}

TEST_CASE("hsa16: structure and spot-checked addition") {
    const Netlist n = build_hsa16();
    CHECK(kind_counts(n) == std::map<GateKind, int>{
                                {GateKind::F2G, 4}, {GateKind::NFT, 16}, {GateKind::MIG, 32}});
    CHECK(n.gates.size() == 52);
    CHECK(n.constants.size() == 52);
    CHECK(garbage_wires(n).size() == 68);
    CHECK(n.inputs.size() == 33);
    CHECK(n.outputs.size() == 17);

    const Simulator sim(n);
    CHECK(oracle_adds(sim, 16, 0xFFFF, 0x0001, 0));
    CHECK(oracle_adds(sim, 16, 0xFFFF, 0xFFFF, 1));
    CHECK(oracle_adds(sim, 16, 0xAAAA, 0x5555, 0));
    CHECK(oracle_adds(sim, 16, 0, 0, 0));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        CHECK(oracle_adds(sim, 16, rng() & 0xFFFF, rng() & 0xFFFF,
                          static_cast<int>(rng() & 1)));
    }
}

TEST_CASE("family names and shapes") {
    CHECK(family_from_name("csa4") == AdderFamily::csa4);
    CHECK(!family_from_name("csa").has_value());
    CHECK(shape_of(AdderFamily::ftfa).width == 1);
    CHECK(shape_of(AdderFamily::cla2).width == 2);
    CHECK(shape_of(AdderFamily::csa4).width == 4);
    CHECK(shape_of(AdderFamily::hsa16).width == 16);
    CHECK(shape_of(AdderFamily::rca, 8).width == 8);
    CHECK_THROWS_AS(static_cast<void>(shape_of(AdderFamily::rca, 0)), std::invalid_argument);
    CHECK(structurally_equal(build_adder(AdderFamily::csa4), build_csa4()));
}
