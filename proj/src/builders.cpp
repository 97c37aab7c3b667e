#include "revadd/builders.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace revadd {

std::string_view family_name(AdderFamily family) {
    switch (family) {
    case AdderFamily::ftfa:
        return "ftfa";
    case AdderFamily::rca:
        return "rca";
    case AdderFamily::cla2:
        return "cla2";
    case AdderFamily::csa4:
        return "csa4";
    case AdderFamily::hsa16:
        return "hsa16";
    }
    return "?";
}

std::optional<AdderFamily> family_from_name(std::string_view name) {
    for (AdderFamily family : {AdderFamily::ftfa, AdderFamily::rca, AdderFamily::cla2,
                               AdderFamily::csa4, AdderFamily::hsa16}) {
        if (family_name(family) == name) {
            return family;
        }
    }
    return std::nullopt;
}

AdderShape shape_of(AdderFamily family, int width) {
    switch (family) {
    case AdderFamily::ftfa:
        return {family, 1};
    case AdderFamily::rca:
        if (width < 1) {
            throw std::invalid_argument("rca width must be at least 1");
        }
        return {family, width};
    case AdderFamily::cla2:
        return {family, 2};
    case AdderFamily::csa4:
        return {family, 4};
    case AdderFamily::hsa16:
        return {family, 16};
    }
    throw std::invalid_argument("unknown adder family");
}

namespace {

std::string wire(const std::string& prefix, const char* base) { return prefix + base; }

// Appends the two-MIG full-adder stage:
//   <prefix>g1 = MIG(a, b, 0, 0)      -> (ga, p, g, h)
//   <prefix>g2 = MIG(p, cin, g, h)    -> (px, sum, cout, gs)
// ga and gs are always garbage; px re-exposes p for skip logic and is
// garbage when nothing consumes it.
struct StageWires {
    std::string sum;
    std::string carry_out;
    std::string p_exposed;
};

StageWires append_stage(Netlist& n, const std::string& prefix, const std::string& a,
                        const std::string& b, const std::string& cin, const std::string& sum,
                        const std::string& cout) {
    n.add_constant(wire(prefix, "k0"), false);
    n.add_constant(wire(prefix, "k1"), false);
    n.add_gate(wire(prefix, "g1"), GateKind::MIG, {a, b, wire(prefix, "k0"), wire(prefix, "k1")},
               {wire(prefix, "ga"), wire(prefix, "p"), wire(prefix, "g"), wire(prefix, "h")});
    n.add_gate(wire(prefix, "g2"), GateKind::MIG,
               {wire(prefix, "p"), cin, wire(prefix, "g"), wire(prefix, "h")},
               {wire(prefix, "px"), sum, cout, wire(prefix, "gs")});
    return {sum, cout, wire(prefix, "px")};
}

// Appends a 4-bit carry-skip block. a/b are bit wires (index 0 = least
// significant), cin the block carry-in; sums and the skip-mux output get
// the given names. Gate and internal wire names are prefixed.
void append_csa4_block(Netlist& n, const std::string& prefix,
                       const std::array<std::string, 4>& a, const std::array<std::string, 4>& b,
                       const std::string& cin, const std::array<std::string, 4>& sums,
                       const std::string& skip_out) {
    // fan the carry-in out legally: one copy for stage 0, one for the mux
    n.add_constant(wire(prefix, "f1_k0"), false);
    n.add_constant(wire(prefix, "f1_k1"), false);
    n.add_gate(wire(prefix, "f1"), GateKind::F2G,
               {cin, wire(prefix, "f1_k0"), wire(prefix, "f1_k1")},
               {wire(prefix, "c0a"), wire(prefix, "c0b"), wire(prefix, "f1_sp")});

    std::array<std::string, 4> p_exposed;
    std::string carry = wire(prefix, "c0a");
    for (int i = 0; i < 4; ++i) {
        const std::string stage = prefix + "s" + std::to_string(i) + "_";
        const std::string cout = wire(prefix, ("c" + std::to_string(i + 1)).c_str());
        const StageWires wires = append_stage(n, stage, a[static_cast<size_t>(i)],
                                              b[static_cast<size_t>(i)], carry,
                                              sums[static_cast<size_t>(i)], cout);
        p_exposed[static_cast<size_t>(i)] = wires.p_exposed;
        carry = cout;
    }

    // block propagate Pb = p0 p1 p2 p3 via the NFT third line (R = BC when A = 0)
    auto nft_and = [&](const char* id, const std::string& x, const std::string& y,
                       const std::string& product) {
        n.add_constant(wire(prefix, (std::string(id) + "_k0").c_str()), false);
        n.add_gate(wire(prefix, id), GateKind::NFT,
                   {wire(prefix, (std::string(id) + "_k0").c_str()), x, y},
                   {wire(prefix, (std::string(id) + "_p").c_str()),
                    wire(prefix, (std::string(id) + "_q").c_str()), product});
    };
    nft_and("n1", p_exposed[0], p_exposed[1], wire(prefix, "pp01"));
    nft_and("n2", p_exposed[2], p_exposed[3], wire(prefix, "pp23"));
    nft_and("n3", wire(prefix, "pp01"), wire(prefix, "pp23"), wire(prefix, "pblk"));

    // skip mux: NFT(c4, c0, Pb) third line is Pb c0 ^ !Pb c4, i.e. the
    // block carry selected by the block propagate
    n.add_gate(wire(prefix, "n4"), GateKind::NFT,
               {carry, wire(prefix, "c0b"), wire(prefix, "pblk")},
               {wire(prefix, "n4_p"), wire(prefix, "n4_q"), skip_out});
}

} // namespace

Netlist build_ftfa() {
    Netlist n;
    n.name = "ftfa";
    n.add_input("A");
    n.add_input("B");
    n.add_input("Cin");
    n.add_constant("k0", false);
    n.add_constant("k1", false);
    n.add_gate("g1", GateKind::MIG, {"A", "B", "k0", "k1"}, {"gA", "p", "g", "h"});
    n.add_gate("g2", GateKind::MIG, {"p", "Cin", "g", "h"}, {"gp", "Sum", "Cout", "gS"});
    n.declare_output("Sum");
    n.declare_output("Cout");
    return n;
}

Netlist build_rca(int width) {
    if (width < 1) {
        throw std::invalid_argument("rca width must be at least 1");
    }
    Netlist n;
    n.name = "rca" + std::to_string(width);
    for (int i = width - 1; i >= 0; --i) {
        n.add_input("A" + std::to_string(i));
    }
    for (int i = width - 1; i >= 0; --i) {
        n.add_input("B" + std::to_string(i));
    }
    n.add_input("c0");

    std::string carry = "c0";
    for (int i = 0; i < width; ++i) {
        const std::string stage = "s" + std::to_string(i) + "_";
        const std::string cout = i + 1 == width ? "Cout" : "c" + std::to_string(i + 1);
        append_stage(n, stage, "A" + std::to_string(i), "B" + std::to_string(i), carry,
                     "S" + std::to_string(i), cout);
        carry = cout;
    }
    for (int i = 0; i < width; ++i) {
        n.declare_output("S" + std::to_string(i));
    }
    n.declare_output("Cout");
    return n;
}

Netlist build_cla2() {
    Netlist n;
    n.name = "cla2";
    for (const char* id : {"A1", "A0", "B1", "B0", "c0"}) {
        n.add_input(id);
    }
    auto consts = [&](const std::string& gate, int count) {
        std::vector<std::string> ids;
        for (int k = 0; k < count; ++k) {
            ids.push_back(gate + "_k" + std::to_string(k));
            n.add_constant(ids.back(), false);
        }
        return ids;
    };

    // propagate/generate per bit: p = A^B, g = AB
    auto m1k = consts("m1", 2);
    n.add_gate("m1", GateKind::MIG, {"A0", "B0", m1k[0], m1k[1]}, {"m1_ga", "p0", "g0", "m1_h"});
    auto m2k = consts("m2", 2);
    n.add_gate("m2", GateKind::MIG, {"A1", "B1", m2k[0], m2k[1]}, {"m2_ga", "p1", "g1", "m2_h"});

    // two legal copies of the carry-in
    auto f1k = consts("f1", 2);
    n.add_gate("f1", GateKind::F2G, {"c0", f1k[0], f1k[1]}, {"c0a", "c0b", "f1_sp"});

    // stage 0: S0 = p0 ^ c0, t1 = p0 c0, c1 = g0 ^ t1
    auto m3k = consts("m3", 2);
    n.add_gate("m3", GateKind::MIG, {"p0", "c0a", m3k[0], m3k[1]}, {"p0x", "S0", "t1", "m3_h"});
    auto f2k = consts("f2", 1);
    n.add_gate("f2", GateKind::F2G, {"g0", "t1", f2k[0]}, {"g0x", "c1", "f2_sp"});

    // look-ahead products: t2 = p1 g0, t3 = p1 p0, t4 = p1 p0 c0
    auto m4k = consts("m4", 2);
    n.add_gate("m4", GateKind::MIG, {"p1", "g0x", m4k[0], m4k[1]}, {"p1x", "m4_q", "t2", "m4_h"});
    auto m5k = consts("m5", 2);
    n.add_gate("m5", GateKind::MIG, {"p1x", "p0x", m5k[0], m5k[1]}, {"p1y", "m5_q", "t3", "m5_h"});
    auto m6k = consts("m6", 2);
    n.add_gate("m6", GateKind::MIG, {"t3", "c0b", m6k[0], m6k[1]}, {"m6_p", "m6_q", "t4", "m6_h"});

    // c2 = g1 ^ t2 ^ t4; the three products are pairwise disjoint, so the
    // XORs realize the OR of the carry terms
    auto f3k = consts("f3", 1);
    n.add_gate("f3", GateKind::F2G, {"g1", "t2", f3k[0]}, {"f3_p", "u", "f3_sp"});
    auto f4k = consts("f4", 1);
    n.add_gate("f4", GateKind::F2G, {"u", "t4", f4k[0]}, {"f4_p", "c2", "f4_sp"});

    // S1 = p1 ^ c1
    auto f5k = consts("f5", 1);
    n.add_gate("f5", GateKind::F2G, {"p1y", "c1", f5k[0]}, {"f5_p", "S1", "f5_sp"});

    n.declare_output("S0");
    n.declare_output("S1");
    n.declare_output("c2");
    return n;
}

Netlist build_csa4() {
    Netlist n;
    n.name = "csa4";
    for (int i = 3; i >= 0; --i) {
        n.add_input("A" + std::to_string(i));
    }
    for (int i = 3; i >= 0; --i) {
        n.add_input("B" + std::to_string(i));
    }
    n.add_input("c0");

    append_csa4_block(n, "",
                      {"A0", "A1", "A2", "A3"},
                      {"B0", "B1", "B2", "B3"},
                      "c0",
                      {"S0", "S1", "S2", "S3"},
                      "Cout");

    for (int i = 0; i < 4; ++i) {
        n.declare_output("S" + std::to_string(i));
    }
    n.declare_output("Cout");
    return n;
}

Netlist build_hsa16() {
    Netlist n;
    n.name = "hsa16";
    for (int i = 15; i >= 0; --i) {
        n.add_input("A" + std::to_string(i));
    }
    for (int i = 15; i >= 0; --i) {
        n.add_input("B" + std::to_string(i));
    }
    n.add_input("c0");

    std::string carry = "c0";
    for (int block = 0; block < 4; ++block) {
        const std::string prefix = "b" + std::to_string(block) + "_";
        std::array<std::string, 4> a;
        std::array<std::string, 4> b;
        std::array<std::string, 4> sums;
        for (int i = 0; i < 4; ++i) {
            const std::string bit = std::to_string(4 * block + i);
            a[static_cast<size_t>(i)] = "A" + bit;
            b[static_cast<size_t>(i)] = "B" + bit;
            sums[static_cast<size_t>(i)] = "S" + bit;
        }
        const std::string skip_out = block == 3 ? "Cout" : prefix + "cskip";
        append_csa4_block(n, prefix, a, b, carry, sums, skip_out);
        carry = skip_out;
    }

    for (int i = 0; i < 16; ++i) {
        n.declare_output("S" + std::to_string(i));
    }
    n.declare_output("Cout");
    return n;
}

Netlist build_adder(AdderFamily family, int width) {
    switch (family) {
    case AdderFamily::ftfa:
        return build_ftfa();
    case AdderFamily::rca:
        return build_rca(width);
    case AdderFamily::cla2:
        return build_cla2();
    case AdderFamily::csa4:
        return build_csa4();
    case AdderFamily::hsa16:
        return build_hsa16();
    }
    throw std::invalid_argument("unknown adder family");
}

} // namespace revadd
