#pragma once

/// @file builders.hpp
/// @brief Generators for the five fault-tolerant adder families, built
///        exclusively from parity-preserving gates.
///
/// All builders declare primary inputs as A (most significant bit first),
/// then B, then the carry-in c0, and primary outputs as S0..S{w-1}
/// followed by the carry-out. Every produced netlist passes validate()
/// and satisfies the circuit parity law.

#include "revadd/netlist.hpp"

#include <optional>
#include <string_view>

namespace revadd {

enum class AdderFamily : uint8_t { ftfa, rca, cla2, csa4, hsa16 };

[[nodiscard]] std::string_view family_name(AdderFamily family);
[[nodiscard]] std::optional<AdderFamily> family_from_name(std::string_view name);

/// Interface shape of an adder netlist: w sum bits plus a carry-out, with
/// a carry-in. Fixed-width families ignore the width argument.
struct AdderShape {
    AdderFamily family = AdderFamily::ftfa;
    int width = 1;

    friend bool operator==(const AdderShape&, const AdderShape&) = default;
};

/// Shape of a family; `width` is only consulted for rca.
/// @throws std::invalid_argument for rca width < 1
[[nodiscard]] AdderShape shape_of(AdderFamily family, int width = 0);

/// One-bit full adder from two MIG gates.
///
/// g1 = MIG(A, B, 0, 0) -> (gA, p, g, h) with p = A^B, g = AB, h = A!B;
/// g2 = MIG(p, Cin, g, h) -> (gp, Sum, Cout, gS). Two constants, three
/// garbage wires; Sum + 2 Cout = A + B + Cin.
[[nodiscard]] Netlist build_ftfa();

/// Ripple-carry adder: `width` full-adder stages chained on their carries.
/// 2n MIG gates, 2n constants, 3n garbage wires.
/// @throws std::invalid_argument for width < 1
[[nodiscard]] Netlist build_rca(int width);

/// Two-bit carry look-ahead adder. Incoming carries are produced from the
/// propagate/generate terms in parallel: c1 = g0 ^ p0 c0 and
/// c2 = g1 ^ p1 g0 ^ p1 p0 c0 (XOR realizes OR because the products are
/// pairwise disjoint). 6 MIG + 5 F2G gates; wires c1 and c2 carry the
/// look-ahead terms by those names.
[[nodiscard]] Netlist build_cla2();

/// Four-bit carry-skip adder: a ripple chain of four full-adder stages
/// plus a block-propagate AND tree (NFT gates) and an NFT used as the
/// 2:1 skip multiplexer. The mux output equals the ripple carry c4 on
/// every input; skipping changes delay, never value. 8 MIG + 4 NFT +
/// 1 F2G gates.
[[nodiscard]] Netlist build_csa4();

/// Sixteen-bit adder from four 4-bit carry-skip blocks; each block's
/// skip-mux output feeds the next block's carry-in.
[[nodiscard]] Netlist build_hsa16();

/// Dispatch by family; `width` is only consulted for rca.
[[nodiscard]] Netlist build_adder(AdderFamily family, int width = 0);

} // namespace revadd
