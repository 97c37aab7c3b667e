#pragma once

/// @file netlist_text.hpp
/// @brief Line-oriented text format (.rnl) for netlists: parser with
///        positioned diagnostics and a canonical serializer.
///
/// Grammar (one statement per line, `#` starts a comment, tokens are
/// whitespace-separated; `(`, `)` and `->` need no surrounding spaces):
///
///     circuit <name>
///     in <id>+
///     const0 <id>+
///     const1 <id>+
///     gate <KIND> <id> ( <in-wire>{arity} ) -> ( <out-wire>{arity} )
///     out <wire>+
///     garbage <wire>+        # optional documentation, checked
///     end
///
/// The `circuit` line must come first and `end` last; the statements in
/// between may appear in any order. Wire ids match
/// [A-Za-z_][A-Za-z0-9_]*. UTF-8, LF or CRLF accepted, LF emitted.

#include "revadd/netlist.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revadd {

/// Position of a token in the parsed text. Lines and columns are 1-based;
/// the column range is inclusive.
struct SourceSpan {
    int line = 0;
    int col_begin = 0;
    int col_end = 0;
    std::string token;
};

struct Diagnostic {
    SourceSpan span;
    std::string message;
};

/// "3:15: unknown gate kind 'MOG'"
[[nodiscard]] std::string to_string(const Diagnostic& diag);

struct ParseResult {
    /// Present when the grammar was intact, even if structural validation
    /// failed (the violations are then in `diagnostics`).
    std::optional<Netlist> netlist;
    std::vector<Diagnostic> diagnostics;

    [[nodiscard]] bool ok() const { return netlist.has_value() && diagnostics.empty(); }
};

/// Parses `.rnl` text. Reports every independent error it can find in one
/// pass; a netlist failing validate() is never accepted silently.
[[nodiscard]] ParseResult parse_netlist(std::string_view text);

/// Emits the grammar above: declarations first, gates in canonical
/// topological order (lexical tie-break on gate id), derived garbage as
/// documentation, LF line endings. parse_netlist(serialize(n)) is
/// structurally identical to n.
/// @throws std::invalid_argument if the netlist fails validate()
[[nodiscard]] std::string serialize(const Netlist& netlist);

} // namespace revadd
