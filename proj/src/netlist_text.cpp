#include "revadd/netlist_text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace revadd {

std::string to_string(const Diagnostic& diag) {
    std::ostringstream os;
    os << diag.span.line << ":" << diag.span.col_begin << ": " << diag.message;
    return os.str();
}

namespace {

struct Token {
    std::string text;
    SourceSpan span;
};

bool identifier_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}

bool identifier_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        tokenize_lines();
        for (const std::vector<Token>& line : lines_) {
            parse_statement(line);
        }
        if (!seen_circuit_) {
            error(eof_span(), "expected 'circuit' header");
        }
        if (!seen_end_) {
            error(eof_span(), "missing 'end'");
        }
        resolve_references();

        ParseResult result;
        if (grammar_errors_ == 0) {
            merge_validation();
            result.netlist = std::move(netlist_);
        }
        result.diagnostics = std::move(diagnostics_);
        return result;
    }

  private:
    void tokenize_lines() {
        int line_no = 1;
        size_t pos = 0;
        while (pos <= text_.size()) {
            size_t eol = text_.find('\n', pos);
            std::string_view line = eol == std::string_view::npos
                                        ? text_.substr(pos)
                                        : text_.substr(pos, eol - pos);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            tokenize_line(line, line_no);
            last_line_ = line_no;
            if (eol == std::string_view::npos) {
                break;
            }
            pos = eol + 1;
            line_no++;
        }
    }

    void tokenize_line(std::string_view line, int line_no) {
        std::vector<Token> tokens;
        size_t col = 0;
        while (col < line.size()) {
            const char ch = line[col];
            if (ch == '#') {
                break;
            }
            if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
                col++;
                continue;
            }
            const size_t begin = col;
            if (identifier_start(ch)) {
                while (col < line.size() && identifier_char(line[col])) {
                    col++;
                }
            } else if (ch == '(' || ch == ')') {
                col++;
            } else if (ch == '-' && col + 1 < line.size() && line[col + 1] == '>') {
                col += 2;
            } else {
                col++;
                error(span(line_no, begin, col, line.substr(begin, col - begin)),
                      "unexpected character '" + std::string(1, ch) + "'");
                continue;
            }
            tokens.push_back({std::string(line.substr(begin, col - begin)),
                              span(line_no, begin, col, line.substr(begin, col - begin))});
        }
        if (!tokens.empty()) {
            lines_.push_back(std::move(tokens));
        }
    }

    static SourceSpan span(int line, size_t begin, size_t end, std::string_view token) {
        return {line, static_cast<int>(begin) + 1, static_cast<int>(end), std::string(token)};
    }

    SourceSpan eof_span() const { return {last_line_, 1, 1, ""}; }

    void error(const SourceSpan& at, std::string message) {
        grammar_errors_++;
        diagnostics_.push_back({at, std::move(message)});
    }

    // Structural problem: reported, but the netlist is still returned.
    void structural(const SourceSpan& at, std::string message) {
        diagnostics_.push_back({at, std::move(message)});
    }

    void parse_statement(const std::vector<Token>& tokens) {
        const Token& head = tokens.front();
        if (seen_end_) {
            error(head.span, "unexpected statement after 'end'");
            return;
        }
        if (!seen_circuit_ && head.text != "circuit") {
            error(head.span, "expected 'circuit' header before '" + head.text + "'");
            return;
        }
        if (head.text == "circuit") {
            parse_circuit(tokens);
        } else if (head.text == "in") {
            for (const Token& token : identifiers(tokens)) {
                define(token);
                netlist_.add_input(token.text);
            }
        } else if (head.text == "const0" || head.text == "const1") {
            const bool value = head.text == "const1";
            for (const Token& token : identifiers(tokens)) {
                define(token);
                netlist_.add_constant(token.text, value);
            }
        } else if (head.text == "gate") {
            parse_gate(tokens);
        } else if (head.text == "out") {
            for (const Token& token : identifiers(tokens)) {
                reference(token);
                netlist_.declare_output(token.text);
            }
        } else if (head.text == "garbage") {
            for (const Token& token : identifiers(tokens)) {
                reference(token);
                netlist_.declared_garbage.push_back(token.text);
            }
        } else if (head.text == "end") {
            if (tokens.size() > 1) {
                error(tokens[1].span, "unexpected trailing tokens after 'end'");
            }
            seen_end_ = true;
        } else {
            error(head.span, "unknown statement '" + head.text + "'");
        }
    }

    void parse_circuit(const std::vector<Token>& tokens) {
        if (seen_circuit_) {
            error(tokens.front().span, "duplicate 'circuit' statement");
            return;
        }
        seen_circuit_ = true;
        if (tokens.size() < 2 || !identifier_start(tokens[1].text[0])) {
            error(tokens.front().span, "expected circuit name");
            return;
        }
        netlist_.name = tokens[1].text;
        if (tokens.size() > 2) {
            error(tokens[2].span, "unexpected trailing tokens after circuit name");
        }
    }

    // Identifier list of an `in`/`const*`/`out`/`garbage` statement.
    std::vector<Token> identifiers(const std::vector<Token>& tokens) {
        std::vector<Token> ids;
        for (size_t i = 1; i < tokens.size(); ++i) {
            if (!identifier_start(tokens[i].text[0])) {
                error(tokens[i].span, "expected identifier, got '" + tokens[i].text + "'");
                continue;
            }
            ids.push_back(tokens[i]);
        }
        if (ids.empty()) {
            error(tokens.front().span,
                  "'" + tokens.front().text + "' needs at least one wire id");
        }
        return ids;
    }

    void parse_gate(const std::vector<Token>& tokens) {
        size_t i = 1;
        auto next = [&]() -> const Token* { return i < tokens.size() ? &tokens[i] : nullptr; };

        const Token* kind_token = next();
        if (kind_token == nullptr) {
            error(tokens.front().span, "expected gate kind");
            return;
        }
        const std::optional<GateKind> kind = gate_kind_from_name(kind_token->text);
        if (!kind) {
            error(kind_token->span, "unknown gate kind '" + kind_token->text + "'");
            return;
        }
        i++;
        const Token* id_token = next();
        if (id_token == nullptr || !identifier_start(id_token->text[0])) {
            error(kind_token->span, "expected gate id after kind");
            return;
        }
        if (!gate_ids_.emplace(id_token->text, id_token->span).second) {
            error(id_token->span, "duplicate gate id '" + id_token->text + "'");
        }
        i++;

        auto pin_list = [&](const char* side) -> std::optional<std::vector<Token>> {
            const Token* open = next();
            if (open == nullptr || open->text != "(") {
                error(open ? open->span : tokens.back().span,
                      std::string("expected '(' before the ") + side + " of gate '" +
                          id_token->text + "'");
                return std::nullopt;
            }
            i++;
            std::vector<Token> pins;
            while (true) {
                const Token* token = next();
                if (token == nullptr) {
                    error(tokens.back().span, std::string("expected ')' after the ") + side +
                                                  " of gate '" + id_token->text + "'");
                    return std::nullopt;
                }
                if (token->text == ")") {
                    i++;
                    return pins;
                }
                if (!identifier_start(token->text[0])) {
                    error(token->span, "expected wire id, got '" + token->text + "'");
                    return std::nullopt;
                }
                pins.push_back(*token);
                i++;
            }
        };

        const auto ins = pin_list("inputs");
        if (!ins) {
            return;
        }
        const Token* arrow = next();
        if (arrow == nullptr || arrow->text != "->") {
            error(arrow ? arrow->span : tokens.back().span,
                  "expected '->' between the pin lists of gate '" + id_token->text + "'");
            return;
        }
        i++;
        const auto outs = pin_list("outputs");
        if (!outs) {
            return;
        }
        if (const Token* extra = next()) {
            error(extra->span, "unexpected trailing tokens after gate '" + id_token->text + "'");
        }

        const size_t arity = static_cast<size_t>(gate_arity(*kind));
        if (ins->size() != arity) {
            std::ostringstream os;
            os << "gate '" << id_token->text << "': " << gate_name(*kind) << " takes " << arity
               << " inputs, got " << ins->size();
            error(ins->empty() ? id_token->span : ins->front().span, os.str());
            return;
        }
        if (outs->size() != arity) {
            std::ostringstream os;
            os << "gate '" << id_token->text << "': " << gate_name(*kind) << " produces " << arity
               << " outputs, got " << outs->size();
            error(outs->empty() ? id_token->span : outs->front().span, os.str());
            return;
        }

        GateInstance gate;
        gate.id = id_token->text;
        gate.kind = *kind;
        for (const Token& token : *ins) {
            reference(token);
            gate.inputs.push_back(token.text);
        }
        for (const Token& token : *outs) {
            define(token);
            gate.outputs.push_back(token.text);
        }
        netlist_.gates.push_back(std::move(gate));
    }

    void define(const Token& token) {
        auto [it, inserted] = definitions_.emplace(token.text, token.span);
        if (!inserted) {
            std::ostringstream os;
            os << "duplicate wire definition '" << token.text << "' (first defined at line "
               << it->second.line << ")";
            error(token.span, os.str());
        }
    }

    void reference(const Token& token) { references_.emplace(token.text, token.span); }

    void resolve_references() {
        // Report each undefined id once, at its first reference.
        std::map<std::string, SourceSpan> firsts;
        for (const auto& [id, at] : references_) {
            if (definitions_.count(id) != 0) {
                continue;
            }
            auto it = firsts.find(id);
            if (it == firsts.end() || at.line < it->second.line ||
                (at.line == it->second.line && at.col_begin < it->second.col_begin)) {
                firsts[id] = at;
            }
        }
        for (const auto& [id, at] : firsts) {
            error(at, "undefined wire '" + id + "'");
        }
    }

    SourceSpan span_for_subject(const std::string& subject) const {
        if (auto it = definitions_.find(subject); it != definitions_.end()) {
            return it->second;
        }
        if (auto it = gate_ids_.find(subject); it != gate_ids_.end()) {
            return it->second;
        }
        if (auto it = references_.find(subject); it != references_.end()) {
            return it->second;
        }
        return {1, 1, 1, ""};
    }

    void merge_validation() {
        // Grammar was clean; anything validate() still finds is structural.
        // Codes the parser already reported with better spans are skipped.
        for (const Violation& v : validate(netlist_).violations) {
            if (v.code == "multi-driver" || v.code == "undefined-wire") {
                continue;
            }
            structural(span_for_subject(v.subject), v.message);
        }
    }

    std::string_view text_;
    std::vector<std::vector<Token>> lines_;
    std::vector<Diagnostic> diagnostics_;
    int grammar_errors_ = 0;
    int last_line_ = 1;
    bool seen_circuit_ = false;
    bool seen_end_ = false;
    Netlist netlist_;
    std::unordered_map<std::string, SourceSpan> definitions_;
    std::unordered_map<std::string, SourceSpan> gate_ids_;
    std::unordered_multimap<std::string, SourceSpan> references_;
};

} // namespace

ParseResult parse_netlist(std::string_view text) {
    return Parser(text).run();
}

std::string serialize(const Netlist& netlist) {
    const Simulator sim(netlist); // validates and fixes the canonical orderings

    std::ostringstream os;
    os << "circuit " << netlist.name << "\n";
    if (!netlist.inputs.empty()) {
        os << "in";
        for (const std::string& id : netlist.inputs) {
            os << " " << id;
        }
        os << "\n";
    }
    // constants in declared order, grouped into runs so interleavings of
    // zero and one constants round-trip exactly
    size_t c = 0;
    while (c < netlist.constants.size()) {
        const bool value = netlist.constants[c].second;
        os << (value ? "const1" : "const0");
        while (c < netlist.constants.size() && netlist.constants[c].second == value) {
            os << " " << netlist.constants[c].first;
            c++;
        }
        os << "\n";
    }
    for (size_t g : sim.gate_order()) {
        const GateInstance& gate = netlist.gates[g];
        os << "gate " << gate_name(gate.kind) << " " << gate.id << " (";
        for (const std::string& id : gate.inputs) {
            os << " " << id;
        }
        os << " ) -> (";
        for (const std::string& id : gate.outputs) {
            os << " " << id;
        }
        os << " )\n";
    }
    if (!netlist.outputs.empty()) {
        os << "out";
        for (const std::string& id : netlist.outputs) {
            os << " " << id;
        }
        os << "\n";
    }
    if (!sim.garbage().empty()) {
        os << "garbage";
        for (size_t w : sim.garbage()) {
            os << " " << sim.wire_ids()[w];
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

} // namespace revadd
