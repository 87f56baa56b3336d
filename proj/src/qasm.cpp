#include "dqc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dqc {

namespace {

enum class Tok {
    Identifier,
    Number,
    String,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semicolon,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Arrow,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double value = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            t.kind = Tok::Identifier;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '.' || src_[pos_] == 'e' ||
                                          src_[pos_] == 'E' ||
                                          ((src_[pos_] == '+' || src_[pos_] == '-') &&
                                           (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')))) {
                advance();
            }
            t.kind = Tok::Number;
            t.text = src_.substr(start, pos_ - start);
            std::size_t consumed = 0;
            try {
                t.value = std::stod(t.text, &consumed);
            } catch (const std::exception&) {
                throw ParseError(t.line, t.col, "malformed number '" + t.text + "'");
            }
            if (consumed != t.text.size()) {
                throw ParseError(t.line, t.col, "malformed number '" + t.text + "'");
            }
            return t;
        }
        if (c == '"') {
            advance();
            std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') advance();
            if (pos_ >= src_.size()) throw ParseError(t.line, t.col, "unterminated string");
            t.kind = Tok::String;
            t.text = src_.substr(start, pos_ - start);
            advance();
            return t;
        }
        advance();
        switch (c) {
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '[': t.kind = Tok::LBracket; return t;
            case ']': t.kind = Tok::RBracket; return t;
            case ';': t.kind = Tok::Semicolon; return t;
            case ',': t.kind = Tok::Comma; return t;
            case '+': t.kind = Tok::Plus; return t;
            case '*': t.kind = Tok::Star; return t;
            case '/': t.kind = Tok::Slash; return t;
            case '^': t.kind = Tok::Caret; return t;
            case '-':
                if (pos_ < src_.size() && src_[pos_] == '>') {
                    advance();
                    t.kind = Tok::Arrow;
                } else {
                    t.kind = Tok::Minus;
                }
                return t;
            default:
                throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& src, std::vector<std::string>* warnings)
        : lexer_(src), warnings_(warnings) {
        cur_ = lexer_.next();
    }

    Circuit parse(const std::string& name) {
        expect_keyword("OPENQASM");
        expect(Tok::Number, "version number");
        expect(Tok::Semicolon, "';'");

        // Statements before qreg may only be includes.
        std::vector<Gate> pending;
        while (cur_.kind != Tok::End) {
            statement(pending);
        }
        if (qreg_size_ < 0) {
            throw ParseError(cur_.line, cur_.col, "program declares no quantum register");
        }
        Circuit c(qreg_size_, name);
        for (auto& g : pending) c.add(std::move(g));
        return c;
    }

private:
    void statement(std::vector<Gate>& out) {
        if (cur_.kind != Tok::Identifier) {
            throw ParseError(cur_.line, cur_.col, "expected a statement");
        }
        const std::string head = cur_.text;
        const int line = cur_.line, col = cur_.col;
        if (head == "include") {
            bump();
            expect(Tok::String, "include path");
            expect(Tok::Semicolon, "';'");
            return;
        }
        if (head == "qreg") {
            bump();
            Token id = expect(Tok::Identifier, "register name");
            expect(Tok::LBracket, "'['");
            Token n = expect(Tok::Number, "register size");
            expect(Tok::RBracket, "']'");
            expect(Tok::Semicolon, "';'");
            if (qreg_size_ >= 0) {
                throw ParseError(line, col, "multiple quantum registers are not supported");
            }
            qreg_name_ = id.text;
            qreg_size_ = static_cast<int>(n.value);
            if (qreg_size_ <= 0 || n.value != std::floor(n.value)) {
                throw ParseError(n.line, n.col, "register size must be a positive integer");
            }
            return;
        }
        if (head == "creg") {
            skip_statement();
            warn("dropped creg declaration at line " + std::to_string(line));
            return;
        }
        if (head == "barrier") {
            skip_statement();
            warn("dropped barrier at line " + std::to_string(line));
            return;
        }
        if (head == "measure") {
            skip_statement();
            warn("dropped measure at line " + std::to_string(line));
            return;
        }
        if (head == "gate" || head == "opaque" || head == "if" || head == "reset") {
            throw ParseError(line, col, "unsupported statement '" + head + "'");
        }
        gate_statement(out);
    }

    void gate_statement(std::vector<Gate>& out) {
        Token name = expect(Tok::Identifier, "gate name");
        std::vector<double> params;
        if (cur_.kind == Tok::LParen) {
            bump();
            if (cur_.kind != Tok::RParen) {
                params.push_back(expression());
                while (cur_.kind == Tok::Comma) {
                    bump();
                    params.push_back(expression());
                }
            }
            expect(Tok::RParen, "')'");
        }

        std::vector<int> operands;      // -1 marks a whole-register operand
        operands.push_back(argument());
        while (cur_.kind == Tok::Comma) {
            bump();
            operands.push_back(argument());
        }
        expect(Tok::Semicolon, "';'");

        if (name.text == "cx" || name.text == "CX") {
            if (!params.empty()) {
                throw ParseError(name.line, name.col, "cx takes no parameters");
            }
            if (operands.size() != 2 || operands[0] < 0 || operands[1] < 0) {
                throw ParseError(name.line, name.col, "cx expects two indexed qubit operands");
            }
            if (operands[0] == operands[1]) {
                throw ParseError(name.line, name.col, "cx control and target must differ");
            }
            out.push_back(Gate::cnot(operands[0], operands[1]));
            return;
        }

        OneQubitOp op;
        if (!lookup_op(name.text, op)) {
            throw ParseError(name.line, name.col, "unsupported gate '" + name.text + "'");
        }
        if (static_cast<int>(params.size()) != op_arity(op)) {
            throw ParseError(name.line, name.col,
                             "gate '" + name.text + "' expects " + std::to_string(op_arity(op)) +
                                 " parameter(s), got " + std::to_string(params.size()));
        }
        if (operands.size() != 1) {
            throw ParseError(name.line, name.col, "gate '" + name.text + "' expects one operand");
        }
        if (operands[0] < 0) {
            // Whole-register broadcast.
            for (int q = 0; q < qreg_size_; ++q) {
                out.push_back(Gate::one_qubit(op, q, params));
            }
        } else {
            out.push_back(Gate::one_qubit(op, operands[0], params));
        }
    }

    // `q[i]` or bare `q`; returns the index or -1 for the whole register.
    int argument() {
        Token id = expect(Tok::Identifier, "qubit operand");
        if (qreg_size_ < 0) {
            throw ParseError(id.line, id.col, "gate appears before qreg declaration");
        }
        if (id.text != qreg_name_) {
            throw ParseError(id.line, id.col, "unknown register '" + id.text + "'");
        }
        if (cur_.kind != Tok::LBracket) return -1;
        bump();
        Token n = expect(Tok::Number, "qubit index");
        expect(Tok::RBracket, "']'");
        if (n.value != std::floor(n.value)) {
            throw ParseError(n.line, n.col, "qubit index must be an integer");
        }
        int idx = static_cast<int>(n.value);
        if (idx < 0 || idx >= qreg_size_) {
            throw ParseError(n.line, n.col,
                             "qubit index " + std::to_string(idx) + " out of range [0, " +
                                 std::to_string(qreg_size_) + ")");
        }
        return idx;
    }

    // expr := term (('+'|'-') term)*
    double expression() {
        double v = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool plus = cur_.kind == Tok::Plus;
            bump();
            double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            bool mul = cur_.kind == Tok::Star;
            Token t = cur_;
            bump();
            double rhs = unary();
            if (!mul && rhs == 0.0) throw ParseError(t.line, t.col, "division by zero");
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary() {
        if (cur_.kind == Tok::Minus) {
            bump();
            return -unary();
        }
        if (cur_.kind == Tok::Plus) {
            bump();
            return unary();
        }
        return power();
    }

    double power() {
        double base = primary();
        if (cur_.kind == Tok::Caret) {
            bump();
            return std::pow(base, unary());
        }
        return base;
    }

    double primary() {
        if (cur_.kind == Tok::Number) {
            double v = cur_.value;
            bump();
            return v;
        }
        if (cur_.kind == Tok::Identifier && cur_.text == "pi") {
            bump();
            return M_PI;
        }
        if (cur_.kind == Tok::LParen) {
            bump();
            double v = expression();
            expect(Tok::RParen, "')'");
            return v;
        }
        throw ParseError(cur_.line, cur_.col, "expected a parameter expression");
    }

    void skip_statement() {
        while (cur_.kind != Tok::Semicolon && cur_.kind != Tok::End) bump();
        expect(Tok::Semicolon, "';'");
    }

    void warn(const std::string& msg) {
        if (warnings_) warnings_->push_back(msg);
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) {
            throw ParseError(cur_.line, cur_.col,
                             "expected " + what +
                                 (cur_.kind == Tok::End ? " but reached end of input"
                                                        : " before '" + cur_.text + "'"));
        }
        Token t = cur_;
        bump();
        return t;
    }

    void expect_keyword(const std::string& kw) {
        if (cur_.kind != Tok::Identifier || cur_.text != kw) {
            throw ParseError(cur_.line, cur_.col, "expected '" + kw + "' header");
        }
        bump();
    }

    void bump() { cur_ = lexer_.next(); }

    Lexer lexer_;
    Token cur_;
    std::vector<std::string>* warnings_;
    std::string qreg_name_;
    int qreg_size_ = -1;
};

std::string format_angle(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text, std::vector<std::string>* warnings,
                   const std::string& name) {
    Parser p(text, warnings);
    return p.parse(name);
}

Circuit parse_qasm_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qasm(ss.str(), warnings, std::filesystem::path(path).stem().string());
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    for (const Gate& g : c.gates()) {
        if (g.is_cnot()) {
            out << "cx q[" << g.control << "],q[" << g.target << "];\n";
            continue;
        }
        out << op_name(g.op);
        if (!g.params.empty()) {
            out << '(';
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                if (i) out << ',';
                out << format_angle(g.params[i]);
            }
            out << ')';
        }
        out << " q[" << g.target << "];\n";
    }
    return out.str();
}

}  // namespace dqc
