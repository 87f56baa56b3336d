#pragma once

#include "dqc/circuit.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dqc {

/// Parse failure with source position. what() includes "line:col".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Parses an OpenQASM 2.0 program restricted to a single quantum register and
/// the supported gate set plus `cx`. `measure`, `barrier` and `creg` are
/// dropped; a note for each dropped statement is appended to `warnings` when
/// given. `include` lines are accepted and ignored.
Circuit parse_qasm(const std::string& text, std::vector<std::string>* warnings = nullptr,
                   const std::string& name = "");

/// Reads and parses a QASM file; the circuit name defaults to the file stem.
Circuit parse_qasm_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Emits the circuit as OpenQASM 2.0 text. parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit& c);

}  // namespace dqc
