#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace oreqs {

/// Degree of the zero polynomial: a sentinel ordered below every integer.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min();

inline std::string deg_str(int d) {
    return d == kNegInfDeg ? std::string("-inf") : std::to_string(d);
}

/// Syntax or semantic error in a text input, with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// The input matrix fails the idempotency precondition; carries the first
/// offending position of F*F - F.
class NotIdempotentError : public std::runtime_error {
public:
    NotIdempotentError(int row, int col)
        : std::runtime_error("matrix is not idempotent: entry (" + std::to_string(row + 1) +
                             ", " + std::to_string(col + 1) + ") of F*F differs from F"),
          row_(row),
          col_(col) {}

    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

/// A runtime invariant that should hold by construction was violated.
/// Signals a bug (or corrupted input), never an expected condition.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Outcome of a batch of named checks; failures carry a detail string
/// instead of throwing so callers can render a report.
struct CheckReport {
    struct Item {
        std::string name;
        bool passed;
        std::string detail;
    };

    std::vector<Item> items;

    void add(std::string name, bool passed, std::string detail = "") {
        items.push_back({std::move(name), passed, std::move(detail)});
    }

    bool all_passed() const {
        for (const auto& it : items)
            if (!it.passed) return false;
        return true;
    }

    std::string first_failure() const {
        for (const auto& it : items)
            if (!it.passed) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
        return "";
    }
};

}  // namespace oreqs
