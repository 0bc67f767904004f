#pragma once

#include <stdexcept>
#include <string>

namespace twc {

// Base for all library errors; `code` is stable across the C API boundary.
struct Error : std::runtime_error {
    enum Code {
        NOT_A_GROUP = 1,
        GROUP_MISMATCH,
        NOT_NORMAL,
        NOT_INVARIANT,
        NOT_UNIMODULAR,
        NOT_FINITE_ORDER,
        WINDOW_EXCEEDED,
        BUDGET_EXCEEDED,
        NOT_FIXED,
        ORBIT_NOT_MAXIMAL,
        PARSE_ERROR,
        COMPUTATION_FAILED,
    };
    Code code;
    Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct NotAGroupError : Error {
    explicit NotAGroupError(const std::string& why) : Error(NOT_A_GROUP, "not a group: " + why) {}
};

struct GroupMismatchError : Error {
    explicit GroupMismatchError(const std::string& why) : Error(GROUP_MISMATCH, "group mismatch: " + why) {}
};

struct NotNormalError : Error {
    explicit NotNormalError(const std::string& why) : Error(NOT_NORMAL, "subgroup not normal: " + why) {}
};

struct NotInvariantError : Error {
    explicit NotInvariantError(const std::string& why) : Error(NOT_INVARIANT, "subgroup not invariant: " + why) {}
};

struct NotUnimodularError : Error {
    explicit NotUnimodularError(const std::string& why) : Error(NOT_UNIMODULAR, "matrix not unimodular: " + why) {}
};

struct NotFiniteOrderError : Error {
    explicit NotFiniteOrderError(const std::string& why) : Error(NOT_FINITE_ORDER, "no finite order found: " + why) {}
};

struct WindowExceededError : Error {
    explicit WindowExceededError(const std::string& why) : Error(WINDOW_EXCEEDED, "window exceeded: " + why) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& why) : Error(BUDGET_EXCEEDED, "budget exceeded: " + why) {}
};

struct NotFixedError : Error {
    explicit NotFixedError(const std::string& why) : Error(NOT_FIXED, "element not fixed: " + why) {}
};

struct OrbitNotMaximalError : Error {
    explicit OrbitNotMaximalError(const std::string& why) : Error(ORBIT_NOT_MAXIMAL, "orbit not maximal: " + why) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& why) : Error(PARSE_ERROR, "parse error: " + why) {}
};

struct ComputationFailedError : Error {
    explicit ComputationFailedError(const std::string& why) : Error(COMPUTATION_FAILED, "computation failed: " + why) {}
};

} // namespace twc
