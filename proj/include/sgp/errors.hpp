#ifndef SGP_ERRORS_HPP
#define SGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgp {

// Bad argument to a builder or query (n out of range, vertex id invalid, ...).
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Edge-list or certificate text could not be parsed. Carries a 1-based line
// number when the failing line is known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Raised by metric queries and solver entry points on disconnected input;
// names one vertex that BFS failed to reach.
class NotConnected : public std::runtime_error {
public:
    explicit NotConnected(int unreached_vertex)
        : std::runtime_error("graph is not connected: vertex " +
                             std::to_string(unreached_vertex) + " unreachable"),
          unreached_(unreached_vertex) {}
    int unreached_vertex() const { return unreached_; }

private:
    int unreached_;
};

// The exact solver ran out of time. `proven_lower_bound` is the largest k
// such that all set sizes below k were exhausted with definitive absence.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(int proven_lower_bound)
        : std::runtime_error("time budget exhausted (proven lower bound " +
                             std::to_string(proven_lower_bound) + ")"),
          lower_(proven_lower_bound) {}
    int proven_lower_bound() const { return lower_; }

private:
    int lower_;
};

// A candidate level could not be decided because some pair's geodesic
// enumeration hit the cap; reporting a minimum across such a level would
// be unsound, so the solver refuses.
class TruncationInconclusive : public std::runtime_error {
public:
    explicit TruncationInconclusive(int level)
        : std::runtime_error("search inconclusive at set size " + std::to_string(level) +
                             ": enumeration cap hit with no certificate found"),
          level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

// Internal failures of the certificate construction; either one means a bug
// or a violated hypothesis, never a recoverable condition.
class MatchingInfeasible : public std::runtime_error {
public:
    explicit MatchingInfeasible(const std::string& what) : std::runtime_error(what) {}
};

class VerificationFailed : public std::runtime_error {
public:
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgp

#endif  // SGP_ERRORS_HPP
