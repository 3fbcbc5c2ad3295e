#pragma once

#include <stdexcept>
#include <string>

namespace hyperline {

/// Base for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Graph construction / validation failures. The message always names the
/// offending element.
class GraphError : public Error {
public:
    using Error::Error;
};

class LoopEdge : public GraphError {
public:
    explicit LoopEdge(const std::string& vertex)
        : GraphError("loop edge at vertex '" + vertex + "'") {}
};

class DuplicateEdge : public GraphError {
public:
    DuplicateEdge(const std::string& u, const std::string& v)
        : GraphError("duplicate edge between '" + u + "' and '" + v + "'") {}
};

class NonpositiveLength : public GraphError {
public:
    NonpositiveLength(const std::string& u, const std::string& v, const std::string& len)
        : GraphError("edge ('" + u + "','" + v + "') has nonpositive length " + len) {}
};

class Disconnected : public GraphError {
public:
    explicit Disconnected(const std::string& vertex)
        : GraphError("graph is disconnected: vertex '" + vertex + "' is unreachable") {}
};

/// Geodesic enumeration exceeded its cap; exactness would be compromised by
/// truncation, so this is an error rather than a partial result.
class CapExceeded : public Error {
public:
    CapExceeded(long long cap, const std::string& pair)
        : Error("geodesic cap " + std::to_string(cap) + " exceeded for pair " + pair),
          cap_(cap) {}
    long long cap() const { return cap_; }

private:
    long long cap_;
};

class DegenerateLineGraph : public Error {
public:
    DegenerateLineGraph()
        : Error("line graph of a single-edge graph is a single vertex; "
                "it is excluded from distance computations") {}
};

class OutsideImage : public Error {
public:
    explicit OutsideImage(const std::string& point)
        : Error("point " + point + " is outside the image of the line-graph correspondence") {}
};

class NotACycle : public Error {
public:
    explicit NotACycle(const std::string& why) : Error("edge sequence is not a cycle: " + why) {}
};

class NonUniformLengths : public Error {
public:
    NonUniformLengths()
        : Error("graph edges do not all have the same length; "
                "exact mode requires uniform lengths, use the lower-bound mode instead") {}
};

class OracleBudgetExceeded : public Error {
public:
    OracleBudgetExceeded(long long triples, long long budget)
        : Error("sampling oracle would evaluate " + std::to_string(triples) +
                " corner triples, over the budget of " + std::to_string(budget)) {}
};

class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& why) : Error("hypothesis violated: " + why) {}
};

class InvalidParameters : public Error {
public:
    explicit InvalidParameters(const std::string& why) : Error("invalid parameters: " + why) {}
};

class NoKnownValue : public Error {
public:
    explicit NoKnownValue(const std::string& family)
        : Error("no known hyperbolicity value for family " + family) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperline
