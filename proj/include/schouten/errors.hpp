#pragma once

#include <stdexcept>
#include <string>

namespace schouten {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ChartMismatch : Error {
    explicit ChartMismatch(const std::string& what = "operands live on different charts")
        : Error(what) {}
};

struct DivisionByZeroField : Error {
    explicit DivisionByZeroField(const std::string& what = "division by the zero field")
        : Error(what) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what = "denominator vanishes at evaluation point")
        : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what = "coordinate index out of range")
        : Error(what) {}
};

struct DegreeUnderflow : Error {
    explicit DegreeUnderflow(const std::string& what = "bracket of two degree-0 fields")
        : Error(what) {}
};

struct WrongDegree : Error {
    explicit WrongDegree(const std::string& what = "multivector has the wrong degree")
        : Error(what) {}
};

struct TooManyArguments : Error {
    explicit TooManyArguments(const std::string& what = "more differentials than slots")
        : Error(what) {}
};

struct NotPoisson : Error {
    explicit NotPoisson(const std::string& what = "tensor failed the Jacobi identity")
        : Error(what) {}
};

struct MapNotInvertibleNear : Error {
    explicit MapNotInvertibleNear(const std::string& what = "map not invertible near point")
        : Error(what) {}
};

struct JacobianSingular : Error {
    explicit JacobianSingular(const std::string& what = "singular Jacobian") : Error(what) {}
};

struct InsufficientSeriesOrder : Error {
    explicit InsufficientSeriesOrder(const std::string& what = "series holds too few coefficients")
        : Error(what) {}
};

struct NotVertical : Error {
    explicit NotVertical(const std::string& what = "field is not tangent to the leaves")
        : Error(what) {}
};

struct LeafMatrixSingular : Error {
    explicit LeafMatrixSingular(const std::string& what = "leaf block of the tensor is singular")
        : Error(what) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& what = "form is not leafwise closed") : Error(what) {}
};

struct NotClosedVertical : Error {
    explicit NotClosedVertical(const std::string& what = "vertical 2-form is not closed")
        : Error(what) {}
};

struct NotHamiltonian : Error {
    explicit NotHamiltonian(const std::string& what = "field is not Hamiltonian") : Error(what) {}
};

struct NotCocycle : Error {
    explicit NotCocycle(const std::string& what = "right-hand side is not a cocycle")
        : Error(what) {}
};

struct NotHamiltonianObstruction : Error {
    int casimir_index;
    explicit NotHamiltonianObstruction(int j)
        : Error("transverse component " + std::to_string(j) + " is not a Hamiltonian field"),
          casimir_index(j) {}
};

struct StepSizeUnderflow : Error {
    explicit StepSizeUnderflow(const std::string& what = "integrator step size underflow")
        : Error(what) {}
};

struct DomainExit : Error {
    explicit DomainExit(const std::string& what = "trajectory left the declared domain")
        : Error(what) {}
};

struct RadicandNonpositive : Error {
    explicit RadicandNonpositive(const std::string& what = "flow radicand is nonpositive")
        : Error(what) {}
};

struct DenominatorZero : Error {
    explicit DenominatorZero(const std::string& what = "flow denominator vanishes")
        : Error(what) {}
};

struct SingularDelta : Error {
    explicit SingularDelta(const std::string& what = "constraint matrix is singular")
        : Error(what) {}
};

struct MissingThetaFamily : Error {
    explicit MissingThetaFamily(const std::string& what = "instance carries no 1-form family")
        : Error(what) {}
};

struct ParseError : Error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                what),
          line(line_), col(col_) {}
};

struct UnknownCoordinate : Error {
    explicit UnknownCoordinate(const std::string& name)
        : Error("unknown coordinate '" + name + "'") {}
};

struct UnknownKey : Error {
    explicit UnknownKey(const std::string& key) : Error("unknown key '" + key + "'") {}
};

}  // namespace schouten
