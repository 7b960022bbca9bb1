#ifndef PLANARIZE_ERROR_HPP
#define PLANARIZE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace planarize {

enum class ErrorKind {
    DivisionByZero,
    IncompatibleDisc,
    UnsupportedScalar,
    RingMismatch,
    DimensionMismatch,
    NonHomogeneous,
    VariableAbsent,
    ZeroInput,
    DegenerateKernel,
    NoKernel,
    UnsupportedDegree,
    NotABasePoint,
    NotASurfaceImage,
    ImageSpansLine,
    DegreeBoundExceeded,
    IncompleteCheck,
    InvalidWitness,
    NotAQuadricImageMap,
    NotAPlanarization,
    PositiveDimensional,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All mathematical failures raised by the library carry a kind so that
/// callers (the report builder in particular) can record them as data.
class MathError : public std::runtime_error {
   public:
    MathError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset),
          message_(what) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

   private:
    std::size_t offset_;
    std::string message_;
};

}  // namespace planarize

#endif
