#ifndef TENSORBODY_ERRORS_HPP
#define TENSORBODY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tb {

/**
 * Base class for all structured errors. `kind()` is a stable machine-readable
 * tag; the CLI maps it into `{"error":{"kind":...,"message":...}}` payloads.
 */
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

#define TB_DEFINE_ERROR(Name, tag)                                            \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& message = "")                        \
            : Error(tag, message) {}                                          \
    }

TB_DEFINE_ERROR(ShapeMismatch, "shape-mismatch");
TB_DEFINE_ERROR(IndexOutOfRange, "index-out-of-range");
TB_DEFINE_ERROR(SingularFactor, "singular-factor");
TB_DEFINE_ERROR(SingularMatrix, "singular-matrix");
TB_DEFINE_ERROR(NotDecomposable, "not-decomposable");
TB_DEFINE_ERROR(ZeroVector, "zero-vector");
TB_DEFINE_ERROR(DegenerateBody, "degenerate-body");
TB_DEFINE_ERROR(DegenerateSection, "degenerate-section");
TB_DEFINE_ERROR(NotPolytopal, "not-polytopal");
TB_DEFINE_ERROR(DimensionTooLarge, "dimension-too-large");
TB_DEFINE_ERROR(InvalidP, "invalid-p");
TB_DEFINE_ERROR(InvalidDimension, "invalid-dimension");
TB_DEFINE_ERROR(NotUnitVector, "not-unit-vector");
TB_DEFINE_ERROR(NotPD, "not-positive-definite");
TB_DEFINE_ERROR(NotKronecker, "not-kronecker");
TB_DEFINE_ERROR(NotProportional, "not-proportional");
TB_DEFINE_ERROR(NumericallyAmbiguous, "numerically-ambiguous");
TB_DEFINE_ERROR(ExactUnsupported, "exact-unsupported");
TB_DEFINE_ERROR(ParseError, "parse-error");

#undef TB_DEFINE_ERROR

}  // namespace tb

#endif
