#pragma once

#include <stdexcept>
#include <string>

namespace qfcs {

enum class ErrorCode {
  domain = 10,
  range = 11,
  singular_coordinate = 12,
  numeric = 13,
  integration = 14,
  precondition = 15,
  accuracy = 16,
  limit = 17,
  divergence = 18,
  usage = 2,
  config = 20,
  unknown_experiment = 21,
  io = 22,
  serialization = 23,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define QFCS_DEFINE_ERROR(Name, Code)                                              \
  class Name : public Error {                                                      \
   public:                                                                         \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}       \
  };

QFCS_DEFINE_ERROR(DomainError, domain)
QFCS_DEFINE_ERROR(RangeError, range)
QFCS_DEFINE_ERROR(SingularCoordinateError, singular_coordinate)
QFCS_DEFINE_ERROR(NumericError, numeric)
QFCS_DEFINE_ERROR(IntegrationError, integration)
QFCS_DEFINE_ERROR(PreconditionError, precondition)
QFCS_DEFINE_ERROR(AccuracyError, accuracy)
QFCS_DEFINE_ERROR(LimitError, limit)
QFCS_DEFINE_ERROR(DivergenceError, divergence)
QFCS_DEFINE_ERROR(UsageError, usage)
QFCS_DEFINE_ERROR(ConfigError, config)
QFCS_DEFINE_ERROR(UnknownExperimentError, unknown_experiment)
QFCS_DEFINE_ERROR(IoError, io)
QFCS_DEFINE_ERROR(SerializationError, serialization)

#undef QFCS_DEFINE_ERROR

}  // namespace qfcs
