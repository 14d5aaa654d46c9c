#pragma once

#include <stdexcept>
#include <string>

namespace autoqml {

// Base class for every error the library throws on contract violations.
// Catch this to distinguish autoqml failures from generic runtime errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define AUTOQML_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// quantum-core
AUTOQML_DEFINE_ERROR(UnknownFamily);
AUTOQML_DEFINE_ERROR(QubitCountOutOfRange);
AUTOQML_DEFINE_ERROR(ParamLengthMismatch);
AUTOQML_DEFINE_ERROR(NonPositiveStd);
AUTOQML_DEFINE_ERROR(DegenerateRange);
AUTOQML_DEFINE_ERROR(SingleQubit);

// gan-training
AUTOQML_DEFINE_ERROR(NonFiniteInput);
AUTOQML_DEFINE_ERROR(LengthMismatch);
AUTOQML_DEFINE_ERROR(BinMismatch);

// metrics
AUTOQML_DEFINE_ERROR(NotNormalized);
AUTOQML_DEFINE_ERROR(EmptySample);
AUTOQML_DEFINE_ERROR(MixedSpecs);
AUTOQML_DEFINE_ERROR(EmptyInput);

// data
AUTOQML_DEFINE_ERROR(MalformedRow);
AUTOQML_DEFINE_ERROR(EmptyFile);
AUTOQML_DEFINE_ERROR(NonFiniteValue);
AUTOQML_DEFINE_ERROR(DegenerateData);

// orchestrator + store
AUTOQML_DEFINE_ERROR(SyntaxError);
AUTOQML_DEFINE_ERROR(MissingField);
AUTOQML_DEFINE_ERROR(InvalidValue);
AUTOQML_DEFINE_ERROR(DuplicateKey);
AUTOQML_DEFINE_ERROR(MissingKey);
AUTOQML_DEFINE_ERROR(Timeout);
AUTOQML_DEFINE_ERROR(NoSuccessfulRuns);
AUTOQML_DEFINE_ERROR(UnknownVisualization);
AUTOQML_DEFINE_ERROR(StoreNotEmpty);
AUTOQML_DEFINE_ERROR(IoError);

#undef AUTOQML_DEFINE_ERROR

}  // namespace autoqml
