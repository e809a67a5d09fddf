#include "fano/checked.hpp"

#include <string>

namespace fano {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::UnknownSeed: return "unknown-seed";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::BaseMismatch: return "base-mismatch";
    case ErrorCode::HalfIntegerGenus: return "half-integer-genus";
    case ErrorCode::CapExhausted: return "cap-exhausted";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

void throw_overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + op);
}

}  // namespace fano
