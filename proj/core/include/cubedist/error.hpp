#pragma once

#include <stdexcept>
#include <string>

namespace cubedist {

enum class ErrorKind {
  InvalidParam,
  CapExceeded,
  NotPositive,
  TooShort,
  ConstraintViolated,
  ShapeMismatch,
  NotIsomorphic,
  SizeLimit,
  BadLetter,
  NotInSubgroup,
  TowerOverflow,
  InsufficientData,
  Parse,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BadLetter: return "BadLetter";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::TowerOverflow: return "TowerOverflow";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// All library failures are reported through this one type; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};


}  // namespace cubedist
