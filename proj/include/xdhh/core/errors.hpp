#pragma once

#include <stdexcept>
#include <string>

namespace xdhh {

enum class Errc {
  NoInstanceLoaded,
  IndexOutOfRange,
  UninitializedSlot,
  WrongArity,
  BudgetEmpty,
  UnsupportedDomain,
  MalformedHeader,
  LiteralOutOfRange,
  UnterminatedClause,
  MissingCell,
  EmptyCell,
  PlanInvalid,
  InvalidArgument,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NoInstanceLoaded: return "NoInstanceLoaded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UninitializedSlot: return "UninitializedSlot";
    case Errc::WrongArity: return "WrongArity";
    case Errc::BudgetEmpty: return "BudgetEmpty";
    case Errc::UnsupportedDomain: return "UnsupportedDomain";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::LiteralOutOfRange: return "LiteralOutOfRange";
    case Errc::UnterminatedClause: return "UnterminatedClause";
    case Errc::MissingCell: return "MissingCell";
    case Errc::EmptyCell: return "EmptyCell";
    case Errc::PlanInvalid: return "PlanInvalid";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace xdhh
