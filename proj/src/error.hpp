#pragma once

#include <stdexcept>
#include <string>

namespace qci {

enum class Err {
  NotPrime,
  ZeroElement,
  Inconsistent,
  BadCommutationMatrix,
  BadExponent,
  MixedParents,
  BadSplit,
  TwistMismatch,
  InhomogeneousRelation,
  ResourceLimit,
  BadParams,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

const char* err_name(Err code);

}  // namespace qci
