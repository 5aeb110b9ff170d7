#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Exit-code buckets used by the CLI: parse -> 2, cap -> 3, invalid -> 4.
enum class ErrKind { parse, cap, invalid };

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), kind_(kind), name_(name) {}
  ErrKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

private:
  ErrKind kind_;
  std::string name_;
};

#define GP_DEFINE_ERROR(NAME, KIND)                                   \
  class NAME : public Error {                                         \
  public:                                                             \
    explicit NAME(const std::string& msg)                             \
        : Error(ErrKind::KIND, #NAME, msg) {}                         \
  };

GP_DEFINE_ERROR(SubstitutionNotLaurent, invalid)
GP_DEFINE_ERROR(EmptyPolynomial, invalid)
GP_DEFINE_ERROR(ContractLoop, invalid)
GP_DEFINE_ERROR(PreconditionViolated, invalid)
GP_DEFINE_ERROR(Disconnected, invalid)
GP_DEFINE_ERROR(NoEmbedding, invalid)
GP_DEFINE_ERROR(EulerViolation, invalid)
GP_DEFINE_ERROR(VertexOutOfRange, invalid)
GP_DEFINE_ERROR(UncoloredEdge, invalid)
GP_DEFINE_ERROR(MissingChromDecoration, invalid)
GP_DEFINE_ERROR(UnknownElement, invalid)
GP_DEFINE_ERROR(TooManyOrderings, cap)
GP_DEFINE_ERROR(SizeCap, cap)
GP_DEFINE_ERROR(MalformedPD, parse)
GP_DEFINE_ERROR(BadBraidLetter, invalid)
GP_DEFINE_ERROR(GraphNotRealizable, invalid)
GP_DEFINE_ERROR(Unoriented, invalid)
GP_DEFINE_ERROR(NotApplicable, invalid)
GP_DEFINE_ERROR(ParseError, parse)

#undef GP_DEFINE_ERROR

}  // namespace gp
