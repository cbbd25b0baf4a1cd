#ifndef PBR_ERRORS_HPP
#define PBR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pbr {

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct InvalidPermutation : Error {
  explicit InvalidPermutation(const std::string &msg) : Error("invalid permutation: " + msg) {}
};

struct ClosureExceedsCap : Error {
  explicit ClosureExceedsCap(const std::string &msg) : Error("closure exceeds order cap: " + msg) {}
};

struct SpecParseError : Error {
  explicit SpecParseError(const std::string &msg) : Error("spec parse error: " + msg) {}
};

struct ParentMismatch : Error {
  explicit ParentMismatch(const std::string &msg) : Error("parent mismatch: " + msg) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string &msg) : Error("subgroup is not normal: " + msg) {}
};

struct NotSurjective : Error {
  explicit NotSurjective(const std::string &msg) : Error("homomorphism is not surjective: " + msg) {}
};

struct NotDihedral : Error {
  explicit NotDihedral(const std::string &msg) : Error("group carries no Coxeter generators: " + msg) {}
};

struct NotIntersectionClosed : Error {
  explicit NotIntersectionClosed(const std::string &msg) : Error("family is not intersection-closed: " + msg) {}
};

struct NotNormalMember : Error {
  explicit NotNormalMember(const std::string &msg) : Error("basic collection member is not normal: " + msg) {}
};

struct SearchCapExceeded : Error {
  explicit SearchCapExceeded(const std::string &msg) : Error("search cap exceeded: " + msg) {}
};

struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string &msg) : Error("internal inconsistency: " + msg) {}
};

struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string &msg) : Error("verification failed: " + msg) {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string &msg) : Error("unknown suite: " + msg) {}
};

} // namespace pbr

#endif
