#ifndef SYMMSPACE_ERRORS_HPP
#define SYMMSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symmspace {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SYMMSPACE_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

// construction of algebras
SYMMSPACE_DEFINE_ERROR(UnsupportedFamily);
SYMMSPACE_DEFINE_ERROR(DegenerateParams);
SYMMSPACE_DEFINE_ERROR(ClosureViolation);
SYMMSPACE_DEFINE_ERROR(InvolutionNotDiagonalizable);

// root space machinery
SYMMSPACE_DEFINE_ERROR(MaximalityFailure);
SYMMSPACE_DEFINE_ERROR(ClusteringAmbiguity);
SYMMSPACE_DEFINE_ERROR(DegenerateWitness);
SYMMSPACE_DEFINE_ERROR(ChamberViolation);

// curvature / invariants
SYMMSPACE_DEFINE_ERROR(NotInTangentSpace);
SYMMSPACE_DEFINE_ERROR(DegeneratePlane);
SYMMSPACE_DEFINE_ERROR(NonpositiveScale);

// numerics
SYMMSPACE_DEFINE_ERROR(DomainError);
SYMMSPACE_DEFINE_ERROR(NotSpd);
SYMMSPACE_DEFINE_ERROR(NotSymmetric);
SYMMSPACE_DEFINE_ERROR(NotTraceless);
SYMMSPACE_DEFINE_ERROR(StepTooLarge);

#undef SYMMSPACE_DEFINE_ERROR

}  // namespace symmspace

#endif
