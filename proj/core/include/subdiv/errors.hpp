#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subdiv {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Category data fails an axiom (identity, closure, associativity, layout).
class CategoryInvalid : public Error {
public:
  using Error::Error;
};

// A morphism without a two-sided inverse was found; carries the witness.
class NotAGroupoid : public Error {
public:
  NotAGroupoid(std::uint32_t morphism, const std::string& what)
      : Error(what), morphism_(morphism) {}
  std::uint32_t morphism() const { return morphism_; }

private:
  std::uint32_t morphism_;
};

// Full subdivision requested for a category with a directed cycle
// through non-identity morphisms.
class NotLoopFree : public Error {
public:
  using Error::Error;
};

// Truncation level below the minimum needed by downstream probing.
class TruncationTooSmall : public Error {
public:
  using Error::Error;
};

// Functor image would need simplices beyond the target truncation.
class TruncationMismatch : public Error {
public:
  using Error::Error;
};

// Incoming-morphism counts are inconsistent with any dimension assignment.
class NotASubdivisionShape : public Error {
public:
  using Error::Error;
};

// A counting criterion was invoked outside its hypotheses.
class HypothesisViolated : public Error {
public:
  enum class Reason {
    self_inverse,       // f = f^-1 where the criterion needs f != f^-1
    cube_is_identity,   // f^2 = f^-1, i.e. f^3 = id
    equal,              // f = g
    inverse_pair,       // f = g^-1
    square_coincidence, // f^2 = g or f = g^2 or f^2 = g^-1 or f^-1 = g^2
    not_composable,     // neither fg nor gf exists
  };
  HypothesisViolated(Reason r, const std::string& what) : Error(what), reason_(r) {}
  Reason reason() const { return reason_; }

private:
  Reason reason_;
};

// The supplied map is not an isomorphism of categories.
class NotAnIsomorphism : public Error {
public:
  using Error::Error;
};

// A vertex-group map passed neither the homomorphism nor the
// anti-homomorphism test.
class BourbakiViolated : public Error {
public:
  using Error::Error;
};

// Variance chosen at one morphism failed to verify globally.
class VarianceInconsistent : public Error {
public:
  using Error::Error;
};

}  // namespace subdiv
