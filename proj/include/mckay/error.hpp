#ifndef MCKAY_ERROR_HPP_
#define MCKAY_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace mckay {

  // Base class of everything this library throws on purpose.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An operation was called outside its domain (flip at a non-sink, parity
  // for a group without -I, malformed descriptor, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class DivisionByZero : public Error {
   public:
    using Error::Error;
  };

  // A configured bound was exceeded (conductor, path count, degree, window).
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // Computed data violated an invariant that upstream modules guarantee,
  // e.g. a non-integral McKay multiplicity.
  class DefectError : public Error {
   public:
    using Error::Error;
  };

  // Randomized or iterative procedure did not converge (eigenspace splitting,
  // generator closure).
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace mckay

#endif  // MCKAY_ERROR_HPP_
