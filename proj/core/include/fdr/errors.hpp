#ifndef FDR_ERRORS_HPP
#define FDR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdr {

class Error : public std::runtime_error
{
public:
   using std::runtime_error::runtime_error;
};

class DegenerateIndex : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class AxisOutOfRange : public Error { public: using Error::Error; };
class ArityMismatch : public Error { public: using Error::Error; };
class DegreeMismatch : public Error { public: using Error::Error; };
class KindMismatch : public Error { public: using Error::Error; };
class ShapeMismatch : public Error { public: using Error::Error; };
class TruncationUnsafe : public Error { public: using Error::Error; };
class NonUnitBump : public Error { public: using Error::Error; };
class UnsupportedKind : public Error { public: using Error::Error; };
class IndexOutOfChart : public Error { public: using Error::Error; };

/** Raised when an operator output leaves the finite representation. */
class RepresentationOverflow : public Error { public: using Error::Error; };

class ParseError : public Error
{
public:
   ParseError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
   std::size_t position() const { return pos_; }
private:
   std::size_t pos_;
};

} // namespace fdr

#endif
