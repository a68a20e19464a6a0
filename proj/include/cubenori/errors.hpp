#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubenori {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define CUBENORI_DEFINE_ERROR(Name)                                            \
    class Name : public Error                                                  \
    {                                                                          \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

// homological algebra
CUBENORI_DEFINE_ERROR(NotAChainMap);
CUBENORI_DEFINE_ERROR(CompositionMismatch);
CUBENORI_DEFINE_ERROR(IllDefinedMorphism);
CUBENORI_DEFINE_ERROR(NotInvertible);

// cubical site
CUBENORI_DEFINE_ERROR(InvalidCube);
CUBENORI_DEFINE_ERROR(NotFaceClosed);
CUBENORI_DEFINE_ERROR(NotASubcomplex);
CUBENORI_DEFINE_ERROR(NotACubicalMap);
CUBENORI_DEFINE_ERROR(NotAPairMap);
CUBENORI_DEFINE_ERROR(NotATriple);
CUBENORI_DEFINE_ERROR(NotACover);

// cohomology model, cellular engine, products
CUBENORI_DEFINE_ERROR(ExcisionFailed);
CUBENORI_DEFINE_ERROR(NotGood);
CUBENORI_DEFINE_ERROR(NotARefinement);
CUBENORI_DEFINE_ERROR(IncompatibleFiltrations);
CUBENORI_DEFINE_ERROR(NotClosedUnderProduct);

// regular logic
CUBENORI_DEFINE_ERROR(SortError);
CUBENORI_DEFINE_ERROR(UnboundSymbol);
CUBENORI_DEFINE_ERROR(SearchTooLarge);

// corpus handling
CUBENORI_DEFINE_ERROR(CorpusError);

#undef CUBENORI_DEFINE_ERROR

/// Parse failure carrying the byte offset into the input text.
class SyntaxError : public Error
{
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error("SyntaxError at " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace cubenori
