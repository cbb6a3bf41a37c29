#pragma once

#include <stdexcept>
#include <string>

namespace nefvol {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define NEFVOL_DEFINE_ERROR(Name)                  \
    class Name : public Error {                    \
    public:                                        \
        using Error::Error;                        \
    }

NEFVOL_DEFINE_ERROR(SignatureError);
NEFVOL_DEFINE_ERROR(NotPositiveError);
NEFVOL_DEFINE_ERROR(DimensionError);
NEFVOL_DEFINE_ERROR(DomainError);
NEFVOL_DEFINE_ERROR(FieldMismatch);
NEFVOL_DEFINE_ERROR(RealFieldError);
NEFVOL_DEFINE_ERROR(AlgebraMismatch);
NEFVOL_DEFINE_ERROR(NonIntegralError);
NEFVOL_DEFINE_ERROR(UnsupportedAlpha);
NEFVOL_DEFINE_ERROR(SpecError);
NEFVOL_DEFINE_ERROR(AmpleError);
NEFVOL_DEFINE_ERROR(ConfigError);

#undef NEFVOL_DEFINE_ERROR

}  // namespace nefvol
