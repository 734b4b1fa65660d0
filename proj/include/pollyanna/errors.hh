#pragma once

#include <stdexcept>
#include <string>

namespace pollyanna
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

#define POLLYANNA_ERROR(name)                        \
    class name : public Error                        \
    {                                                \
        public:                                      \
            explicit name(const std::string & m) :   \
                Error(m)                             \
            {                                        \
            }                                        \
    }

    POLLYANNA_ERROR(IndexOutOfRange);
    POLLYANNA_ERROR(SelfLoop);
    POLLYANNA_ERROR(InvalidParameter);
    POLLYANNA_ERROR(ParseError);
    POLLYANNA_ERROR(ClaimMismatch);
    POLLYANNA_ERROR(TooLarge);
    POLLYANNA_ERROR(TableTooShort);
    POLLYANNA_ERROR(PreconditionFailed);
    POLLYANNA_ERROR(ProviderUnavailable);

#undef POLLYANNA_ERROR
}
