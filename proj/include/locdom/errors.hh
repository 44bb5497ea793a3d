/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef LOCDOM_GUARD_ERRORS_HH
#define LOCDOM_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace locdom
{
    /// Base class for everything this library throws on purpose.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An operation was called outside its domain (disconnected graph,
    /// out-of-range vertex, unsupported parameters, ...).
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// Malformed textual input (graph6, edge lists, filter expressions).
    class ParseError : public Error
    {
        public:
            using Error::Error;
    };

    /// A result that the mathematics says cannot happen. Always a bug in this
    /// library, never a property of the input.
    class InvariantViolation : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
