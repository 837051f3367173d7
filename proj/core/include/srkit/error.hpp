#pragma once

#include <stdexcept>
#include <string>

namespace srkit {

/// Malformed or out-of-contract input (bad vertex index, unknown builtin,
/// unparsable file, invalid field, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A monomial ideal containing the constant monomial 1.
class UnitIdealError : public InputError {
public:
    UnitIdealError() : InputError("ideal contains the unit monomial") {}
};

}  // namespace srkit
