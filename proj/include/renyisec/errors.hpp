#pragma once

#include <stdexcept>
#include <string>

namespace renyisec {

enum class Errc {
    negative_entry,
    empty_matrix,
    mass_not_one,
    size_overflow,
    domain_error,
    case_mismatch,
    zero_atom,
    interval_error,
    uncertified_family,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace renyisec
