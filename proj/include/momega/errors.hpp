#ifndef MOMEGA_ERRORS_HPP
#define MOMEGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momega {

/** Malformed caller input (bad file, bad parameters, inconsistent data). CLI exit code 2. */
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/** A documented size cap was exceeded. CLI exit code 3. */
class SizeCapError : public std::runtime_error {
  public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/** An internal cross-check failed; indicates a bug, never user error. */
class CheckError : public std::logic_error {
  public:
    explicit CheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace momega

#endif
