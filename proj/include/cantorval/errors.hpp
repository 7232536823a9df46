#pragma once

#include <stdexcept>
#include <string>

namespace cantorval {

// Root of the library's exception hierarchy.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid input: bad spec parameters, malformed digit sets, unusable
// arguments. The CLI maps these to exit code 2.
class validation_error : public error {
public:
  using error::error;
};

class base_mismatch_error : public validation_error {
public:
  using validation_error::validation_error;
};

class empty_set_error : public validation_error {
public:
  using validation_error::validation_error;
};

class too_few_elements_error : public validation_error {
public:
  using validation_error::validation_error;
};

class invalid_spec_error : public validation_error {
public:
  using validation_error::validation_error;
};

class precondition_error : public validation_error {
public:
  using validation_error::validation_error;
};

// A resource limit was hit (interval budget, depth guard, state budget).
// The CLI maps these to exit code 3.
class budget_error : public error {
public:
  using error::error;
};

} // namespace cantorval
