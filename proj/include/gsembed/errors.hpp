#ifndef GSEMBED_ERRORS_HPP_
#define GSEMBED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gsembed {

// Malformed input: bad permutations, invalid tables, unparsable files.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A size guard was exceeded. Never a wrong answer, always a refusal.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition.
struct precondition_error : std::logic_error {
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// The kernel condition G_M <= G_X fails, so no embedding can exist.
struct necessity_error : std::runtime_error {
  explicit necessity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsembed

#endif  // GSEMBED_ERRORS_HPP_
