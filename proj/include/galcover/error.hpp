#pragma once

#include <stdexcept>
#include <string>

namespace galcover {

// Exit-code families used by the CLI: invalid input maps to 2, broken
// invariants (always a bug) map to 3.
enum class error_kind {
  invalid_parameter,
  not_normal,
  not_subgroup,
  wrong_flavor,
  invalid_datum,
  size_limit,
  unsupported,
  inconsistency,
};

class error : public std::runtime_error {
public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  error_kind kind() const noexcept { return kind_; }
  bool is_internal() const noexcept { return kind_ == error_kind::inconsistency; }

private:
  error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) {
  throw error(kind, what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond)
    fail(error_kind::inconsistency, what);
}

} // namespace galcover
