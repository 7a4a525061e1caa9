#ifndef WORDMAP_ERRORS_HPP
#define WORDMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wordmap {

/// Raised by every exhaustive routine before it starts work it cannot finish within its cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A presented abelian group turned out to be infinite.
class NotFinite : public std::domain_error {
 public:
  NotFinite() : std::domain_error("not finite") {}
};

}  // namespace wordmap

#endif  // WORDMAP_ERRORS_HPP
