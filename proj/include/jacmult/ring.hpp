#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jacmult {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of variable names. Immutable and cheap to copy; two rings are
/// equal iff their name lists are equal.
class Ring {
 public:
  Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_->size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return (*names_)[i]; }
  [[nodiscard]] std::span<const std::string> names() const { return *names_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  [[nodiscard]] std::size_t require_index(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_ || *a.names_ == *b.names_; }

  [[nodiscard]] std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace jacmult
