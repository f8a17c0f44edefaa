#ifndef POLY_CONFIG_HPP
#define POLY_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace poly {

// Resource caps. Exceeding a cap raises cap_error, never a truncated result.
struct Limits {
  std::uint64_t max_elements = std::uint64_t(1) << 22;
  std::uint32_t max_degree = std::uint32_t(1) << 16;
  std::uint64_t max_poset_order = std::uint64_t(1) << 14;
  std::uint64_t max_cosets = std::uint64_t(1) << 20;
};

// Default limits, with POLYFORGE_MAX_ELEMENTS honored if set.
const Limits& default_limits();

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class cap_error : public error {
 public:
  cap_error(const std::string& cap, std::uint64_t limit)
      : error("resource cap exceeded: " + cap + " (limit " +
              std::to_string(limit) + ")"),
        cap_name(cap) {}
  std::string cap_name;
};

class precondition_error : public error {
 public:
  using error::error;
};

}  // namespace poly

#endif
