#ifndef BRICKBASIS_ERRORS_HPP
#define BRICKBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brickbasis {

// Bad arguments: zero denominators, dimension mismatches, out-of-range
// indices, malformed input files.
class invalid_input : public std::runtime_error {
public:
  explicit invalid_input(const std::string &what) : std::runtime_error(what) {}
};

// Scene document parse failures; `field` names the offending entry.
class parse_error : public invalid_input {
public:
  parse_error(const std::string &field, const std::string &what)
      : invalid_input("scene document, field '" + field + "': " + what),
        field_(field) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

// Instances the geometric construction cannot handle. `node` is the
// 1-based tree index the diagnostic points at (0 when not applicable).
class construction_error : public std::runtime_error {
public:
  construction_error(const std::string &what, std::size_t node)
      : std::runtime_error(what), node_(node) {}
  std::size_t node() const { return node_; }

private:
  std::size_t node_;
};

class not_projectable : public construction_error {
public:
  not_projectable(const std::string &what, std::size_t node)
      : construction_error(what, node) {}
};

class invalid_start : public construction_error {
public:
  invalid_start(const std::string &what, std::size_t node)
      : construction_error(what, node) {}
};

class negative_multiplicity : public construction_error {
public:
  negative_multiplicity(const std::string &what, std::size_t node)
      : construction_error(what, node) {}
};

class non_positive_extent : public construction_error {
public:
  non_positive_extent(const std::string &what, std::size_t node)
      : construction_error(what, node) {}
};

} // namespace brickbasis

#endif // BRICKBASIS_ERRORS_HPP
