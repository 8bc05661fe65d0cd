#ifndef SOPKIT_RING_HPP
#define SOPKIT_RING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sopkit/field.hpp"

namespace sopkit {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ring context: coefficient field plus named variables (all of degree 1).
// Contexts compare structurally, so independently built identical rings
// interoperate.
class Ring {
 public:
  static RingPtr make(Field field, std::vector<std::string> var_names);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  int var_index(std::string_view name) const;

  bool same(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

 private:
  Ring(Field f, std::vector<std::string> v) : field_(f), vars_(std::move(v)) {}
  Field field_;
  std::vector<std::string> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same(*b));
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace sopkit

#endif
