#ifndef SOPKIT_RINGSPEC_HPP
#define SOPKIT_RINGSPEC_HPP

#include "sopkit/sop.hpp"

namespace sopkit {

// Plain-text ring description:
//   field: GF(32003) | QQ
//   vars: x y u v
//   ideal: x*u, x*v, y*u, y*v
// All three keys are required; '#' starts a comment; the ideal list may be
// empty or "0" for the zero ideal.
struct RingSpec {
  RingPtr ring;
  Ideal defining;
  std::string name;

  RingPresentation presentation() const;
};

RingSpec parse_ring_spec(std::string_view text, std::string name = "ring");
RingSpec load_ring_spec(const std::string& path);

}  // namespace sopkit

#endif
