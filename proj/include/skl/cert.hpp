// Deletion certificates and verification outcomes shared by every leased-key
// scheme in this project. A certificate is one all-Hadamard readout per leg:
// the control-qubit outcome e and the payload mask d. Schemes differ only in
// the linear relation their verifier checks against (e, d).
#pragma once

#include <cstdint>
#include <vector>

#include "skl/encode.hpp"
#include "skl/qsim.hpp"

namespace skl {

struct DeletionCertificate {
  std::vector<HadamardOutcome> pairs;

  // Canonical byte form; the tag distinguishes which scheme issued it.
  std::vector<uint8_t> encode(enc::Tag tag) const;
};

enum class DelVrfyStatus { accepted, rejected_relation, rejected_shape };

struct DelVrfyResult {
  bool accepted = false;
  DelVrfyStatus status = DelVrfyStatus::rejected_shape;
};

}  // namespace skl
