#include "skl/cert.hpp"

namespace skl {

std::vector<uint8_t> DeletionCertificate::encode(enc::Tag tag) const {
  enc::Writer w(tag);
  w.u64(pairs.size());
  for (const HadamardOutcome& p : pairs) {
    w.u8(static_cast<uint8_t>(p.e));
    w.bits(p.d);
  }
  return w.take();
}

}  // namespace skl
