#pragma once

#include <cstdint>
#include <vector>

#include "epcmig/bytes.hpp"
#include "epcmig/proto/tcp.hpp"

namespace epcmig {

// Only the one-to-one socket style is modeled: exactly one association
// per socket, like TCP. The one-to-many style is out of scope.
enum class SctpState : std::uint8_t {
    closed = 0,
    cookie_wait = 1,
    cookie_echoed = 2,
    established = 3,
    listen = 4,
};
const char* to_string(SctpState s);

struct SctpAssociation {
    TcpEndpoints ep; // same 4-tuple shape
    SctpState state = SctpState::closed;
    std::uint32_t local_vtag = 0;
    std::uint32_t peer_vtag = 0;
    std::uint32_t next_tsn = 0;
    std::uint32_t cum_tsn_ack = 0;
    std::uint16_t in_streams = 1;
    std::uint16_t out_streams = 1;
    bool repair_capable = true;

    std::vector<std::uint8_t> serialize() const;
    static SctpAssociation deserialize(ByteReader& r);
    static SctpAssociation deserialize(const std::vector<std::uint8_t>& bytes);
};

// Re-establishes an established association at the destination host with
// zero wire messages (no INIT); the peer's association record is left
// untouched. Requires kernel-side repair support recorded at checkpoint.
SctpAssociation sctp_repair_restore(const std::vector<std::uint8_t>& serialized,
                                    Addr new_local_addr);

} // namespace epcmig
