#pragma once

#include <cstdint>
#include <vector>

#include "epcmig/bytes.hpp"
#include "epcmig/net/fabric.hpp"

namespace epcmig {

// Raised when a serialized connection cannot be re-established at the
// destination (repair support missing or state not restorable); the
// caller's only recourse is a full handshake, losing the peer state.
class RepairUnsupportedError : public SimError {
public:
    using SimError::SimError;
};

enum class TcpState : std::uint8_t { listen = 0, established = 1, closed = 2 };
const char* to_string(TcpState s);

struct TcpEndpoints {
    Addr local_addr = 0;
    std::uint16_t local_port = 0;
    Addr remote_addr = 0;
    std::uint16_t remote_port = 0;
    bool operator==(const TcpEndpoints&) const = default;
};

// Connection state as held by one end. Sequence counters are carried
// verbatim in repair records so a restored socket resumes mid-stream.
struct TcpSocket {
    TcpEndpoints ep;
    TcpState state = TcpState::closed;
    std::uint32_t snd_seq = 0;
    std::uint32_t rcv_ack = 0;
    bool repair_capable = true;

    std::vector<std::uint8_t> serialize() const;
    static TcpSocket deserialize(ByteReader& r);
    static TcpSocket deserialize(const std::vector<std::uint8_t>& bytes);
};

// Re-establishes an established connection from its serialized state
// without any wire exchange; the remote end's state is never touched.
// Throws RepairUnsupportedError if the record is not repair-capable and
// DecodeError/SimError for malformed or non-established records.
TcpSocket tcp_repair_restore(const std::vector<std::uint8_t>& serialized, Addr new_local_addr);

} // namespace epcmig
