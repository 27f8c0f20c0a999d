#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "epcmig/bytes.hpp"
#include "epcmig/net/fabric.hpp"

namespace epcmig {

constexpr std::uint16_t kGtpuPort = 2152;
constexpr std::uint16_t kGtpcPort = 2123;
constexpr std::uint8_t kGtpuMsgTypeGpdu = 0xFF;

// Fixed 8-byte GTP-U header, no optional fields.
struct GtpHeader {
    std::uint8_t flags = 0x30; // version 1, protocol type GTP
    std::uint8_t message_type = kGtpuMsgTypeGpdu;
    std::uint16_t length = 0; // payload bytes following the header
    std::uint32_t teid = 0;

    static constexpr std::int64_t kWireBytes = 8;

    std::vector<std::uint8_t> encode() const;
    static GtpHeader decode(const std::uint8_t* p, size_t n);
};

struct GtpTunnelEntry {
    std::uint64_t ue_id = 0;
    std::uint32_t local_teid = 0;
    std::uint32_t peer_teid = 0;
    Addr peer_addr = 0;
    Addr ue_inner_addr = 0;
    bool operator==(const GtpTunnelEntry&) const = default;
};

// Tunnel list keyed by the local TEID; uniqueness enforced on insert.
class GtpTunnelTable {
public:
    void insert(const GtpTunnelEntry& e);
    void remove_ue(std::uint64_t ue_id);
    const GtpTunnelEntry* lookup(std::uint32_t local_teid) const;
    const GtpTunnelEntry* lookup_ue(std::uint64_t ue_id) const;
    void clear() { by_teid_.clear(); }
    size_t size() const { return by_teid_.size(); }
    std::vector<GtpTunnelEntry> entries() const;
    std::vector<std::uint32_t> teid_set() const;

private:
    std::map<std::uint32_t, GtpTunnelEntry> by_teid_;
};

// gtp0 kernel device view: interface config plus the SGi masquerade rule
// required for uplink egress toward the packet data network.
struct Gtp0Device {
    Addr addr = 0;
    std::uint32_t netmask = 0xFFFFFF00;
    std::uint32_t mtu = 1500;
    std::vector<std::uint32_t> routes;
    bool masquerade_rule = false;
    bool operator==(const Gtp0Device&) const = default;
};

// inner + 8 B GTP + 8 B UDP + 20 B IP; outer TEID is the peer's.
Packet gtp_encap(const Packet& inner, const GtpTunnelEntry& entry);

struct UnknownTeid {
    std::uint32_t teid;
};
// Strips the outer stack and yields the inner packet when the TEID is
// known; an unknown TEID is a counted drop, not an error.
std::variant<Packet, UnknownTeid> gtp_decap(const Packet& outer, const GtpTunnelTable& table);

} // namespace epcmig
