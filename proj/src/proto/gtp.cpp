#include "epcmig/proto/gtp.hpp"

namespace epcmig {

std::vector<std::uint8_t> GtpHeader::encode() const
{
    std::vector<std::uint8_t> b(8);
    b[0] = flags;
    b[1] = message_type;
    b[2] = static_cast<std::uint8_t>(length >> 8);
    b[3] = static_cast<std::uint8_t>(length & 0xFF);
    b[4] = static_cast<std::uint8_t>(teid >> 24);
    b[5] = static_cast<std::uint8_t>((teid >> 16) & 0xFF);
    b[6] = static_cast<std::uint8_t>((teid >> 8) & 0xFF);
    b[7] = static_cast<std::uint8_t>(teid & 0xFF);
    return b;
}

GtpHeader GtpHeader::decode(const std::uint8_t* p, size_t n)
{
    if (n < 8)
        throw DecodeError("gtp header: need 8 bytes, got " + std::to_string(n));
    GtpHeader h;
    h.flags = p[0];
    if ((h.flags >> 5) != 1)
        throw DecodeError("gtp header: unsupported version " + std::to_string(h.flags >> 5));
    h.message_type = p[1];
    h.length = static_cast<std::uint16_t>((p[2] << 8) | p[3]);
    h.teid = (static_cast<std::uint32_t>(p[4]) << 24) | (static_cast<std::uint32_t>(p[5]) << 16) |
             (static_cast<std::uint32_t>(p[6]) << 8) | p[7];
    return h;
}

void GtpTunnelTable::insert(const GtpTunnelEntry& e)
{
    if (e.local_teid == 0 || e.peer_teid == 0)
        throw SimError("tunnel entry: TEIDs must be nonzero");
    auto [it, ok] = by_teid_.emplace(e.local_teid, e);
    if (!ok)
        throw SimError("tunnel entry: duplicate local TEID " + std::to_string(e.local_teid));
}

void GtpTunnelTable::remove_ue(std::uint64_t ue_id)
{
    for (auto it = by_teid_.begin(); it != by_teid_.end();) {
        if (it->second.ue_id == ue_id)
            it = by_teid_.erase(it);
        else
            ++it;
    }
}

const GtpTunnelEntry* GtpTunnelTable::lookup(std::uint32_t local_teid) const
{
    auto it = by_teid_.find(local_teid);
    return it == by_teid_.end() ? nullptr : &it->second;
}

const GtpTunnelEntry* GtpTunnelTable::lookup_ue(std::uint64_t ue_id) const
{
    for (const auto& [teid, e] : by_teid_)
        if (e.ue_id == ue_id)
            return &e;
    return nullptr;
}

std::vector<GtpTunnelEntry> GtpTunnelTable::entries() const
{
    std::vector<GtpTunnelEntry> v;
    for (const auto& [teid, e] : by_teid_)
        v.push_back(e);
    return v;
}

std::vector<std::uint32_t> GtpTunnelTable::teid_set() const
{
    std::vector<std::uint32_t> v;
    for (const auto& [teid, e] : by_teid_)
        v.push_back(teid);
    return v;
}

Packet gtp_encap(const Packet& inner, const GtpTunnelEntry& entry)
{
    Packet outer;
    outer.src = inner.src;
    outer.dst = entry.peer_addr;
    outer.protocol = Protocol::udp;
    outer.payload_len = inner.wire_len();
    outer.headers.push_back({HeaderKind::gtp, GtpHeader::kWireBytes});
    outer.headers.push_back({HeaderKind::udp, 8});
    outer.headers.push_back({HeaderKind::ip, 20});
    outer.teid = entry.peer_teid;
    outer.encapsulated = std::make_shared<Packet>(inner);
    return outer;
}

std::variant<Packet, UnknownTeid> gtp_decap(const Packet& outer, const GtpTunnelTable& table)
{
    if (!outer.teid)
        throw DecodeError("gtp decap: packet carries no TEID");
    if (outer.headers.size() < 3 || !outer.encapsulated)
        throw DecodeError("gtp decap: missing outer header stack");
    const GtpTunnelEntry* e = table.lookup(*outer.teid);
    if (!e)
        return UnknownTeid{*outer.teid};
    return *outer.encapsulated;
}

} // namespace epcmig
