#include "epcmig/proto/sctp.hpp"

namespace epcmig {

const char* to_string(SctpState s)
{
    switch (s) {
    case SctpState::closed: return "closed";
    case SctpState::cookie_wait: return "cookie-wait";
    case SctpState::cookie_echoed: return "cookie-echoed";
    case SctpState::established: return "established";
    case SctpState::listen: return "listen";
    }
    return "?";
}

std::vector<std::uint8_t> SctpAssociation::serialize() const
{
    ByteWriter w;
    w.u32(ep.local_addr);
    w.u16(ep.local_port);
    w.u32(ep.remote_addr);
    w.u16(ep.remote_port);
    w.u8(static_cast<std::uint8_t>(state));
    w.u32(local_vtag);
    w.u32(peer_vtag);
    w.u32(next_tsn);
    w.u32(cum_tsn_ack);
    w.u16(in_streams);
    w.u16(out_streams);
    w.u8(repair_capable ? 1 : 0);
    return w.take();
}

SctpAssociation SctpAssociation::deserialize(ByteReader& r)
{
    SctpAssociation a;
    a.ep.local_addr = r.u32();
    a.ep.local_port = r.u16();
    a.ep.remote_addr = r.u32();
    a.ep.remote_port = r.u16();
    std::uint8_t st = r.u8();
    if (st > 4)
        throw DecodeError("sctp record: invalid state " + std::to_string(st));
    a.state = static_cast<SctpState>(st);
    a.local_vtag = r.u32();
    a.peer_vtag = r.u32();
    a.next_tsn = r.u32();
    a.cum_tsn_ack = r.u32();
    a.in_streams = r.u16();
    a.out_streams = r.u16();
    a.repair_capable = r.u8() != 0;
    return a;
}

SctpAssociation SctpAssociation::deserialize(const std::vector<std::uint8_t>& bytes)
{
    ByteReader r(bytes);
    SctpAssociation a = deserialize(r);
    if (!r.done())
        throw DecodeError("sctp record: trailing bytes");
    return a;
}

SctpAssociation sctp_repair_restore(const std::vector<std::uint8_t>& serialized,
                                    Addr new_local_addr)
{
    SctpAssociation a = SctpAssociation::deserialize(serialized);
    if (a.state != SctpState::established)
        throw SimError("sctp repair: serialized state is '" + std::string(to_string(a.state)) +
                       "', need established");
    if (!a.repair_capable)
        throw RepairUnsupportedError(
            "sctp repair: record not repair-capable; a new association handshake is required");
    a.ep.local_addr = new_local_addr;
    return a;
}

} // namespace epcmig
