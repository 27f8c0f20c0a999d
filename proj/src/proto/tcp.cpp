#include "epcmig/proto/tcp.hpp"

namespace epcmig {

const char* to_string(TcpState s)
{
    switch (s) {
    case TcpState::listen: return "listen";
    case TcpState::established: return "established";
    case TcpState::closed: return "closed";
    }
    return "?";
}

std::vector<std::uint8_t> TcpSocket::serialize() const
{
    ByteWriter w;
    w.u32(ep.local_addr);
    w.u16(ep.local_port);
    w.u32(ep.remote_addr);
    w.u16(ep.remote_port);
    w.u8(static_cast<std::uint8_t>(state));
    w.u32(snd_seq);
    w.u32(rcv_ack);
    w.u8(repair_capable ? 1 : 0);
    return w.take();
}

TcpSocket TcpSocket::deserialize(ByteReader& r)
{
    TcpSocket s;
    s.ep.local_addr = r.u32();
    s.ep.local_port = r.u16();
    s.ep.remote_addr = r.u32();
    s.ep.remote_port = r.u16();
    std::uint8_t st = r.u8();
    if (st > 2)
        throw DecodeError("tcp record: invalid state " + std::to_string(st));
    s.state = static_cast<TcpState>(st);
    s.snd_seq = r.u32();
    s.rcv_ack = r.u32();
    s.repair_capable = r.u8() != 0;
    return s;
}

TcpSocket TcpSocket::deserialize(const std::vector<std::uint8_t>& bytes)
{
    ByteReader r(bytes);
    TcpSocket s = deserialize(r);
    if (!r.done())
        throw DecodeError("tcp record: trailing bytes");
    return s;
}

TcpSocket tcp_repair_restore(const std::vector<std::uint8_t>& serialized, Addr new_local_addr)
{
    TcpSocket s = TcpSocket::deserialize(serialized);
    if (s.state != TcpState::established)
        throw SimError("tcp repair: serialized state is '" + std::string(to_string(s.state)) +
                       "', need established");
    if (!s.repair_capable)
        throw RepairUnsupportedError("tcp repair: record not repair-capable "
                                     "(tcp-established mode was off at checkpoint)");
    s.ep.local_addr = new_local_addr;
    return s;
}

} // namespace epcmig
