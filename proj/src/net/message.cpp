#include "epcmig/net/message.hpp"

#include <cstdio>

namespace epcmig {

const char* to_string(MsgType t)
{
    switch (t) {
    case MsgType::sctp_init: return "INIT";
    case MsgType::sctp_init_ack: return "INIT-ACK";
    case MsgType::sctp_cookie_echo: return "COOKIE-ECHO";
    case MsgType::sctp_cookie_ack: return "COOKIE-ACK";
    case MsgType::sctp_data: return "SCTP-DATA";
    case MsgType::tcp_syn: return "SYN";
    case MsgType::tcp_syn_ack: return "SYN-ACK";
    case MsgType::tcp_ack: return "ACK";
    case MsgType::tcp_data: return "TCP-DATA";
    case MsgType::attach_request: return "ATTACH-REQ";
    case MsgType::auth_info_req: return "AUTH-REQ";
    case MsgType::auth_info_resp: return "AUTH-RESP";
    case MsgType::create_session_req: return "CREATE-SESSION-REQ";
    case MsgType::create_session_resp: return "CREATE-SESSION-RESP";
    case MsgType::attach_accept: return "ATTACH-ACCEPT";
    case MsgType::gtpu_data: return "GTPU";
    case MsgType::inner_data: return "INNER";
    case MsgType::bulk_metadata: return "BULK-METADATA";
    case MsgType::bulk_image: return "BULK-IMAGE";
    }
    return "?";
}

Packet Message::to_packet() const
{
    Packet p;
    p.src = src;
    p.dst = dst;
    p.protocol = wire_proto();
    p.payload_len = payload_len;
    p.headers.push_back({HeaderKind::ip, 20});
    if (vpn_wrapped)
        p.headers.push_back({HeaderKind::vpn_outer, 28});
    p.teid = teid;
    return p;
}

void WireTrace::record(SimTime t, const std::string& link, Protocol proto, Addr src, Addr dst,
                       std::int64_t len, std::optional<std::uint32_t> teid, const char* msgtype)
{
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld\t%s\t%s\t%u->%u\t%lld\t%s\t%s\n",
                  static_cast<long long>(t), link.c_str(), to_string(proto), src, dst,
                  static_cast<long long>(len), teid ? std::to_string(*teid).c_str() : "-",
                  msgtype);
    text_ += buf;
}

bool WireTrace::contains_msgtype(const char* msgtype, SimTime from, SimTime to) const
{
    size_t pos = 0;
    while (pos < text_.size()) {
        size_t eol = text_.find('\n', pos);
        if (eol == std::string::npos)
            eol = text_.size();
        std::string line = text_.substr(pos, eol - pos);
        long long t = std::atoll(line.c_str());
        if (t >= from && t <= to) {
            size_t tab = line.rfind('\t');
            if (tab != std::string::npos && line.compare(tab + 1, std::string::npos, msgtype) == 0)
                return true;
        }
        pos = eol + 1;
    }
    return false;
}

void NetContext::register_endpoint(Addr a, MessageSink* sink)
{
    sinks_[a] = sink;
    fabric_.register_addr(a);
}

MessageSink* NetContext::find(Addr a) const
{
    auto it = sinks_.find(a);
    return it == sinks_.end() ? nullptr : it->second;
}

void NetContext::send(Message m)
{
    MessageSink* src_sink = find(m.src);
    MessageSink* dst_sink = find(m.dst);
    if (!dst_sink || !src_sink)
        throw NetError("send: unknown endpoint " + std::to_string(!src_sink ? m.src : m.dst));
    if (m.origin_ts == 0)
        m.origin_ts = eng_.now();

    fabric_.count_injected();

    Site a = src_sink->current_site();
    Site b = dst_sink->current_site();
    if (a == b) {
        // local switching inside one site
        trace_.record(eng_.now(), "local:" + std::string(to_string(a)), m.proto, m.src, m.dst,
                      m.wire_len(), m.teid, to_string(m.type));
        eng_.schedule("net", to_string(m.type), fabric_.profile().switch_latency_us,
                      [this, m, dst_sink] { dst_sink->deliver(m); });
        return;
    }
    const NetworkPath& path = fabric_.tenant_route(a, b);
    Packet pkt = m.to_packet();
    trace_.record(eng_.now(), path.name, m.proto, m.src, m.dst, m.wire_len(), m.teid,
                  to_string(m.type));
    if (fabric_.apply_firewall(pkt, path) == FirewallVerdict::drop) {
        fabric_.count_firewall_drop();
        return;
    }
    Duration dt = Fabric::transfer_time(m.wire_len(), path);
    eng_.schedule("net", to_string(m.type), dt, [this, m, dst_sink] { dst_sink->deliver(m); });
}

} // namespace epcmig
