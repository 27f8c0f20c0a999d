#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "epcmig/net/fabric.hpp"
#include "epcmig/sim/engine.hpp"

namespace epcmig {

enum class MsgType {
    // SCTP association handshake and data
    sctp_init,
    sctp_init_ack,
    sctp_cookie_echo,
    sctp_cookie_ack,
    sctp_data,
    // TCP setup and data
    tcp_syn,
    tcp_syn_ack,
    tcp_ack,
    tcp_data,
    // attach control sequence
    attach_request,
    auth_info_req,
    auth_info_resp,
    create_session_req,
    create_session_resp,
    attach_accept,
    // user plane
    gtpu_data,
    inner_data,
    // bulk migration streams (one record per transfer)
    bulk_metadata,
    bulk_image,
};
const char* to_string(MsgType t);

struct Message {
    MsgType type{};
    Addr src = 0;
    Addr dst = 0;
    Protocol proto = Protocol::udp; // native protocol of the payload
    std::int64_t payload_len = 0;
    std::optional<std::uint32_t> teid;
    bool vpn_wrapped = false;

    // control-plane context
    std::uint64_t ue_id = 0;
    std::uint32_t arg_teid = 0;
    std::uint32_t arg_addr = 0;
    SimTime origin_ts = 0; // set by the first sender, carried end to end

    // tunneled user-plane payload (the full outer packet, for decap)
    std::shared_ptr<const Packet> tunneled;

    // What the wire (and the firewall) sees: VPN encapsulation presents
    // everything as UDP.
    Protocol wire_proto() const { return vpn_wrapped ? Protocol::udp : proto; }

    std::int64_t wire_len() const
    {
        // 20 B IP on everything; VPN adds an outer IP+UDP pair.
        std::int64_t n = payload_len + 20;
        if (vpn_wrapped)
            n += 28;
        return n;
    }
    Packet to_packet() const;
};

class MessageSink {
public:
    virtual ~MessageSink() = default;
    virtual void deliver(const Message& m) = 0;
    virtual Site current_site() const = 0;
};

// Tab-separated wire log, one line per transmission:
// time_us  link  proto  src->dst  len  teid  msgtype
class WireTrace {
public:
    void record(SimTime t, const std::string& link, Protocol proto, Addr src, Addr dst,
                std::int64_t len, std::optional<std::uint32_t> teid, const char* msgtype);
    const std::string& text() const { return text_; }
    bool contains_msgtype(const char* msgtype, SimTime from, SimTime to) const;
    void clear() { text_.clear(); }

private:
    std::string text_;
};

// Binds the event engine, the fabric and the endpoint registry together;
// every control/user-plane message goes through send().
class NetContext {
public:
    NetContext(SimEngine& eng, Fabric& fabric) : eng_(eng), fabric_(fabric) {}

    void register_endpoint(Addr a, MessageSink* sink);
    MessageSink* find(Addr a) const;

    // Schedules delivery after the route's transfer time; applies the
    // firewall at injection. Dropped packets are counted, not delivered.
    void send(Message m);

    WireTrace& wire_trace() { return trace_; }
    SimEngine& engine() { return eng_; }
    Fabric& fabric() { return fabric_; }

private:
    SimEngine& eng_;
    Fabric& fabric_;
    WireTrace trace_;
    std::map<Addr, MessageSink*> sinks_;
};

} // namespace epcmig
