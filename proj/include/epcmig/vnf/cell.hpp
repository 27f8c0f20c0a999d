#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epcmig/proto/gtp.hpp"
#include "epcmig/proto/sctp.hpp"
#include "epcmig/vnf/vnf.hpp"

namespace epcmig {

// Packet data network behind the SGi interface; co-located with the SPGW
// wherever it currently runs. Records user-plane deliveries keyed by the
// origin timestamp the gNB stamped on each uplink packet.
class PdnSink : public MessageSink {
public:
    explicit PdnSink(NetContext& net, Addr addr, const Vnf* spgw) : addr_(addr), spgw_(spgw)
    {
        net.register_endpoint(addr, this);
        net_ = &net;
    }
    void deliver(const Message& m) override;
    Site current_site() const override { return spgw_->current_site(); }

    Addr addr() const { return addr_; }
    // delivered_at by (ue_id, origin_ts)
    std::optional<SimTime> delivered_at(std::uint64_t ue, SimTime origin) const;
    std::int64_t packets_received() const { return received_; }
    std::int64_t bytes_received() const { return bytes_; }

private:
    NetContext* net_ = nullptr;
    Addr addr_;
    const Vnf* spgw_;
    std::map<std::pair<std::uint64_t, SimTime>, SimTime> deliveries_;
    std::int64_t received_ = 0;
    std::int64_t bytes_ = 0;
};

struct AttachResult {
    bool success = false;
    std::string error;
    SimTime started_at = 0;
    SimTime completed_at = 0;
    Addr ue_inner_addr = 0;
};

struct UplinkConfig {
    std::int64_t inner_packet_bytes = 84;
    Duration period_us = 100 * kUsPerMs;
};

// The RAN side: CU (S1-MME endpoint towards the MME) and gNB user-plane
// endpoint (GTP-U towards the SPGW), plus the UEs it serves.
class CellSite : public MessageSink {
public:
    CellSite(NetContext& net, const CalibrationProfile& profile, Addr addr);

    void deliver(const Message& m) override;
    Site current_site() const override { return Site::ran; }

    Addr addr() const { return addr_; }
    void set_core(Addr mme, Addr spgw, Addr pdn)
    {
        mme_addr_ = mme;
        spgw_addr_ = spgw;
        pdn_addr_ = pdn;
    }
    void set_s1_vpn(bool v) { s1_vpn_ = v; }
    void set_user_plane_vpn(bool v) { user_plane_vpn_ = v; }

    // Four-message start handshake (INIT, INIT-ACK, COOKIE-ECHO,
    // COOKIE-ACK); times out if the path eats the INIT.
    void associate_s1(std::function<void(bool, std::string)> done);
    bool s1_established() const
    {
        return s1_assoc_ && s1_assoc_->state == SctpState::established;
    }
    const SctpAssociation* s1_association() const
    {
        return s1_assoc_ ? &*s1_assoc_ : nullptr;
    }

    void attach_ue(std::uint64_t ue_id, std::function<void(const AttachResult&)> done);
    bool ue_attached(std::uint64_t ue_id) const;
    Addr ue_inner_addr(std::uint64_t ue_id) const;
    // Forget the data-plane state for a UE (used when connectivity must be
    // re-established from the base station).
    void detach_local(std::uint64_t ue_id);

    void start_uplink(std::uint64_t ue_id, UplinkConfig cfg);
    void stop_streams_at(SimTime t) { stream_stop_at_ = t; }

    const std::vector<SimTime>& uplink_sent_log(std::uint64_t ue_id) const;
    const GtpTunnelTable& gnb_tunnels() const { return gnb_tunnels_; }

private:
    void uplink_tick(std::uint64_t ue_id);

    NetContext& net_;
    const CalibrationProfile& profile_;
    Addr addr_;
    Addr mme_addr_ = 0, spgw_addr_ = 0, pdn_addr_ = 0;
    bool s1_vpn_ = true;
    bool user_plane_vpn_ = true;

    std::optional<SctpAssociation> s1_assoc_;
    std::function<void(bool, std::string)> s1_done_;

    struct UeNode {
        std::uint64_t id;
        bool attached = false;
        Addr inner_addr = 0;
        std::uint32_t gnb_teid = 0;
        SimTime attach_started = 0;
        std::function<void(const AttachResult&)> attach_done;
        UplinkConfig uplink;
        bool uplink_running = false;
        std::vector<SimTime> sent_log;
    };
    UeNode& ue(std::uint64_t id);
    std::map<std::uint64_t, UeNode> ues_;
    GtpTunnelTable gnb_tunnels_;
    std::uint32_t next_gnb_teid_ = 0x8000;
    std::uint32_t vtag_counter_ = 0x9000;
    SimTime stream_stop_at_ = -1;
};

} // namespace epcmig
