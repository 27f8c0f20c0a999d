#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epcmig/net/message.hpp"
#include "epcmig/proto/gtp.hpp"
#include "epcmig/proto/sctp.hpp"
#include "epcmig/proto/tcp.hpp"
#include "epcmig/vnf/flavor.hpp"

namespace epcmig {

class CapacityError : public SimError {
public:
    using SimError::SimError;
};

struct Host {
    std::string id;
    Site site;
    int vcpus_capacity;
    int vcpus_used = 0;

    void reserve(int vcpus)
    {
        if (vcpus_used + vcpus > vcpus_capacity)
            throw CapacityError("host " + id + " has no capacity for " + std::to_string(vcpus) +
                                " vcpus");
        vcpus_used += vcpus;
    }
    void release(int vcpus) { vcpus_used -= vcpus; }
};

struct SubscriberRecord {
    std::uint64_t imsi = 0;
    std::vector<std::uint8_t> profile;
    bool operator==(const SubscriberRecord&) const = default;
};

struct HssState {
    std::vector<SubscriberRecord> subscribers;
    bool operator==(const HssState&) const = default;
};

struct UeContext {
    std::uint64_t ue_id = 0;
    bool active = false;
    bool operator==(const UeContext&) const = default;
};

struct MmeState {
    std::vector<UeContext> ue_contexts;
    bool operator==(const MmeState&) const = default;
};

struct SpgwSession {
    std::uint64_t ue_id = 0;
    Addr ue_inner_addr = 0;
    bool operator==(const SpgwSession&) const = default;
};

struct SpgwState {
    std::optional<Gtp0Device> gtp0;
    GtpTunnelTable tunnels;
    std::uint32_t next_teid = 0x1000;
    std::vector<SpgwSession> sessions;

    bool operator==(const SpgwState& o) const
    {
        return gtp0 == o.gtp0 && next_teid == o.next_teid && sessions == o.sessions &&
               tunnels.entries() == o.tunnels.entries();
    }
};

class PdnSink;

// One modeled EPC process. Control-plane handling runs in userspace and
// pauses while the process is frozen; the SPGW user plane is a kernel
// path that keeps forwarding at the source during a checkpoint and only
// breaks at the restore switchover.
class Vnf : public MessageSink {
public:
    Vnf(NetContext& net, const CalibrationProfile& profile, VnfKind kind, FlavorSpec flavor,
        Host* host, Addr addr);

    // MessageSink
    void deliver(const Message& m) override;
    Site current_site() const override { return host_->site; }

    VnfKind kind() const { return kind_; }
    const FlavorSpec& flavor() const { return flavor_; }
    Host* host() const { return host_; }
    Addr addr() const { return addr_; }

    void set_peers(Addr hss, Addr spgw, Addr cu, Addr pdn)
    {
        hss_addr_ = hss;
        spgw_addr_ = spgw;
        cu_addr_ = cu;
        pdn_addr_ = pdn;
    }
    void set_pdn_sink(PdnSink* sink) { pdn_sink_ = sink; }

    // ---- lifecycle ----
    bool frozen() const { return frozen_; }
    bool vm_paused() const { return vm_paused_; }
    bool destroyed() const { return destroyed_; }
    void freeze();   // checkpoint start: userspace stops
    void vm_pause(); // stop-and-copy: the whole guest stops
    void relocate(Host* dest);
    void unfreeze();
    void vm_unpause();
    void destroy();
    // Deliveries are deferred until this instant after a VM move
    // (address learning) — cleared by the reachability event.
    void set_reachable_at(SimTime t) { reachable_at_ = t; }
    SimTime reachable_at() const { return reachable_at_; }
    // SPGW data-plane gate after the user plane moves hosts.
    void set_user_plane_ready_at(SimTime t) { user_plane_ready_at_ = t; }
    SimTime user_plane_ready_at() const { return user_plane_ready_at_; }
    // Container switchover: the source-side kernel path stops serving.
    void set_source_plane_down() { source_plane_up_ = false; }
    void set_source_plane_up() { source_plane_up_ = true; }

    void drain_pending();

    // Service-level liveness, what an ICMP probe of the VNF IP sees.
    bool service_available(SimTime now) const
    {
        return !destroyed_ && !frozen_ && !vm_paused_ && now >= reachable_at_;
    }

    // ---- memory model ----
    std::int64_t current_dirty_pages_per_s() const;
    std::int64_t dirty_page_count(Duration interval_us) const;
    void set_uplink_active(bool v) { uplink_active_ = v; }
    bool uplink_active() const { return uplink_active_; }

    // ---- protocol endpoints ----
    std::vector<TcpSocket>& tcp_sockets() { return tcp_sockets_; }
    const std::vector<TcpSocket>& tcp_sockets() const { return tcp_sockets_; }
    std::vector<SctpAssociation>& sctp_assocs() { return sctp_assocs_; }
    const std::vector<SctpAssociation>& sctp_assocs() const { return sctp_assocs_; }
    const std::vector<std::uint16_t>& udp_ports() const { return udp_ports_; }
    void set_udp_ports(std::vector<std::uint16_t> p) { udp_ports_ = std::move(p); }

    // Client-side TCP connect (three-way exchange on the wire).
    void connect_tcp(Addr server, std::uint16_t port, std::function<void(bool)> done);

    // ---- app state ----
    HssState& hss_state() { return hss_state_; }
    MmeState& mme_state() { return mme_state_; }
    SpgwState& spgw_state() { return spgw_state_; }
    const HssState& hss_state() const { return hss_state_; }
    const MmeState& mme_state() const { return mme_state_; }
    const SpgwState& spgw_state() const { return spgw_state_; }

    void ensure_gtp0();
    void teardown_user_plane(); // degraded restore: no gtp0, empty tunnel list

    NetContext& net() { return net_; }
    const CalibrationProfile& profile() const { return profile_; }

    // S1 handshake bookkeeping (MME side).
    std::uint32_t alloc_vtag() { return vtag_counter_ += 7; }

private:
    void handle_control(const Message& m);
    void handle_user_plane(const Message& m);
    void handle_hss(const Message& m);
    void handle_mme(const Message& m);
    void handle_spgw(const Message& m);
    void handle_tcp_setup(const Message& m);
    void handle_sctp_setup(const Message& m);

    NetContext& net_;
    const CalibrationProfile& profile_;
    VnfKind kind_;
    FlavorSpec flavor_;
    Host* host_;
    Addr addr_;

    bool frozen_ = false;
    bool vm_paused_ = false;
    bool destroyed_ = false;
    bool uplink_active_ = false;
    bool source_plane_up_ = true;
    SimTime reachable_at_ = 0;
    SimTime user_plane_ready_at_ = 0;

    std::vector<TcpSocket> tcp_sockets_;
    std::vector<SctpAssociation> sctp_assocs_;
    std::vector<std::uint16_t> udp_ports_;

    HssState hss_state_;
    MmeState mme_state_;
    SpgwState spgw_state_;

    Addr hss_addr_ = 0, spgw_addr_ = 0, cu_addr_ = 0, pdn_addr_ = 0;
    PdnSink* pdn_sink_ = nullptr;

    std::deque<Message> ctrl_pending_;
    std::deque<Message> data_pending_;
    std::function<void(bool)> tcp_connect_done_;
    std::uint32_t vtag_counter_ = 0x5000;
};

// Instantiates the process and opens its kind-specific listeners:
// HSS a TCP listener, MME an SCTP listener, SPGW its UDP ports plus the
// gtp0 device and the SGi masquerade rule.
std::unique_ptr<Vnf> spawn_vnf(NetContext& net, const CalibrationProfile& profile, VnfKind kind,
                               FlavorSpec flavor, Host* host, Addr addr);

constexpr std::uint16_t kHssTcpPort = 3868;
constexpr std::uint16_t kMmeSctpPort = 36412;

} // namespace epcmig
