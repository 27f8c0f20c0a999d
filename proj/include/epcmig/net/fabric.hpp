#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epcmig/calib/profile.hpp"
#include "epcmig/sim/time.hpp"
#include "epcmig/vnf/flavor.hpp"

namespace epcmig {

class NetError : public SimError {
public:
    using SimError::SimError;
};

// Logical layer-3 address of an entity. Stable across migrations; what
// changes when a VNF moves is the site the fabric resolves it to and how
// long peers take to learn the new mapping.
using Addr = std::uint32_t;

enum class Site : int { ran = 0, rack1 = 1, rack2 = 2 };
const char* to_string(Site s);

enum class Protocol { tcp, sctp, udp };
const char* to_string(Protocol p);

enum class HeaderKind { ip, udp, gtp, vpn_outer };

struct Header {
    HeaderKind kind;
    std::int64_t bytes;
};

struct Packet {
    Addr src = 0;
    Addr dst = 0;
    Protocol protocol = Protocol::udp;
    std::int64_t payload_len = 0;
    std::vector<Header> headers;
    std::optional<std::uint32_t> teid;
    // For tunneled packets the payload is itself a packet; kept verbatim
    // so decapsulation is an exact inverse.
    std::shared_ptr<const Packet> encapsulated;

    std::int64_t wire_len() const
    {
        std::int64_t n = payload_len;
        for (const auto& h : headers)
            n += h.bytes;
        return n;
    }

    bool operator==(const Packet& o) const
    {
        if (src != o.src || dst != o.dst || protocol != o.protocol ||
            payload_len != o.payload_len || teid != o.teid)
            return false;
        if (headers.size() != o.headers.size())
            return false;
        for (size_t i = 0; i < headers.size(); ++i)
            if (headers[i].kind != o.headers[i].kind || headers[i].bytes != o.headers[i].bytes)
                return false;
        if (!encapsulated != !o.encapsulated)
            return false;
        return !encapsulated || *encapsulated == *o.encapsulated;
    }
};

struct LinkHop {
    std::int64_t rate_bps;
    Duration latency_us;
};

// One reachable route between two sites: ordered hop chain, realized
// effective rate, fiber length, and the layer-2 policy on it.
struct NetworkPath {
    std::string name;
    std::vector<LinkHop> hops;
    std::int64_t effective_rate_bps = 0;
    double length_km = 0;
    bool firewall = false;
    OverlayMode overlay = OverlayMode::vpn;
    Duration propagation_us = 0;

    Duration fixed_latency_us() const
    {
        Duration t = 0;
        for (const auto& h : hops)
            t += h.latency_us;
        return t;
    }
};

enum class LightpathPurpose { management, tenant };
const char* to_string(LightpathPurpose p);

struct LightpathSpec {
    Site a;
    Site b;
    double length_km = 0;
    std::int64_t rate_bps = 0;
    LightpathPurpose purpose = LightpathPurpose::management;
};

using PathId = int;

enum class FirewallVerdict { pass, drop };

// The Ethernet-over-WDM backhaul between the RAN site and the two compute
// racks. Owns the path table, the lightpath registry, the SCTP-blocking
// firewall, and the packet accounting used by the conservation checks.
class Fabric {
public:
    Fabric(const CalibrationProfile& profile, double rack_distance_km, bool firewall_enabled,
           OverlayMode overlay);

    // Static propagation model, 5 us/km by default.
    Duration propagation_delay(double length_km) const;

    static Duration transfer_time(std::int64_t bytes, const NetworkPath& path);

    PathId provision_lightpath(const LightpathSpec& spec, SimTime now);
    bool lightpath_usable(PathId id, SimTime now) const;
    const NetworkPath& lightpath_path(PathId id) const;

    // Route between two sites for ordinary (tenant network) traffic.
    const NetworkPath& tenant_route(Site a, Site b) const;
    // The management route requires a provisioned management lightpath.
    const NetworkPath& mgmt_route() const;
    bool has_mgmt_route() const { return mgmt_path_.has_value(); }

    FirewallVerdict apply_firewall(const Packet& p, const NetworkPath& path) const;

    // Address-learning delay seen by peers once `addr` has moved hosts.
    // floating-ip: RARP update only; vpn: RARP plus client-to-client
    // rerouting; both stretched by the profile's geographic extra.
    Duration overlay_reroute(Addr addr, OverlayMode mode) const;

    void register_addr(Addr a) { known_addrs_.insert({a, true}); }
    bool knows_addr(Addr a) const { return known_addrs_.count(a) != 0; }

    // packet accounting
    void count_injected() { ++injected_; }
    void count_delivered() { ++delivered_; }
    void count_firewall_drop() { ++firewall_dropped_; }
    void count_unknown_teid() { ++unknown_teid_dropped_; }
    std::int64_t injected() const { return injected_; }
    std::int64_t delivered() const { return delivered_; }
    std::int64_t firewall_dropped() const { return firewall_dropped_; }
    std::int64_t unknown_teid_dropped() const { return unknown_teid_dropped_; }

    const CalibrationProfile& profile() const { return profile_; }

private:
    NetworkPath make_path(std::string name, const std::vector<std::int64_t>& hops_bps,
                          double efficiency, double length_km, bool firewall) const;

    const CalibrationProfile& profile_;
    OverlayMode overlay_;
    double rack_distance_km_;
    bool firewall_enabled_;

    NetworkPath ran_rack1_;
    NetworkPath ran_rack2_;
    NetworkPath rack1_rack2_tenant_;
    std::optional<NetworkPath> mgmt_path_;

    struct Lightpath {
        LightpathSpec spec;
        SimTime usable_at;
        NetworkPath path;
    };
    std::vector<Lightpath> lightpaths_;
    std::map<Addr, bool> known_addrs_;

    std::int64_t injected_ = 0;
    std::int64_t delivered_ = 0;
    std::int64_t firewall_dropped_ = 0;
    std::int64_t unknown_teid_dropped_ = 0;
};

} // namespace epcmig
