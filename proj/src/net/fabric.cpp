#include "epcmig/net/fabric.hpp"

#include <algorithm>
#include <cmath>

namespace epcmig {

const char* to_string(Site s)
{
    switch (s) {
    case Site::ran: return "ran";
    case Site::rack1: return "rack1";
    case Site::rack2: return "rack2";
    }
    return "?";
}

const char* to_string(Protocol p)
{
    switch (p) {
    case Protocol::tcp: return "tcp";
    case Protocol::sctp: return "sctp";
    case Protocol::udp: return "udp";
    }
    return "?";
}

const char* to_string(LightpathPurpose p)
{
    return p == LightpathPurpose::management ? "management" : "tenant";
}

Fabric::Fabric(const CalibrationProfile& profile, double rack_distance_km,
               bool firewall_enabled, OverlayMode overlay)
    : profile_(profile),
      overlay_(overlay),
      rack_distance_km_(rack_distance_km),
      firewall_enabled_(firewall_enabled)
{
    if (rack_distance_km < 0)
        throw NetError("rack distance must be non-negative");
    ran_rack1_ = make_path("tenant:ran-rack1", profile.tenant_hops_bps,
                           profile.tenant_efficiency, 0.0, firewall_enabled_);
    ran_rack2_ = make_path("tenant:ran-rack2", profile.tenant_hops_bps,
                           profile.tenant_efficiency, rack_distance_km, firewall_enabled_);
    rack1_rack2_tenant_ = make_path("tenant:rack1-rack2", profile.tenant_hops_bps,
                                    profile.tenant_efficiency, rack_distance_km,
                                    firewall_enabled_);
}

NetworkPath Fabric::make_path(std::string name, const std::vector<std::int64_t>& hops_bps,
                              double efficiency, double length_km, bool firewall) const
{
    NetworkPath p;
    p.name = std::move(name);
    for (auto bps : hops_bps)
        p.hops.push_back({bps, profile_.switch_latency_us});
    std::int64_t min_bps = *std::min_element(hops_bps.begin(), hops_bps.end());
    p.effective_rate_bps = std::llround(static_cast<double>(min_bps) * efficiency);
    if (p.effective_rate_bps > min_bps)
        p.effective_rate_bps = min_bps;
    p.length_km = length_km;
    p.firewall = firewall;
    p.overlay = overlay_;
    p.propagation_us = propagation_delay(length_km);
    return p;
}

Duration Fabric::propagation_delay(double length_km) const
{
    if (length_km < 0)
        throw NetError("propagation_delay: negative length");
    return std::llround(length_km * static_cast<double>(profile_.propagation_us_per_km));
}

Duration Fabric::transfer_time(std::int64_t bytes, const NetworkPath& path)
{
    if (bytes < 0)
        throw NetError("transfer_time: negative byte count");
    if (path.hops.empty())
        throw NetError("transfer_time: path has no hops");
    if (path.effective_rate_bps <= 0)
        throw NetError("transfer_time: zero-rate path '" + path.name + "'");
    return wire_time_us(bytes, path.effective_rate_bps) + path.fixed_latency_us() +
           path.propagation_us;
}

PathId Fabric::provision_lightpath(const LightpathSpec& spec, SimTime now)
{
    if (spec.a == Site::ran || spec.b == Site::ran)
        throw NetError("provision_lightpath: endpoints must be racks");
    if (spec.a == spec.b)
        throw NetError("provision_lightpath: identical endpoints");
    if (spec.length_km < 0)
        throw NetError("provision_lightpath: negative length");
    if (spec.rate_bps <= 0)
        throw NetError("provision_lightpath: rate must be positive");
    for (const auto& lp : lightpaths_) {
        bool same_ends = (lp.spec.a == spec.a && lp.spec.b == spec.b) ||
                         (lp.spec.a == spec.b && lp.spec.b == spec.a);
        if (same_ends && lp.spec.purpose == spec.purpose)
            throw NetError(std::string("duplicate ") + to_string(spec.purpose) +
                           " lightpath between racks");
    }
    Lightpath lp;
    lp.spec = spec;
    lp.usable_at = now + profile_.lightpath_setup_us;
    bool mgmt = spec.purpose == LightpathPurpose::management;
    lp.path = make_path(mgmt ? "mgmt:rack1-rack2" : "tenant-lp:rack1-rack2",
                        mgmt ? profile_.mgmt_hops_bps : profile_.tenant_hops_bps,
                        mgmt ? profile_.mgmt_efficiency : profile_.tenant_efficiency,
                        spec.length_km, /*firewall=*/false);
    lightpaths_.push_back(std::move(lp));
    if (mgmt)
        mgmt_path_ = lightpaths_.back().path;
    return static_cast<PathId>(lightpaths_.size() - 1);
}

bool Fabric::lightpath_usable(PathId id, SimTime now) const
{
    return id >= 0 && id < static_cast<PathId>(lightpaths_.size()) &&
           now >= lightpaths_[id].usable_at;
}

const NetworkPath& Fabric::lightpath_path(PathId id) const
{
    if (id < 0 || id >= static_cast<PathId>(lightpaths_.size()))
        throw NetError("unknown lightpath handle");
    return lightpaths_[id].path;
}

const NetworkPath& Fabric::tenant_route(Site a, Site b) const
{
    if (a == b)
        throw NetError("tenant_route: same site");
    if (a > b)
        std::swap(a, b);
    if (a == Site::ran && b == Site::rack1)
        return ran_rack1_;
    if (a == Site::ran && b == Site::rack2)
        return ran_rack2_;
    return rack1_rack2_tenant_;
}

const NetworkPath& Fabric::mgmt_route() const
{
    if (!mgmt_path_)
        throw NetError("no management path provisioned");
    return *mgmt_path_;
}

FirewallVerdict Fabric::apply_firewall(const Packet& p, const NetworkPath& path) const
{
    if (!path.firewall)
        return FirewallVerdict::pass;
    // The layer-2 firewall blocks SCTP; anything UDP-encapsulated (VPN)
    // presents as UDP on the wire and passes.
    return p.protocol == Protocol::sctp ? FirewallVerdict::drop : FirewallVerdict::pass;
}

Duration Fabric::overlay_reroute(Addr addr, OverlayMode mode) const
{
    if (!knows_addr(addr))
        throw NetError("overlay_reroute: unknown endpoint " + std::to_string(addr));
    Duration d = profile_.rarp_delay_us + profile_.geo_extra_us;
    if (mode == OverlayMode::vpn)
        d += profile_.vpn_reroute_delay_us;
    return d;
}

} // namespace epcmig
