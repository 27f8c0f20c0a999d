#include "epcmig/vnf/flavor.hpp"

#include "epcmig/calib/kvfile.hpp"

namespace epcmig {

const char* to_string(VnfKind k)
{
    switch (k) {
    case VnfKind::hss: return "hss";
    case VnfKind::mme: return "mme";
    case VnfKind::spgw: return "spgw";
    }
    return "?";
}

const char* to_string(FlavorName f)
{
    return f == FlavorName::small ? "small" : "medium";
}

const char* to_string(OverlayMode m)
{
    return m == OverlayMode::vpn ? "vpn" : "floating-ip";
}

const char* to_string(Virtualization v)
{
    return v == Virtualization::vm ? "vm" : "container";
}

VnfKind vnf_kind_from(const std::string& s)
{
    if (s == "hss") return VnfKind::hss;
    if (s == "mme") return VnfKind::mme;
    if (s == "spgw") return VnfKind::spgw;
    throw ValidationError("unknown vnf kind '" + s + "' (expected hss|mme|spgw)");
}

FlavorName flavor_from(const std::string& s)
{
    if (s == "small") return FlavorName::small;
    if (s == "medium") return FlavorName::medium;
    throw ValidationError("unknown flavor '" + s + "' (expected small|medium)");
}

OverlayMode overlay_from(const std::string& s)
{
    if (s == "vpn") return OverlayMode::vpn;
    if (s == "floating-ip" || s == "floating_ip") return OverlayMode::floating_ip;
    throw ValidationError("unknown overlay '" + s + "' (expected vpn|floating-ip)");
}

Virtualization virtualization_from(const std::string& s)
{
    if (s == "vm") return Virtualization::vm;
    if (s == "container") return Virtualization::container;
    throw ValidationError("unknown virtualization '" + s + "' (expected vm|container)");
}

} // namespace epcmig
