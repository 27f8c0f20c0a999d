#pragma once

#include <cstdint>
#include <string>

namespace epcmig {

enum class VnfKind { hss, mme, spgw };
enum class FlavorName { small, medium };
enum class OverlayMode { vpn, floating_ip };
enum class Virtualization { vm, container };

// Compute-instance size class. The two classes used throughout are fixed
// tuples; anything else is rejected at scenario validation.
struct FlavorSpec {
    FlavorName name;
    int vcpus;
    std::int64_t ram_mb;
    std::int64_t disk_gb;

    static FlavorSpec small() { return {FlavorName::small, 1, 2048, 20}; }
    static FlavorSpec medium() { return {FlavorName::medium, 2, 4096, 40}; }
    static FlavorSpec of(FlavorName n)
    {
        return n == FlavorName::small ? small() : medium();
    }
};

const char* to_string(VnfKind k);
const char* to_string(FlavorName f);
const char* to_string(OverlayMode m);
const char* to_string(Virtualization v);

VnfKind vnf_kind_from(const std::string& s);
FlavorName flavor_from(const std::string& s);
OverlayMode overlay_from(const std::string& s);
Virtualization virtualization_from(const std::string& s);

} // namespace epcmig
