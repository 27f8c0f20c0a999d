#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "epcmig/calib/kvfile.hpp"
#include "epcmig/sim/time.hpp"
#include "epcmig/vnf/flavor.hpp"

namespace epcmig {

// Per-(kind, flavor) container engine constants. Rates are what the
// checkpoint/restore services achieve on a testbed's hosts; the metadata
// size is the observed dump size for that component.
struct ContainerCalib {
    std::int64_t metadata_bytes = 0;
    std::int64_t dump_rate_bytes_per_s = 0;
    std::int64_t restore_rate_bytes_per_s = 0;
    Duration checkpoint_overhead_us = 0;
    Duration restore_overhead_us = 0;
    // Residual of the measured metadata transfer beyond the raw path
    // serialization (per-transfer session setup and per-km degradation of
    // the copy stream).
    Duration transfer_overhead_us = 0;
    Duration transfer_overhead_us_per_km = 0;
};

// Per-(kind, flavor) pre-copy engine constants. disk+ram is the image
// content actually moved (used disk blocks plus resident memory), so it
// is bounded by, not equal to, the flavor's nominal sizes.
struct VmCalib {
    std::int64_t disk_bytes = 0;
    std::int64_t ram_bytes = 0;
    Duration pre_live_us = 0;
    Duration live_setup_us = 0;
    Duration post_db_update_us = 0;
};

struct DirtyRates {
    std::int64_t idle_pages_per_s = 0;
    std::int64_t uplink_active_pages_per_s = 0;
};

// A named calibration set describing one testbed: network chain rates and
// efficiencies, engine rates, phase constants, and recovery delays. All
// rates must be positive; durations non-negative.
struct CalibrationProfile {
    std::string name;

    // net
    Duration propagation_us_per_km = 5;
    Duration switch_latency_us = 5;
    Duration lightpath_setup_us = 0;
    std::vector<std::int64_t> mgmt_hops_bps;
    std::vector<std::int64_t> tenant_hops_bps;
    double mgmt_efficiency = 1.0;      // scp/rsync stream over the management chain
    double vm_stream_efficiency = 1.0; // hypervisor migration stream, same chain
    double tenant_efficiency = 1.0;

    // overlay / address learning
    Duration rarp_delay_us = 0;
    Duration vpn_reroute_delay_us = 0;
    Duration geo_extra_us = 0; // control-plane at a remote site slows RARP further

    // vm engine
    int max_iterations = 30;
    std::int64_t stop_threshold_bytes = 1 << 20;
    Duration port_binding_us = 0;
    Duration bridge_reconfig_us = 0;
    std::int64_t log_growth_bytes_per_s = 0;

    // vnf model
    std::int64_t page_bytes = 4096;
    std::int64_t subscriber_record_bytes = 4096;
    Duration attach_timeout_us = 120 * kUsPerSecond;
    Duration sctp_handshake_timeout_us = 3 * kUsPerSecond;
    int host_vcpus = 32;

    // user-plane recovery after the data path moves hosts (per flavor)
    std::array<Duration, 2> gtp_recovery_us{};

    std::array<std::array<ContainerCalib, 2>, 3> container{}; // [kind][flavor]
    std::array<std::array<VmCalib, 2>, 3> vm{};
    std::array<DirtyRates, 3> dirty{}; // [kind]

    const ContainerCalib& cont(VnfKind k, FlavorName f) const
    {
        return container[static_cast<int>(k)][static_cast<int>(f)];
    }
    const VmCalib& vm_calib(VnfKind k, FlavorName f) const
    {
        return vm[static_cast<int>(k)][static_cast<int>(f)];
    }
    const DirtyRates& dirty_rates(VnfKind k) const { return dirty[static_cast<int>(k)]; }
    Duration gtp_recovery(FlavorName f) const
    {
        return gtp_recovery_us[static_cast<int>(f)];
    }

    std::int64_t mgmt_effective_bps() const;
    std::int64_t vm_stream_effective_bps() const;
    std::int64_t tenant_effective_bps() const;

    static CalibrationProfile from_kv(const KvFile& kv);
    static CalibrationProfile load_file(const std::string& path);

    // Resolves `name` against the profile search path: any directories in
    // the EPCMIG_PROFILE_PATH environment variable (colon separated), then
    // `extra_dir` if non-empty, then ./profiles.
    static CalibrationProfile load_named(const std::string& name,
                                         const std::string& extra_dir = {});
    static std::vector<std::string> list_available(const std::string& extra_dir = {});

    void validate() const;
};

} // namespace epcmig
