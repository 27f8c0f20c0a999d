#include "epcmig/calib/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>

namespace epcmig {

namespace fs = std::filesystem;

static std::int64_t effective_bps(const std::vector<std::int64_t>& hops, double efficiency)
{
    std::int64_t min_bps = *std::min_element(hops.begin(), hops.end());
    return std::llround(static_cast<double>(min_bps) * efficiency);
}

std::int64_t CalibrationProfile::mgmt_effective_bps() const
{
    return effective_bps(mgmt_hops_bps, mgmt_efficiency);
}

std::int64_t CalibrationProfile::vm_stream_effective_bps() const
{
    return effective_bps(mgmt_hops_bps, vm_stream_efficiency);
}

std::int64_t CalibrationProfile::tenant_effective_bps() const
{
    return effective_bps(tenant_hops_bps, tenant_efficiency);
}

static Duration kv_seconds(const KvFile& kv, const std::string& key, double fallback)
{
    return seconds_us(kv.get_double_or(key, fallback));
}

CalibrationProfile CalibrationProfile::from_kv(const KvFile& kv)
{
    CalibrationProfile p;
    p.name = kv.get("profile.name");

    p.propagation_us_per_km = kv.get_int_or("net.propagation_us_per_km", 5);
    p.switch_latency_us = kv.get_int_or("net.switch_latency_us", 5);
    p.lightpath_setup_us = kv.get_int_or("net.lightpath_setup_us", 0);
    p.mgmt_hops_bps = kv.get_int_list("net.mgmt_hops_bps");
    p.tenant_hops_bps = kv.get_int_list("net.tenant_hops_bps");
    p.mgmt_efficiency = kv.get_double("net.mgmt_efficiency");
    p.vm_stream_efficiency = kv.get_double("net.vm_stream_efficiency");
    p.tenant_efficiency = kv.get_double_or("net.tenant_efficiency", 1.0);

    p.rarp_delay_us = kv_seconds(kv, "overlay.rarp_delay_s", 0.0);
    p.vpn_reroute_delay_us = kv_seconds(kv, "overlay.vpn_reroute_delay_s", 0.0);
    p.geo_extra_us = kv_seconds(kv, "overlay.geo_extra_s", 0.0);

    p.max_iterations = static_cast<int>(kv.get_int_or("vm.max_iterations", 30));
    p.stop_threshold_bytes = kv.get_int_or("vm.stop_threshold_bytes", 1 << 20);
    p.port_binding_us = kv_seconds(kv, "vm.post_port_binding_s", 0.0);
    p.bridge_reconfig_us = kv_seconds(kv, "vm.post_bridge_reconfig_s", 0.0);
    p.log_growth_bytes_per_s = kv.get_int_or("vm.log_growth_bytes_per_s", 0);

    p.page_bytes = kv.get_int_or("vnf.page_bytes", 4096);
    p.subscriber_record_bytes = kv.get_int_or("vnf.subscriber_record_bytes", 4096);
    p.attach_timeout_us = kv_seconds(kv, "vnf.attach_timeout_s", 120.0);
    p.sctp_handshake_timeout_us = kv_seconds(kv, "vnf.sctp_handshake_timeout_s", 3.0);
    p.host_vcpus = static_cast<int>(kv.get_int_or("vnf.host_vcpus", 32));

    p.gtp_recovery_us[0] = kv_seconds(kv, "ue.gtp_recovery_small_s", 0.0);
    p.gtp_recovery_us[1] = kv_seconds(kv, "ue.gtp_recovery_medium_s", 0.0);

    static const char* kinds[] = {"hss", "mme", "spgw"};
    static const char* flavors[] = {"small", "medium"};
    for (int k = 0; k < 3; ++k) {
        std::string kb = std::string("container.") + kinds[k] + ".";
        for (int f = 0; f < 2; ++f) {
            std::string b = kb + flavors[f] + ".";
            ContainerCalib& c = p.container[k][f];
            c.metadata_bytes = kv.get_int(b + "metadata_bytes");
            c.dump_rate_bytes_per_s = kv.get_int(b + "dump_rate_bytes_per_s");
            c.restore_rate_bytes_per_s = kv.get_int(b + "restore_rate_bytes_per_s");
            c.checkpoint_overhead_us = kv_seconds(kv, b + "checkpoint_overhead_s", 0.0);
            c.restore_overhead_us = kv_seconds(kv, b + "restore_overhead_s", 0.0);
            c.transfer_overhead_us = kv_seconds(kv, b + "transfer_overhead_s", 0.0);
            c.transfer_overhead_us_per_km =
                seconds_us(kv.get_double_or(kb + "transfer_overhead_s_per_km", 0.0));
        }
        std::string vb = std::string("vm.") + kinds[k] + ".";
        for (int f = 0; f < 2; ++f) {
            std::string b = vb + flavors[f] + ".";
            VmCalib& v = p.vm[k][f];
            v.disk_bytes = kv.get_int(b + "disk_bytes");
            v.ram_bytes = kv.get_int(b + "ram_bytes");
            v.pre_live_us = kv_seconds(kv, b + "pre_live_s", 0.0);
            v.live_setup_us = kv_seconds(kv, b + "live_setup_s", 0.0);
            v.post_db_update_us = kv_seconds(kv, b + "post_db_update_s", 0.0);
        }
        p.dirty[k].idle_pages_per_s =
            kv.get_int_or("vnf." + std::string(kinds[k]) + ".dirty_pages_per_s_idle", 0);
        p.dirty[k].uplink_active_pages_per_s =
            kv.get_int_or("vnf." + std::string(kinds[k]) + ".dirty_pages_per_s_uplink", 0);
    }

    p.validate();
    return p;
}

void CalibrationProfile::validate() const
{
    auto req_pos = [&](std::int64_t v, const std::string& what) {
        if (v <= 0)
            throw ValidationError("profile " + name + ": " + what + " must be positive");
    };
    auto req_nonneg = [&](std::int64_t v, const std::string& what) {
        if (v < 0)
            throw ValidationError("profile " + name + ": " + what + " must be non-negative");
    };
    if (mgmt_hops_bps.empty() || tenant_hops_bps.empty())
        throw ValidationError("profile " + name + ": hop lists must be non-empty");
    for (auto r : mgmt_hops_bps)
        req_pos(r, "net.mgmt_hops_bps element");
    for (auto r : tenant_hops_bps)
        req_pos(r, "net.tenant_hops_bps element");
    if (mgmt_efficiency <= 0 || mgmt_efficiency > 1.0)
        throw ValidationError("profile " + name + ": net.mgmt_efficiency out of (0,1]");
    if (vm_stream_efficiency <= 0 || vm_stream_efficiency > 1.0)
        throw ValidationError("profile " + name + ": net.vm_stream_efficiency out of (0,1]");
    req_pos(page_bytes, "vnf.page_bytes");
    req_pos(stop_threshold_bytes, "vm.stop_threshold_bytes");
    if (max_iterations < 1)
        throw ValidationError("profile " + name + ": vm.max_iterations must be >= 1");
    static const char* kinds[] = {"hss", "mme", "spgw"};
    static const char* flavors[] = {"small", "medium"};
    for (int k = 0; k < 3; ++k)
        for (int f = 0; f < 2; ++f) {
            std::string tag = std::string(kinds[k]) + "." + flavors[f];
            const ContainerCalib& c = container[k][f];
            req_pos(c.metadata_bytes, "container." + tag + ".metadata_bytes");
            req_pos(c.dump_rate_bytes_per_s, "container." + tag + ".dump_rate_bytes_per_s");
            req_pos(c.restore_rate_bytes_per_s, "container." + tag + ".restore_rate_bytes_per_s");
            req_nonneg(c.transfer_overhead_us, "container." + tag + ".transfer_overhead_s");
            const VmCalib& v = vm[k][f];
            req_pos(v.disk_bytes, "vm." + tag + ".disk_bytes");
            req_pos(v.ram_bytes, "vm." + tag + ".ram_bytes");
            req_nonneg(v.pre_live_us, "vm." + tag + ".pre_live_s");
        }
}

CalibrationProfile CalibrationProfile::load_file(const std::string& path)
{
    return from_kv(KvFile::parse_file(path));
}

static std::vector<std::string> search_dirs(const std::string& extra_dir)
{
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("EPCMIG_PROFILE_PATH")) {
        std::string v = env;
        size_t pos = 0;
        while (pos != std::string::npos) {
            size_t colon = v.find(':', pos);
            std::string d = colon == std::string::npos ? v.substr(pos)
                                                       : v.substr(pos, colon - pos);
            if (!d.empty())
                dirs.push_back(d);
            pos = colon == std::string::npos ? std::string::npos : colon + 1;
        }
    }
    if (!extra_dir.empty())
        dirs.push_back(extra_dir);
    dirs.push_back("profiles");
    return dirs;
}

CalibrationProfile CalibrationProfile::load_named(const std::string& name,
                                                  const std::string& extra_dir)
{
    // A path-looking name loads directly.
    if (name.find('/') != std::string::npos || name.size() > 8 &&
        name.compare(name.size() - 8, 8, ".profile") == 0)
        return load_file(name);
    for (const auto& dir : search_dirs(extra_dir)) {
        fs::path candidate = fs::path(dir) / (name + ".profile");
        if (fs::exists(candidate))
            return load_file(candidate.string());
    }
    throw ValidationError("unknown profile '" + name + "' (searched EPCMIG_PROFILE_PATH and ./profiles)");
}

std::vector<std::string> CalibrationProfile::list_available(const std::string& extra_dir)
{
    std::vector<std::string> names;
    for (const auto& dir : search_dirs(extra_dir)) {
        std::error_code ec;
        for (const auto& ent : fs::directory_iterator(dir, ec)) {
            if (ent.path().extension() == ".profile")
                names.push_back(ent.path().stem().string());
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace epcmig
