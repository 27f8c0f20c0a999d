#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epcmig/bytes.hpp"
#include "epcmig/sim/time.hpp"

namespace epcmig {

class CorruptBlobError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Section identities, in mandatory file order. GDEV/GTUN exist only for
// SPGW dumps taken with the gtp utility enabled.
enum class SectionTag : int {
    pstree = 0,  // process tree
    pages = 1,   // memory content (app records + page payload)
    sk_tcp = 2,  // TCP socket repair records
    sk_sctp = 3, // SCTP association repair records
    netns = 4,   // namespace: addresses and open ports
    cgroup = 5,  // opaque control-group payload
    gtp_dev = 6, // gtp0 interface config + masquerade rule
    gtp_tun = 7, // GTP tunnel list
};
constexpr int kSectionCount = 8;

// 4-byte on-disk tag for each section.
const char* section_wire_tag(SectionTag t);
const char* section_name(SectionTag t);
std::optional<SectionTag> section_from_wire(const char* four);

struct BlobSection {
    SectionTag tag;
    std::vector<std::uint8_t> payload;
};

// Versioned checkpoint dump. The serialized form is byte-exact:
// 8-byte magic "CRMETA01", then each section as
// (4-byte tag)(8-byte LE length)(payload)(4-byte LE CRC32 of payload).
// total_bytes() counts payload bytes only and is what travels on the
// management network and what the network-load indicator reports.
class MetadataBlob {
public:
    static constexpr char kMagic[9] = "CRMETA01";
    static constexpr std::int64_t kFramingPerSection = 16;

    void add_section(SectionTag tag, std::vector<std::uint8_t> payload);
    bool has_section(SectionTag tag) const;
    const std::vector<std::uint8_t>& section(SectionTag tag) const;
    const std::vector<BlobSection>& sections() const { return sections_; }

    std::int64_t total_bytes() const;
    std::int64_t file_bytes() const;

    std::vector<std::uint8_t> serialize() const;
    static MetadataBlob parse(const std::vector<std::uint8_t>& bytes);

    // Recomputes every section CRC against the stored ones (the stored
    // CRCs are populated by serialize/parse; fresh in-memory blobs are
    // trusted by construction).
    void write_file(const std::string& path) const;
    static MetadataBlob read_file(const std::string& path);

private:
    std::vector<BlobSection> sections_;
};

std::uint32_t crc32_of(const std::uint8_t* data, size_t n);

} // namespace epcmig
