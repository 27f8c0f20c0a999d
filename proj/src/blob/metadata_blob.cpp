#include "epcmig/blob/metadata_blob.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

namespace epcmig {

static const char* kWireTags[kSectionCount] = {"PSTR", "PAGE", "SKTC", "SKSC",
                                               "NETN", "CGRP", "GDEV", "GTUN"};
static const char* kNames[kSectionCount] = {"PSTREE", "PAGES",  "SK-TCP",  "SK-SCTP",
                                            "NETNS",  "CGROUP", "GTP-DEV", "GTP-TUN"};

const char* section_wire_tag(SectionTag t) { return kWireTags[static_cast<int>(t)]; }
const char* section_name(SectionTag t) { return kNames[static_cast<int>(t)]; }

std::optional<SectionTag> section_from_wire(const char* four)
{
    for (int i = 0; i < kSectionCount; ++i)
        if (std::memcmp(four, kWireTags[i], 4) == 0)
            return static_cast<SectionTag>(i);
    return std::nullopt;
}

std::uint32_t crc32_of(const std::uint8_t* data, size_t n)
{
    return static_cast<std::uint32_t>(::crc32(0L, data, static_cast<uInt>(n)));
}

void MetadataBlob::add_section(SectionTag tag, std::vector<std::uint8_t> payload)
{
    if (!sections_.empty() && static_cast<int>(sections_.back().tag) >= static_cast<int>(tag))
        throw CorruptBlobError(std::string("section order violation at ") + section_name(tag));
    sections_.push_back({tag, std::move(payload)});
}

bool MetadataBlob::has_section(SectionTag tag) const
{
    for (const auto& s : sections_)
        if (s.tag == tag)
            return true;
    return false;
}

const std::vector<std::uint8_t>& MetadataBlob::section(SectionTag tag) const
{
    for (const auto& s : sections_)
        if (s.tag == tag)
            return s.payload;
    throw CorruptBlobError(std::string("missing section ") + section_name(tag));
}

std::int64_t MetadataBlob::total_bytes() const
{
    std::int64_t n = 0;
    for (const auto& s : sections_)
        n += static_cast<std::int64_t>(s.payload.size());
    return n;
}

std::int64_t MetadataBlob::file_bytes() const
{
    return 8 + total_bytes() + kFramingPerSection * static_cast<std::int64_t>(sections_.size());
}

std::vector<std::uint8_t> MetadataBlob::serialize() const
{
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<size_t>(file_bytes()));
    out.insert(out.end(), kMagic, kMagic + 8);
    for (const auto& s : sections_) {
        const char* tag = section_wire_tag(s.tag);
        out.insert(out.end(), tag, tag + 4);
        std::uint64_t len = s.payload.size();
        for (int i = 0; i < 8; ++i)
            out.push_back(static_cast<std::uint8_t>((len >> (8 * i)) & 0xFF));
        out.insert(out.end(), s.payload.begin(), s.payload.end());
        std::uint32_t crc = crc32_of(s.payload.data(), s.payload.size());
        for (int i = 0; i < 4; ++i)
            out.push_back(static_cast<std::uint8_t>((crc >> (8 * i)) & 0xFF));
    }
    return out;
}

MetadataBlob MetadataBlob::parse(const std::vector<std::uint8_t>& bytes)
{
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 8) != 0)
        throw CorruptBlobError("bad magic (not a CRMETA01 dump or unsupported version)");
    MetadataBlob blob;
    size_t off = 8;
    int last_tag = -1;
    while (off < bytes.size()) {
        if (off + 12 > bytes.size())
            throw CorruptBlobError("truncated section header at offset " + std::to_string(off));
        char tag4[4];
        std::memcpy(tag4, bytes.data() + off, 4);
        auto tag = section_from_wire(tag4);
        if (!tag)
            throw CorruptBlobError("unknown section tag '" + std::string(tag4, 4) + "'");
        if (static_cast<int>(*tag) <= last_tag)
            throw CorruptBlobError(std::string("section order violation at ") +
                                   section_name(*tag));
        last_tag = static_cast<int>(*tag);
        off += 4;
        std::uint64_t len = 0;
        for (int i = 0; i < 8; ++i)
            len |= static_cast<std::uint64_t>(bytes[off + i]) << (8 * i);
        off += 8;
        if (off + len + 4 > bytes.size())
            throw CorruptBlobError(std::string("truncated payload in section ") +
                                   section_name(*tag));
        std::vector<std::uint8_t> payload(bytes.begin() + off, bytes.begin() + off + len);
        off += len;
        std::uint32_t stored = 0;
        for (int i = 0; i < 4; ++i)
            stored |= static_cast<std::uint32_t>(bytes[off + i]) << (8 * i);
        off += 4;
        if (stored != crc32_of(payload.data(), payload.size()))
            throw CorruptBlobError(std::string("CRC mismatch in section ") + section_name(*tag));
        blob.sections_.push_back({*tag, std::move(payload)});
    }
    return blob;
}

void MetadataBlob::write_file(const std::string& path) const
{
    auto bytes = serialize();
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw CorruptBlobError("cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

MetadataBlob MetadataBlob::read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f)
        throw CorruptBlobError("cannot open '" + path + "'");
    auto size = f.tellg();
    f.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<size_t>(size));
    f.read(reinterpret_cast<char*>(bytes.data()), size);
    return parse(bytes);
}

} // namespace epcmig
