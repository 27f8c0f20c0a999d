#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace epcmig {

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Little-endian byte writer/reader for repair records and blob sections.
class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v) { raw(&v, 2); }
    void u32(std::uint32_t v) { raw(&v, 4); }
    void u64(std::uint64_t v) { raw(&v, 8); }
    void bytes(const std::uint8_t* p, size_t n) { buf_.insert(buf_.end(), p, p + n); }
    void str(const std::string& s)
    {
        u32(static_cast<std::uint32_t>(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
    }
    std::vector<std::uint8_t> take() { return std::move(buf_); }
    const std::vector<std::uint8_t>& data() const { return buf_; }

private:
    void raw(const void* p, size_t n)
    {
        const auto* b = static_cast<const std::uint8_t*>(p);
        buf_.insert(buf_.end(), b, b + n);
    }
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
    ByteReader(const std::uint8_t* p, size_t n) : p_(p), n_(n) {}
    explicit ByteReader(const std::vector<std::uint8_t>& v) : p_(v.data()), n_(v.size()) {}

    std::uint8_t u8() { return *need(1); }
    std::uint16_t u16() { return load<std::uint16_t>(); }
    std::uint32_t u32() { return load<std::uint32_t>(); }
    std::uint64_t u64() { return load<std::uint64_t>(); }
    std::string str()
    {
        std::uint32_t n = u32();
        const std::uint8_t* p = need(n);
        return std::string(reinterpret_cast<const char*>(p), n);
    }
    void skip(size_t n) { need(n); }
    size_t remaining() const { return n_ - off_; }
    bool done() const { return off_ == n_; }

private:
    template <typename T> T load()
    {
        T v;
        std::memcpy(&v, need(sizeof(T)), sizeof(T));
        return v;
    }
    const std::uint8_t* need(size_t n)
    {
        if (off_ + n > n_)
            throw DecodeError("truncated record (need " + std::to_string(n) + " bytes at offset " +
                              std::to_string(off_) + ")");
        const std::uint8_t* p = p_ + off_;
        off_ += n;
        return p;
    }
    const std::uint8_t* p_;
    size_t n_;
    size_t off_ = 0;
};

} // namespace epcmig
