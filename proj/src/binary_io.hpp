#pragma once

// Little-endian binary I/O helpers shared by the DPLB and DPLF file formats.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>

#include "dpl/errors.hpp"

namespace dpl::io {

template <typename T>
void write_le(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i)
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if (!in) fail(ErrorCode::TruncatedFile, "unexpected end of file");
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i)
      std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

inline void write_magic(std::ostream& out, const char magic[4]) {
  out.write(magic, 4);
}

inline void expect_magic(std::istream& in, const char magic[4],
                         const char* what) {
  char buf[4];
  in.read(buf, 4);
  if (!in) fail(ErrorCode::TruncatedFile, "file shorter than magic");
  if (std::memcmp(buf, magic, 4) != 0)
    fail(ErrorCode::BadMagic, std::string("not a ") + what + " file");
}

}  // namespace dpl::io
