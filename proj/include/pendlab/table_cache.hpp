#pragma once

// Binary on-disk format for coefficient tables.
//
//   magic "PENDLABT" | u32 version | u8 kind | u8 backend | u16 reserved
//   | u64 modulus | u64 order | payload
//
// All integers little-endian. Parity payloads are bit-packed u64 words,
// residue payloads one u64 per coefficient, exact payloads per coefficient
// a sign byte (0 zero, 1 positive, 2 negative), a u32 limb count and that
// many u64 magnitude limbs, least significant first.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "pendlab/partitions.hpp"

namespace pendlab {

inline constexpr std::uint32_t kTableFormatVersion = 1;

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_table(std::ostream& out, const CoefficientTable& table);
CoefficientTable read_table(std::istream& in);

void save_table(const std::filesystem::path& path, const CoefficientTable& table);
CoefficientTable load_table(const std::filesystem::path& path);

// Directory of cached tables keyed by kind, backend and order.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path directory);

  std::filesystem::path path_for(TableKind kind, std::size_t order, Backend backend) const;
  // Loads the table if a matching file exists, otherwise builds and stores it.
  CoefficientTable get(TableKind kind, std::size_t order, Backend backend) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace pendlab
