#include "pendlab/table_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace pendlab {
namespace {

constexpr std::array<char, 8> kMagic{'P', 'E', 'N', 'D', 'L', 'A', 'B', 'T'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes{};
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw CacheFormatError("table cache: truncated file");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return static_cast<T>(value);
}

}  // namespace

void write_table(std::ostream& out, const CoefficientTable& table) {
  const Series& s = table.values;
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kTableFormatVersion);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(table.kind));
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(s.backend().kind()));
  put_le<std::uint16_t>(out, 0);
  put_le<std::uint64_t>(out, s.backend().modulus());
  put_le<std::uint64_t>(out, s.order());

  switch (s.backend().kind()) {
    case BackendKind::parity:
      for (std::uint64_t w : s.bits().words()) put_le(out, w);
      break;
    case BackendKind::residue:
      for (std::uint64_t v : s.residues()) put_le(out, v);
      break;
    case BackendKind::exact:
      for (const BigInt& v : s.exact_coefficients()) {
        const int sign = sgn(v);
        put_le<std::uint8_t>(out, sign == 0 ? 0 : (sign > 0 ? 1 : 2));
        std::size_t count = 0;
        std::vector<std::uint64_t> limbs((mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64);
        if (sign != 0) mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), -1, 0, v.get_mpz_t());
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(count));
        for (std::size_t i = 0; i < count; ++i) put_le(out, limbs[i]);
      }
      break;
  }
  if (!out) throw CacheFormatError("table cache: write failed");
}

CoefficientTable read_table(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw CacheFormatError("table cache: bad magic");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kTableFormatVersion) {
    throw CacheFormatError("table cache: unsupported version " + std::to_string(version));
  }
  const auto kind_byte = get_le<std::uint8_t>(in);
  const auto backend_byte = get_le<std::uint8_t>(in);
  get_le<std::uint16_t>(in);
  const auto modulus = get_le<std::uint64_t>(in);
  const auto order = get_le<std::uint64_t>(in);
  if (kind_byte > static_cast<std::uint8_t>(TableKind::p)) throw CacheFormatError("table cache: bad kind");
  if (order == 0) throw CacheFormatError("table cache: empty table");
  const auto kind = static_cast<TableKind>(kind_byte);

  switch (static_cast<BackendKind>(backend_byte)) {
    case BackendKind::parity: {
      if (modulus != 2) throw CacheFormatError("table cache: parity table with modulus != 2");
      BitVector bits(order);
      for (std::uint64_t& w : bits.words()) w = get_le<std::uint64_t>(in);
      const BitVector before = bits;
      bits.clear_tail();
      if (!(bits == before)) throw CacheFormatError("table cache: stray bits past the table order");
      return {kind, Series(std::move(bits))};
    }
    case BackendKind::residue: {
      std::vector<std::uint64_t> values(order);
      for (std::uint64_t& v : values) v = get_le<std::uint64_t>(in);
      try {
        return {kind, Series(Backend::residue(modulus), std::move(values))};
      } catch (const std::invalid_argument& e) {
        throw CacheFormatError(std::string("table cache: ") + e.what());
      }
    }
    case BackendKind::exact: {
      std::vector<BigInt> values(order);
      std::vector<std::uint64_t> limbs;
      for (BigInt& v : values) {
        const auto sign = get_le<std::uint8_t>(in);
        const auto count = get_le<std::uint32_t>(in);
        if (sign > 2 || (sign == 0) != (count == 0)) throw CacheFormatError("table cache: bad integer header");
        limbs.resize(count);
        for (std::uint64_t& limb : limbs) limb = get_le<std::uint64_t>(in);
        mpz_import(v.get_mpz_t(), count, -1, sizeof(std::uint64_t), -1, 0, limbs.data());
        if (sign == 2) v = -v;
      }
      return {kind, Series(std::move(values))};
    }
  }
  throw CacheFormatError("table cache: unknown backend");
}

void save_table(const std::filesystem::path& path, const CoefficientTable& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheFormatError("table cache: cannot open " + tmp.string());
    write_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

CoefficientTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheFormatError("table cache: cannot open " + path.string());
  return read_table(in);
}

TableCache::TableCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::filesystem::path TableCache::path_for(TableKind kind, std::size_t order, Backend backend) const {
  std::string backend_tag = backend.kind() == BackendKind::residue ? "residue" + std::to_string(backend.modulus())
                                                                   : backend.name();
  return directory_ / (std::string(to_string(kind)) + "-" + backend_tag + "-" + std::to_string(order) + ".tbl");
}

CoefficientTable TableCache::get(TableKind kind, std::size_t order, Backend backend) const {
  const std::filesystem::path path = path_for(kind, order, backend);
  if (std::filesystem::exists(path)) {
    CoefficientTable cached = load_table(path);
    if (cached.kind == kind && cached.values.order() == order && cached.values.backend() == backend) return cached;
  }
  CoefficientTable built = make_table(kind, order, backend);
  save_table(path, built);
  return built;
}

}  // namespace pendlab
