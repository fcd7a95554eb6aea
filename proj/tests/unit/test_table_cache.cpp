#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pendlab/table_cache.hpp"

namespace pendlab {
namespace {

namespace fs = std::filesystem;

CoefficientTable round_trip(const CoefficientTable& table) {
  std::stringstream buffer;
  write_table(buffer, table);
  return read_table(buffer);
}

TEST(TableCache, StreamRoundTripAllBackends) {
  for (Backend b : {Backend::exact(), Backend::parity(), Backend::residue(1000003)}) {
    const CoefficientTable t = make_table(TableKind::pend, 1000, b);
    const CoefficientTable back = round_trip(t);
    EXPECT_EQ(back.kind, t.kind);
    EXPECT_EQ(back.values, t.values) << b.name();
  }
  const std::vector<std::int64_t> signs{0, -5, 7, -1};
  const CoefficientTable negative{TableKind::a, Series::from_integers(signs)};
  EXPECT_EQ(round_trip(negative).values, negative.values);
}

TEST(TableCache, RejectsCorruptInput) {
  std::stringstream bad_magic("NOTATABLE.......................");
  EXPECT_THROW(read_table(bad_magic), CacheFormatError);

  std::stringstream buffer;
  write_table(buffer, make_table(TableKind::p, 100, Backend::exact()));
  const std::string bytes = buffer.str();
  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_table(truncated), CacheFormatError);
}

TEST(TableCache, DirectoryCacheStoresAndReloads) {
  const fs::path dir = fs::temp_directory_path() / "pendlab_cache_test";
  fs::remove_all(dir);
  const TableCache cache(dir);
  const fs::path path = cache.path_for(TableKind::pend, 500, Backend::parity());
  EXPECT_EQ(path.filename(), "pend-parity-500.tbl");
  EXPECT_FALSE(fs::exists(path));
  const CoefficientTable first = cache.get(TableKind::pend, 500, Backend::parity());
  EXPECT_TRUE(fs::exists(path));
  const CoefficientTable second = cache.get(TableKind::pend, 500, Backend::parity());
  EXPECT_EQ(first.values, second.values);
  EXPECT_EQ(load_table(path).values, first.values);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace pendlab
