#include "gnk/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace gnk::cache {

namespace {

constexpr char kMagic[8] = {'G', 'N', 'K', 'C', 'A', 'C', 'H', 'E'};

std::string cache_path(const std::string& dir) {
  return dir + "/gnk-cache-v" + std::to_string(kSchemaVersion) + ".bin";
}

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
      (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

void put_i32(std::ostream& out, std::int32_t v) { put_u32(out, static_cast<std::uint32_t>(v)); }

bool get_i32(std::istream& in, std::int32_t& v) {
  std::uint32_t u;
  if (!get_u32(in, u)) return false;
  v = static_cast<std::int32_t>(u);
  return true;
}

void put_int(std::ostream& out, const Int& value) {
  Int mag = value < 0 ? Int(-value) : value;
  std::vector<unsigned char> bytes;
  if (mag != 0) boost::multiprecision::export_bits(mag, std::back_inserter(bytes), 8);
  out.put(value < 0 ? '\1' : '\0');
  put_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

bool get_int(std::istream& in, Int& value) {
  const int sign = in.get();
  if (sign != 0 && sign != 1) return false;
  std::uint32_t len;
  if (!get_u32(in, len)) return false;
  std::vector<unsigned char> bytes(len);
  if (len && !in.read(reinterpret_cast<char*>(bytes.data()), len)) return false;
  Int mag = 0;
  if (len) boost::multiprecision::import_bits(mag, bytes.begin(), bytes.end(), 8);
  value = sign ? Int(-mag) : mag;
  return true;
}

void put_poly(std::ostream& out, const QPoly& p) {
  put_u32(out, static_cast<std::uint32_t>(p.coeffs().size()));
  for (const auto& c : p.coeffs()) put_int(out, c);
}

bool get_poly(std::istream& in, QPoly& p) {
  std::uint32_t len;
  if (!get_u32(in, len)) return false;
  std::vector<Int> c(len);
  for (auto& x : c)
    if (!get_int(in, x)) return false;
  p = QPoly(std::move(c));
  return true;
}

}  // namespace

bool save(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = cache_path(dir);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(kMagic, sizeof kMagic);
    put_u32(out, kSchemaVersion);
    const auto qb = detail::qbinom_snapshot();
    put_u32(out, static_cast<std::uint32_t>(qb.size()));
    for (const auto& [n, k, p] : qb) {
      put_i32(out, n);
      put_i32(out, k);
      put_poly(out, p);
    }
    const auto gs = detail::gs_snapshot();
    put_u32(out, static_cast<std::uint32_t>(gs.size()));
    for (const auto& [s, n, k, p] : gs) {
      put_i32(out, s);
      put_i32(out, n);
      put_i32(out, k);
      put_poly(out, p);
    }
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

bool load(const std::string& dir) {
  std::ifstream in(cache_path(dir), std::ios::binary);
  if (!in) return false;
  char magic[8];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kMagic)) return false;
  std::uint32_t version;
  if (!get_u32(in, version) || version != kSchemaVersion) return false;

  std::uint32_t count;
  if (!get_u32(in, count)) return false;
  std::vector<std::tuple<int, int, QPoly>> qb;
  qb.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::int32_t n, k;
    QPoly p;
    if (!get_i32(in, n) || !get_i32(in, k) || !get_poly(in, p)) return false;
    qb.emplace_back(n, k, std::move(p));
  }
  if (!get_u32(in, count)) return false;
  std::vector<std::tuple<int, int, int, QPoly>> gs;
  gs.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::int32_t s, n, k;
    QPoly p;
    if (!get_i32(in, s) || !get_i32(in, n) || !get_i32(in, k) || !get_poly(in, p)) return false;
    gs.emplace_back(s, n, k, std::move(p));
  }
  detail::qbinom_restore(qb);
  detail::gs_restore(gs);
  return true;
}

}  // namespace gnk::cache
