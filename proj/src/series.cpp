#include "pendlab/series.hpp"

#include <algorithm>
#include <utility>

#include "pendlab/kernels.hpp"

namespace pendlab {
namespace {

// Division recurrences split their sources at these distances: terms at
// least this far back only read finished coefficients and run as span
// kernels; closer terms are resolved one coefficient at a time.
constexpr std::size_t kParityChunkBits = 4096;
constexpr std::size_t kResidueChunk = 512;

void require_order(std::size_t order) {
  if (order == 0) throw std::invalid_argument("series: empty truncation (order 0)");
}

std::uint64_t residue_of(std::int64_t value, std::uint64_t m) {
  if (value >= 0) return static_cast<std::uint64_t>(value) % m;
  const std::uint64_t r = (std::uint64_t{0} - static_cast<std::uint64_t>(value)) % m;
  return r == 0 ? 0 : m - r;
}

std::uint64_t residue_of(const BigInt& value, std::uint64_t m) {
  return mpz_fdiv_ui(value.get_mpz_t(), m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  BigInt inv;
  const BigInt value(static_cast<unsigned long>(a));
  const BigInt modulus(static_cast<unsigned long>(m));
  if (mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw NonUnitConstant("series: constant term " + std::to_string(a) + " is not invertible mod " +
                          std::to_string(m));
  }
  return residue_of(inv, m);
}

void require_same_backend(const Series& a, const Series& b, const char* op) {
  if (!(a.backend() == b.backend())) {
    throw BackendMismatch(std::string(op) + ": backend mismatch (" + a.backend().name() + " vs " +
                          b.backend().name() + ")");
  }
}

// dst bit i ^= src bit (i - shift) for i in [max(from, shift), to).
// `from` is a multiple of 64.
void xor_shifted_range(std::span<std::uint64_t> dst, const std::uint64_t* src, std::size_t shift,
                       std::size_t from, std::size_t to) {
  const std::size_t start = std::max(from, shift);
  if (start >= to) return;
  std::size_t w = start / 64;
  if (start % 64 != 0) {
    const std::size_t word_bit = 64 * w;
    std::uint64_t v;
    if (word_bit >= shift) {
      const std::size_t off = word_bit - shift;
      const unsigned b = off % 64;
      v = b == 0 ? src[off / 64] : (src[off / 64] >> b) | (src[off / 64 + 1] << (64 - b));
    } else {
      v = src[0] << (shift - word_bit);
    }
    v &= ~std::uint64_t{0} << (start % 64);
    dst[w] ^= v;
    ++w;
  }
  const std::size_t end_word = (to + 63) / 64;
  if (w < end_word) kernels::active().xor_extract(dst.subspan(w, end_word - w), src, 64 * w - shift);
}

// dst[i] -= c * src[i] over residues.
void residue_sub_scaled(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                        std::uint64_t c, std::uint64_t m) {
  const kernels::KernelSet& k = kernels::active();
  if (c == 1) {
    k.mod_sub(dst, src, m);
  } else if (c == m - 1) {
    k.mod_add(dst, src, m);
  } else if (c != 0) {
    k.mod_axpy(dst, src, m - c, m);
  }
}

void residue_add_scaled(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                        std::uint64_t c, std::uint64_t m) {
  residue_sub_scaled(dst, src, c == 0 ? 0 : m - c, m);
}

Series mul_sparse_exact(std::span<const BigInt> a, std::span<const SparseTerm> terms) {
  const std::size_t n = a.size();
  std::vector<BigInt> r(n);
  for (const SparseTerm& t : terms) {
    if (t.exponent >= n) break;
    for (std::size_t i = 0; i + t.exponent < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      BigInt& dst = r[i + t.exponent];
      if (t.coefficient == 1) {
        dst += a[i];
      } else if (t.coefficient == -1) {
        dst -= a[i];
      } else if (t.coefficient > 0) {
        mpz_addmul_ui(dst.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(t.coefficient));
      } else {
        mpz_submul_ui(dst.get_mpz_t(), a[i].get_mpz_t(),
                      static_cast<unsigned long>(-(t.coefficient + 1)) + 1UL);
      }
    }
  }
  return Series(std::move(r));
}

Series mul_sparse_residue(const Series& a, std::span<const SparseTerm> terms) {
  const std::uint64_t m = a.backend().modulus();
  const std::span<const std::uint64_t> src = a.residues();
  const std::size_t n = src.size();
  std::vector<std::uint64_t> r(n, 0);
  for (const SparseTerm& t : terms) {
    if (t.exponent >= n) break;
    const std::size_t len = n - t.exponent;
    residue_add_scaled(std::span(r).subspan(t.exponent, len), src.first(len),
                       residue_of(t.coefficient, m), m);
  }
  return Series(a.backend(), std::move(r));
}

Series mul_sparse_parity(const BitVector& a, std::span<const SparseTerm> terms) {
  BitVector r(a.size());
  for (const SparseTerm& t : terms) {
    if (t.exponent >= a.size()) break;
    if (t.coefficient % 2 == 0) continue;
    xor_shifted_range(r.words(), a.words().data(), t.exponent, 0, a.size());
  }
  r.clear_tail();
  return Series(std::move(r));
}

// Splits `terms` (constant term excluded) into the unit at exponent 0 and the rest.
std::span<const SparseTerm> tail_terms(std::span<const SparseTerm> terms, const char* op) {
  if (terms.empty() || terms.front().exponent != 0) {
    throw NonUnitConstant(std::string(op) + ": divisor has zero constant term");
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].exponent <= terms[i - 1].exponent) {
      throw std::invalid_argument(std::string(op) + ": sparse terms must be strictly increasing");
    }
  }
  return terms.subspan(1);
}

Series divide_sparse_exact(std::span<const BigInt> a, std::int64_t c0,
                           std::span<const SparseTerm> rest) {
  if (c0 != 1 && c0 != -1) {
    throw NonUnitConstant("divide: constant term " + std::to_string(c0) + " is not a unit over Z");
  }
  std::vector<BigInt> r(a.begin(), a.end());
  for (std::size_t n = 0; n < r.size(); ++n) {
    BigInt& acc = r[n];
    for (const SparseTerm& t : rest) {
      if (t.exponent > n) break;
      const BigInt& prev = r[n - t.exponent];
      if (t.coefficient == 1) {
        acc -= prev;
      } else if (t.coefficient == -1) {
        acc += prev;
      } else if (t.coefficient > 0) {
        mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(t.coefficient));
      } else {
        mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(),
                      static_cast<unsigned long>(-(t.coefficient + 1)) + 1UL);
      }
    }
    if (c0 == -1) acc = -acc;
  }
  return Series(std::move(r));
}

Series divide_sparse_residue(const Series& a, std::int64_t c0, std::span<const SparseTerm> rest) {
  const std::uint64_t m = a.backend().modulus();
  const std::uint64_t inv0 = inverse_mod(residue_of(c0, m), m);
  std::vector<std::uint64_t> r(a.residues().begin(), a.residues().end());
  const std::size_t n = r.size();

  std::vector<std::pair<std::size_t, std::uint64_t>> near;
  std::vector<std::pair<std::size_t, std::uint64_t>> far;
  for (const SparseTerm& t : rest) {
    if (t.exponent >= n) break;
    const std::uint64_t c = residue_of(t.coefficient, m);
    if (c == 0) continue;
    (t.exponent < kResidueChunk ? near : far).emplace_back(t.exponent, c);
  }

  for (std::size_t n0 = 0; n0 < n; n0 += kResidueChunk) {
    const std::size_t n1 = std::min(n0 + kResidueChunk, n);
    for (const auto& [e, c] : far) {
      if (e >= n1) break;
      const std::size_t start = std::max(n0, e);
      residue_sub_scaled(std::span(r).subspan(start, n1 - start),
                         std::span<const std::uint64_t>(r).subspan(start - e, n1 - start), c, m);
    }
    for (std::size_t i = n0; i < n1; ++i) {
      std::uint64_t acc = r[i];
      for (const auto& [e, c] : near) {
        if (e > i) break;
        const std::uint64_t sub = c == 1 ? r[i - e] : mul_mod(c, r[i - e], m);
        acc = acc >= sub ? acc - sub : acc + (m - sub);
      }
      r[i] = inv0 == 1 ? acc : mul_mod(acc, inv0, m);
    }
  }
  return Series(a.backend(), std::move(r));
}

Series divide_sparse_parity(const BitVector& a, std::int64_t c0, std::span<const SparseTerm> rest) {
  if (c0 % 2 == 0) throw NonUnitConstant("divide: constant term is even in the parity backend");
  BitVector r = a;
  const std::size_t n = r.size();
  std::span<std::uint64_t> words = r.words();

  std::vector<std::size_t> tiny;  // < 64: resolved bit by bit
  std::vector<std::size_t> near;  // [64, chunk): resolved word by word
  std::vector<std::size_t> far;   // >= chunk: span kernel over the whole chunk
  for (const SparseTerm& t : rest) {
    if (t.exponent >= n) break;
    if (t.coefficient % 2 == 0) continue;
    if (t.exponent < 64) {
      tiny.push_back(t.exponent);
    } else if (t.exponent < kParityChunkBits) {
      near.push_back(t.exponent);
    } else {
      far.push_back(t.exponent);
    }
  }

  for (std::size_t n0 = 0; n0 < n; n0 += kParityChunkBits) {
    const std::size_t n1 = std::min(n0 + kParityChunkBits, n);
    for (std::size_t e : far) {
      if (e >= n1) break;
      xor_shifted_range(words, words.data(), e, n0, n1);
    }
    for (std::size_t w = n0 / 64; 64 * w < n1; ++w) {
      const std::size_t word_end = std::min(64 * w + 64, n1);
      for (std::size_t e : near) {
        if (e >= word_end) break;
        xor_shifted_range(words, words.data(), e, 64 * w, word_end);
      }
      std::uint64_t word = words[w];
      const std::uint64_t prev = w > 0 ? words[w - 1] : 0;
      for (unsigned i = 0; 64 * w + i < word_end; ++i) {
        const std::size_t pos = 64 * w + i;
        std::uint64_t bit = (word >> i) & 1U;
        for (std::size_t e : tiny) {
          if (e > pos) break;
          bit ^= e <= i ? (word >> (i - e)) & 1U : (prev >> (64 + i - e)) & 1U;
        }
        word = (word & ~(std::uint64_t{1} << i)) | (bit << i);
      }
      words[w] = word;
    }
  }
  r.clear_tail();
  return Series(std::move(r));
}

std::vector<SparseTerm> modular_terms(const Series& a) {
  std::vector<SparseTerm> terms;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const std::uint64_t v = a.residue(i);
    if (v != 0) terms.push_back({i, static_cast<std::int64_t>(v)});
  }
  return terms;
}

}  // namespace

Backend Backend::residue(std::uint64_t modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw std::invalid_argument("backend: residue modulus must lie in [2, 2^62], got " +
                                std::to_string(modulus));
  }
  return Backend(BackendKind::residue, modulus);
}

std::string Backend::name() const {
  switch (kind_) {
    case BackendKind::exact:
      return "exact";
    case BackendKind::parity:
      return "parity";
    case BackendKind::residue:
      return "residue(" + std::to_string(modulus_) + ")";
  }
  return "unknown";
}

Series::Series(std::vector<BigInt> coefficients)
    : backend_(Backend::exact()), order_(coefficients.size()), data_(std::move(coefficients)) {
  require_order(order_);
}

Series::Series(Backend residue_backend, std::vector<std::uint64_t> residues)
    : backend_(residue_backend), order_(residues.size()), data_(std::move(residues)) {
  require_order(order_);
  if (backend_.kind() != BackendKind::residue) {
    throw BackendMismatch("series: residue storage requires a residue backend");
  }
  const auto& values = std::get<std::vector<std::uint64_t>>(data_);
  if (std::any_of(values.begin(), values.end(), [&](std::uint64_t v) { return v >= backend_.modulus(); })) {
    throw std::invalid_argument("series: residue out of range for " + backend_.name());
  }
}

Series::Series(BitVector bits) : backend_(Backend::parity()), order_(bits.size()), data_(std::move(bits)) {
  require_order(order_);
}

Series Series::zero(Backend backend, std::size_t order) {
  require_order(order);
  switch (backend.kind()) {
    case BackendKind::exact:
      return Series(std::vector<BigInt>(order));
    case BackendKind::parity:
      return Series(BitVector(order));
    case BackendKind::residue:
      return Series(backend, std::vector<std::uint64_t>(order, 0));
  }
  throw std::logic_error("unreachable backend");
}

Series Series::one(Backend backend, std::size_t order) {
  require_order(order);
  std::vector<std::int64_t> values(order, 0);
  values[0] = 1;
  return from_integers(values, backend);
}

Series Series::from_integers(std::span<const std::int64_t> values, Backend backend) {
  require_order(values.size());
  switch (backend.kind()) {
    case BackendKind::exact: {
      std::vector<BigInt> coeffs;
      coeffs.reserve(values.size());
      for (std::int64_t v : values) coeffs.emplace_back(static_cast<long>(v));
      return Series(std::move(coeffs));
    }
    case BackendKind::parity: {
      BitVector bits(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) bits.set(i, values[i] % 2 != 0);
      return Series(std::move(bits));
    }
    case BackendKind::residue: {
      std::vector<std::uint64_t> res(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) res[i] = residue_of(values[i], backend.modulus());
      return Series(backend, std::move(res));
    }
  }
  throw std::logic_error("unreachable backend");
}

BigInt Series::coefficient(std::size_t n) const {
  if (n >= order_) throw std::out_of_range("series: coefficient index beyond truncation");
  if (backend_.is_exact()) return std::get<std::vector<BigInt>>(data_)[n];
  return BigInt(static_cast<unsigned long>(residue(n)));
}

std::uint64_t Series::residue(std::size_t n) const {
  if (n >= order_) throw std::out_of_range("series: coefficient index beyond truncation");
  switch (backend_.kind()) {
    case BackendKind::parity:
      return std::get<BitVector>(data_).test(n) ? 1 : 0;
    case BackendKind::residue:
      return std::get<std::vector<std::uint64_t>>(data_)[n];
    case BackendKind::exact:
      break;
  }
  throw BackendMismatch("series: residue() needs a modular backend");
}

std::span<const BigInt> Series::exact_coefficients() const {
  if (!backend_.is_exact()) throw BackendMismatch("series: not an exact series");
  return std::get<std::vector<BigInt>>(data_);
}

std::span<const std::uint64_t> Series::residues() const {
  if (backend_.kind() != BackendKind::residue) throw BackendMismatch("series: not a residue series");
  return std::get<std::vector<std::uint64_t>>(data_);
}

const BitVector& Series::bits() const {
  if (backend_.kind() != BackendKind::parity) throw BackendMismatch("series: not a parity series");
  return std::get<BitVector>(data_);
}

std::size_t Series::nonzero_count() const {
  switch (backend_.kind()) {
    case BackendKind::exact: {
      const auto& c = std::get<std::vector<BigInt>>(data_);
      return static_cast<std::size_t>(
          std::count_if(c.begin(), c.end(), [](const BigInt& v) { return sgn(v) != 0; }));
    }
    case BackendKind::parity: {
      std::size_t count = 0;
      for (std::uint64_t w : std::get<BitVector>(data_).words()) count += static_cast<std::size_t>(__builtin_popcountll(w));
      return count;
    }
    case BackendKind::residue: {
      const auto& c = std::get<std::vector<std::uint64_t>>(data_);
      return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](std::uint64_t v) { return v != 0; }));
    }
  }
  return 0;
}

Series Series::truncated(std::size_t order) const {
  require_order(order);
  if (order > order_) throw std::invalid_argument("series: cannot extend truncation");
  switch (backend_.kind()) {
    case BackendKind::exact: {
      const auto& c = std::get<std::vector<BigInt>>(data_);
      return Series(std::vector<BigInt>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order)));
    }
    case BackendKind::parity: {
      const BitVector& src = std::get<BitVector>(data_);
      BitVector bits(order);
      std::copy_n(src.words().begin(), bits.words().size(), bits.words().begin());
      bits.clear_tail();
      return Series(std::move(bits));
    }
    case BackendKind::residue: {
      const auto& c = std::get<std::vector<std::uint64_t>>(data_);
      return Series(backend_, std::vector<std::uint64_t>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order)));
    }
  }
  throw std::logic_error("unreachable backend");
}

Series mul_sparse(const Series& a, std::span<const SparseTerm> terms) {
  switch (a.backend().kind()) {
    case BackendKind::exact:
      return mul_sparse_exact(a.exact_coefficients(), terms);
    case BackendKind::parity:
      return mul_sparse_parity(a.bits(), terms);
    case BackendKind::residue:
      return mul_sparse_residue(a, terms);
  }
  throw std::logic_error("unreachable backend");
}

Series divide_sparse(const Series& a, std::span<const SparseTerm> terms) {
  const std::span<const SparseTerm> rest = tail_terms(terms, "divide");
  const std::int64_t c0 = terms.front().coefficient;
  switch (a.backend().kind()) {
    case BackendKind::exact:
      return divide_sparse_exact(a.exact_coefficients(), c0, rest);
    case BackendKind::parity:
      return divide_sparse_parity(a.bits(), c0, rest);
    case BackendKind::residue:
      return divide_sparse_residue(a, c0, rest);
  }
  throw std::logic_error("unreachable backend");
}

Series mul(const Series& a, const Series& b) {
  require_same_backend(a, b, "mul");
  const std::size_t order = std::min(a.order(), b.order());
  const Series& sparse = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const Series dense = (&sparse == &a ? b : a).truncated(order);

  if (a.backend().is_exact()) {
    const std::span<const BigInt> s = sparse.exact_coefficients();
    const std::span<const BigInt> d = dense.exact_coefficients();
    std::vector<BigInt> r(order);
    for (std::size_t i = 0; i < order; ++i) {
      if (sgn(s[i]) == 0) continue;
      for (std::size_t j = 0; i + j < order; ++j) {
        if (sgn(d[j]) != 0) mpz_addmul(r[i + j].get_mpz_t(), s[i].get_mpz_t(), d[j].get_mpz_t());
      }
    }
    return Series(std::move(r));
  }
  const std::vector<SparseTerm> terms = modular_terms(sparse.truncated(order));
  return mul_sparse(dense, terms);
}

Series divide(const Series& numerator, const Series& denominator) {
  require_same_backend(numerator, denominator, "divide");
  const std::size_t order = std::min(numerator.order(), denominator.order());
  const Series num = numerator.truncated(order);
  const Series den = denominator.truncated(order);

  if (!num.backend().is_exact()) return divide_sparse(num, modular_terms(den));

  const std::span<const BigInt> d = den.exact_coefficients();
  if (d[0] != 1 && d[0] != -1) {
    throw NonUnitConstant("divide: constant term " + d[0].get_str() + " is not a unit over Z");
  }
  const bool negate = d[0] < 0;
  std::vector<std::pair<std::size_t, const BigInt*>> rest;
  for (std::size_t j = 1; j < order; ++j) {
    if (sgn(d[j]) != 0) rest.emplace_back(j, &d[j]);
  }
  std::vector<BigInt> r(num.exact_coefficients().begin(), num.exact_coefficients().end());
  for (std::size_t n = 0; n < order; ++n) {
    for (const auto& [e, c] : rest) {
      if (e > n) break;
      mpz_submul(r[n].get_mpz_t(), c->get_mpz_t(), r[n - e].get_mpz_t());
    }
    if (negate) r[n] = -r[n];
  }
  return Series(std::move(r));
}

Series inverse(const Series& a) { return divide(Series::one(a.backend(), a.order()), a); }

Series reduce(const Series& a, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("reduce: modulus must be at least 2");
  return convert(a, Backend::residue(modulus));
}

Series convert(const Series& a, Backend target) {
  const Backend& source = a.backend();
  if (source == target) return a;
  const std::size_t n = a.order();

  if (source.is_exact()) {
    const std::span<const BigInt> c = a.exact_coefficients();
    if (target.kind() == BackendKind::parity) {
      BitVector bits(n);
      for (std::size_t i = 0; i < n; ++i) bits.set(i, mpz_odd_p(c[i].get_mpz_t()) != 0);
      return Series(std::move(bits));
    }
    if (target.kind() == BackendKind::residue) {
      std::vector<std::uint64_t> res(n);
      for (std::size_t i = 0; i < n; ++i) res[i] = residue_of(c[i], target.modulus());
      return Series(target, std::move(res));
    }
  } else if (!target.is_exact() && source.modulus() % target.modulus() == 0) {
    if (target.kind() == BackendKind::parity) {
      BitVector bits(n);
      for (std::size_t i = 0; i < n; ++i) bits.set(i, a.residue(i) % 2 != 0);
      return Series(std::move(bits));
    }
    std::vector<std::uint64_t> res(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = a.residue(i) % target.modulus();
    return Series(target, std::move(res));
  }
  throw BackendMismatch("convert: cannot map " + source.name() + " onto " + target.name());
}

}  // namespace pendlab
