#include "pendlab/eta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace pendlab {

std::vector<SparseTerm> pentagonal_terms(std::uint64_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("eta: dilation must be positive");
  if (order == 0) throw std::invalid_argument("eta: empty truncation (order 0)");
  std::vector<SparseTerm> terms{{0, 1}};
  for (unsigned __int128 m = 1;; ++m) {
    const unsigned __int128 lower = k * (m * (3 * m - 1) / 2);
    if (lower >= order) break;
    const std::int64_t sign = (m % 2 == 1) ? -1 : 1;
    terms.push_back({static_cast<std::size_t>(lower), sign});
    const unsigned __int128 upper = k * (m * (3 * m + 1) / 2);
    if (upper < order) terms.push_back({static_cast<std::size_t>(upper), sign});
  }
  return terms;
}

Series eta_series(std::uint64_t k, std::size_t order, Backend backend) {
  const std::vector<SparseTerm> terms = pentagonal_terms(k, order);
  std::vector<std::int64_t> dense(order, 0);
  for (const SparseTerm& t : terms) dense[t.exponent] = t.coefficient;
  return Series::from_integers(dense, backend);
}

EtaQuotient::EtaQuotient(std::initializer_list<std::pair<std::uint64_t, std::int64_t>> factors) {
  for (const auto& [k, e] : factors) add(k, e);
}

EtaQuotient::EtaQuotient(const std::vector<EtaFactor>& factors) {
  for (const EtaFactor& f : factors) add(f.dilation, f.exponent);
}

void EtaQuotient::add(std::uint64_t dilation, std::int64_t exponent) {
  if (dilation == 0) throw std::invalid_argument("eta quotient: dilation must be positive");
  auto it = std::lower_bound(factors_.begin(), factors_.end(), dilation,
                             [](const EtaFactor& f, std::uint64_t k) { return f.dilation < k; });
  if (it != factors_.end() && it->dilation == dilation) {
    it->exponent += exponent;
    if (it->exponent == 0) factors_.erase(it);
  } else if (exponent != 0) {
    factors_.insert(it, EtaFactor{dilation, exponent});
  }
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  // Strip whitespace but remember where each kept character came from.
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact.push_back(text[i]);
    origin.push_back(i);
  }
  auto where = [&](std::size_t pos) { return pos < origin.size() ? origin[pos] : text.size(); };

  EtaQuotient result;
  std::size_t pos = 0;
  if (compact.empty()) throw ParseError("eta quotient: expected `k:e`", 0);
  for (;;) {
    const char* first = compact.data() + pos;
    const char* last = compact.data() + compact.size();
    if (pos >= compact.size() || !std::isdigit(static_cast<unsigned char>(*first))) {
      throw ParseError("eta quotient: expected dilation", where(pos));
    }
    std::uint64_t k = 0;
    auto [kp, kerr] = std::from_chars(first, last, k);
    if (kerr != std::errc{}) throw ParseError("eta quotient: dilation out of range", where(pos));
    if (k == 0) throw ParseError("eta quotient: dilation must be positive", where(pos));
    pos = static_cast<std::size_t>(kp - compact.data());
    if (pos >= compact.size() || compact[pos] != ':') throw ParseError("eta quotient: expected ':'", where(pos));
    ++pos;

    const std::size_t exp_start = pos;
    bool negative = false;
    if (pos < compact.size() && (compact[pos] == '-' || compact[pos] == '+')) {
      negative = compact[pos] == '-';
      ++pos;
    }
    if (pos >= compact.size() || !std::isdigit(static_cast<unsigned char>(compact[pos]))) {
      throw ParseError("eta quotient: expected exponent", where(pos));
    }
    std::int64_t e = 0;
    auto [ep, eerr] = std::from_chars(compact.data() + pos, last, e);
    if (eerr != std::errc{}) throw ParseError("eta quotient: exponent out of range", where(exp_start));
    pos = static_cast<std::size_t>(ep - compact.data());
    result.add(k, negative ? -e : e);

    if (pos == compact.size()) break;
    if (compact[pos] != ',') throw ParseError("eta quotient: expected ','", where(pos));
    ++pos;
  }
  return result;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (const EtaFactor& f : factors_) {
    if (!out.empty()) out += ',';
    out += std::to_string(f.dilation) + ':' + std::to_string(f.exponent);
  }
  return out;
}

Series expand_quotient(const EtaQuotient& quotient, std::size_t order, Backend backend) {
  Series result = Series::one(backend, order);
  for (const EtaFactor& f : quotient.factors()) {
    const std::vector<SparseTerm> terms = pentagonal_terms(f.dilation, order);
    const std::int64_t reps = std::abs(f.exponent);
    for (std::int64_t i = 0; i < reps; ++i) {
      result = f.exponent > 0 ? mul_sparse(result, terms) : divide_sparse(result, terms);
    }
  }
  return result;
}

}  // namespace pendlab
