#include "csym/exterior.hpp"

#include <bit>

namespace csym {

namespace {

// -1 / 0 / +1 for "a before b" in the lexicographic order of ascending
// index lists of equal length.
int lex_compare(std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  const std::uint32_t diff = a ^ b;
  const std::uint32_t low = diff & (~diff + 1);
  return (a & low) ? -1 : 1;
}

// Number of pairs (x in a, y in b) with x > y.
int inversions(std::uint32_t a, std::uint32_t b) {
  int count = 0;
  while (b) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    const std::uint32_t above = y >= 31 ? 0u : ~((2u << y) - 1u);
    count += std::popcount(a & above);
  }
  return count;
}

void enumerate_subsets(int m, int size, std::uint32_t mask, int next, std::vector<std::uint32_t>& out) {
  if (size == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = next; i <= m - size; ++i) enumerate_subsets(m, size - 1, mask | (1u << i), i + 1, out);
}

std::vector<std::uint32_t> subsets(int m, int size) {
  std::vector<std::uint32_t> out;
  enumerate_subsets(m, size, 0, 0, out);
  return out;
}

std::vector<int> indices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Monomial Monomial::from_indices(const std::vector<int>& holo, const std::vector<int>& anti) {
  auto build = [](const std::vector<int>& idx) {
    std::uint32_t mask = 0;
    int last = 0;
    for (int i : idx) {
      if (i <= last || i > kMaxDim)
        throw Error(Errc::IndexOutOfRange, "indices must be ascending within 1.." + std::to_string(kMaxDim));
      mask |= 1u << (i - 1);
      last = i;
    }
    return mask;
  };
  return Monomial(build(holo), build(anti));
}

int Monomial::p() const { return std::popcount(holo_); }
int Monomial::q() const { return std::popcount(anti_); }
std::vector<int> Monomial::holo_indices() const { return indices(holo_); }
std::vector<int> Monomial::anti_indices() const { return indices(anti_); }

bool Monomial::fits(int m) const {
  const std::uint32_t allowed = m >= 32 ? ~0u : ((1u << m) - 1u);
  return (holo_ & ~allowed) == 0 && (anti_ & ~allowed) == 0;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = b.p() <=> a.p(); c != 0) return c;
  if (int c = lex_compare(a.holo_, b.holo_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = lex_compare(a.anti_, b.anti_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) {
  if ((a.holo_mask() & b.holo_mask()) || (a.anti_mask() & b.anti_mask())) return {0, Monomial()};
  // a.holo a.anti b.holo b.anti -> (a.holo + b.holo) (a.anti + b.anti)
  int parity = a.q() * b.p();
  parity += inversions(a.holo_mask(), b.holo_mask());
  parity += inversions(a.anti_mask(), b.anti_mask());
  return {parity % 2 == 0 ? 1 : -1, Monomial(a.holo_mask() | b.holo_mask(), a.anti_mask() | b.anti_mask())};
}

std::pair<int, Monomial> conjugate(const Monomial& a) {
  return {(a.p() * a.q()) % 2 == 0 ? 1 : -1, Monomial(a.anti_mask(), a.holo_mask())};
}

std::vector<Monomial> enumerate_basis(int m, int p, int q) {
  if (m < 0 || m > kMaxDim || p < 0 || q < 0 || p > m || q > m)
    throw Error(Errc::OutOfRange, "bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                                      ") out of range for dimension " + std::to_string(m));
  std::vector<Monomial> out;
  const auto hs = subsets(m, p);
  const auto as = subsets(m, q);
  out.reserve(hs.size() * as.size());
  for (auto h : hs)
    for (auto a : as) out.emplace_back(h, a);
  return out;
}

std::vector<Monomial> enumerate_degree(int m, int k) {
  if (k < 0 || k > 2 * m) throw Error(Errc::OutOfRange, "degree out of range");
  std::vector<Monomial> out;
  for (int p = std::min(k, m); p >= 0 && k - p <= m; --p) {
    const auto block = enumerate_basis(m, p, k - p);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

CForm evaluate(const PForm& f, const Binding& binding) {
  CForm out(f.dim());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, c.eval(binding));
  return out;
}

PForm promote(const CForm& f) {
  PForm out(f.dim());
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, ParamPoly(c));
  return out;
}

}  // namespace csym
