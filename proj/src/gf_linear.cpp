#include "flagtrans/gf_linear.hpp"

#include <algorithm>

namespace flagtrans::gf {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse in GF(p)");
  // a^(p-2) by square-and-multiply
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t raw_det(const ProjMatrix::Entries& a, std::uint32_t p) {
  auto m = [&](int i) { return static_cast<std::int64_t>(a[i]); };
  std::int64_t d = m(0) * (m(4) * m(8) - m(5) * m(7)) - m(1) * (m(3) * m(8) - m(5) * m(6)) +
                   m(2) * (m(3) * m(7) - m(4) * m(6));
  return reduce(d, p);
}

void check_modulus(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldElem::FieldElem(std::int64_t value, std::uint32_t modulus) : value_(0), modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  value_ = reduce(value, modulus);
}

FieldElem FieldElem::operator+(FieldElem o) const {
  return {static_cast<std::int64_t>(value_) + o.value_, modulus_};
}
FieldElem FieldElem::operator-(FieldElem o) const {
  return {static_cast<std::int64_t>(value_) - o.value_, modulus_};
}
FieldElem FieldElem::operator*(FieldElem o) const {
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_), modulus_};
}
FieldElem FieldElem::operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }
FieldElem FieldElem::inverse() const { return {inv_mod(value_, modulus_), modulus_}; }

// ---------------------------------------------------------------- ProjMatrix

ProjMatrix::ProjMatrix(const Entries& e, std::uint32_t p, bool canonicalize) : entries_(e), modulus_(p) {
  if (!canonicalize) return;
  auto lead = std::find_if(entries_.begin(), entries_.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == entries_.end() || *lead == 1) return;
  std::uint64_t s = inv_mod(*lead, p);
  for (auto& x : entries_) x = static_cast<std::uint32_t>(x * s % p);
}

ProjMatrix ProjMatrix::from_entries(std::span<const std::int64_t, 9> entries, std::uint32_t p) {
  check_modulus(p);
  Entries e{};
  for (std::size_t i = 0; i < 9; ++i) e[i] = reduce(entries[i], p);
  if (raw_det(e, p) == 0) throw SingularMatrix("singular matrix");
  return ProjMatrix(e, p, true);
}

ProjMatrix ProjMatrix::from_entries(std::initializer_list<std::int64_t> entries, std::uint32_t p) {
  if (entries.size() != 9) throw std::invalid_argument("expected 9 entries");
  std::array<std::int64_t, 9> a{};
  std::copy(entries.begin(), entries.end(), a.begin());
  return from_entries(std::span<const std::int64_t, 9>(a), p);
}

ProjMatrix ProjMatrix::identity(std::uint32_t p) {
  check_modulus(p);
  return ProjMatrix(Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}, p, false);
}

bool ProjMatrix::is_identity() const { return entries_ == Entries{1, 0, 0, 0, 1, 0, 0, 0, 1}; }

std::uint64_t ProjMatrix::code() const {
  std::uint64_t c = 0;
  if (modulus_ < 128) {
    for (auto x : entries_) c = c * modulus_ + x;
    return c;
  }
  for (auto x : entries_) c = (c ^ x) * 0x100000001b3ULL;
  return c;
}

std::string ProjMatrix::serialize() const {
  std::string s;
  for (auto x : entries_) {
    if (modulus_ > 10) throw std::logic_error("digit serialization needs p <= 10");
    s.push_back(static_cast<char>('0' + x));
  }
  return s;
}

ProjMatrix ProjMatrix::parse(std::string_view digits, std::uint32_t p) {
  if (digits.size() != 9) throw std::invalid_argument("expected 9 base-p digits");
  std::array<std::int64_t, 9> a{};
  for (std::size_t i = 0; i < 9; ++i) {
    char c = digits[i];
    if (c < '0' || static_cast<std::uint32_t>(c - '0') >= p) throw std::invalid_argument("bad digit in matrix string");
    a[i] = c - '0';
  }
  auto m = from_entries(std::span<const std::int64_t, 9>(a), p);
  if (m.serialize() != digits) throw std::invalid_argument("matrix string is not in canonical form");
  return m;
}

ProjMatrix mat_mul(const ProjMatrix& a, const ProjMatrix& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("modulus mismatch");
  const std::uint32_t p = a.modulus_;
  ProjMatrix::Entries r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<std::uint64_t>(a.entries_[3 * i + k]) * b.entries_[3 * k + j];
      r[3 * i + j] = static_cast<std::uint32_t>(s % p);
    }
  return ProjMatrix(r, p, true);
}

ProjMatrix mat_inverse(const ProjMatrix& a) {
  const std::uint32_t p = a.modulus_;
  const auto& m = a.entries_;
  std::uint32_t d = raw_det(m, p);
  if (d == 0) throw SingularMatrix("singular matrix has no inverse");
  ProjMatrix::Entries adj{};
  // adj[j][i] = cofactor(i, j)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
      int c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
      std::int64_t minor = static_cast<std::int64_t>(m[3 * r0 + c0]) * m[3 * r1 + c1] -
                           static_cast<std::int64_t>(m[3 * r0 + c1]) * m[3 * r1 + c0];
      if ((i + j) % 2) minor = -minor;
      adj[3 * j + i] = reduce(minor, p);
    }
  // Scaling by det^{-1} is absorbed by canonicalization.
  return ProjMatrix(adj, p, true);
}

ProjMatrix transpose(const ProjMatrix& a) {
  ProjMatrix::Entries t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[3 * i + j] = a.entries_[3 * j + i];
  return ProjMatrix(t, a.modulus_, true);
}

FieldElem det(const ProjMatrix& a) { return {raw_det(a.entries(), a.modulus()), a.modulus()}; }

ProjMatrix polarity_gram(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("the conic polarity needs odd characteristic");
  return ProjMatrix::from_entries({0, 0, 1, 0, -2, 0, 1, 0, 0}, p);
}

ProjMatrix polarity_apply(const ProjMatrix& g) {
  const ProjMatrix m = polarity_gram(g.modulus());
  return mat_mul(mat_mul(m, transpose(mat_inverse(g))), mat_inverse(m));
}

// -------------------------------------------------------------- GroupElement

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return {mat_mul(a.mat, a.twist ? polarity_apply(b.mat) : b.mat), a.twist != b.twist};
}

GroupElement inverse(const GroupElement& a) {
  if (!a.twist) return {mat_inverse(a.mat), false};
  // (g,1)(h,1) = (g sigma(h), 0) = 1  =>  h = sigma(g^{-1})
  return {polarity_apply(mat_inverse(a.mat)), true};
}

std::string GroupElement::serialize() const { return mat.serialize() + (twist ? ":1" : ":0"); }

GroupElement GroupElement::parse(std::string_view text, std::uint32_t p) {
  if (text.size() != 11 || text[9] != ':' || (text[10] != '0' && text[10] != '1'))
    throw std::invalid_argument("expected 'ddddddddd:t'");
  return {ProjMatrix::parse(text.substr(0, 9), p), text[10] == '1'};
}

// ----------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::array<std::int64_t, 3> coords, std::uint32_t p) : modulus_(p) {
  check_modulus(p);
  for (int i = 0; i < 3; ++i) coords_[i] = reduce(coords[i], p);
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == coords_.end()) throw std::invalid_argument("zero vector is not a projective point");
  std::uint64_t s = inv_mod(*lead, p);
  for (auto& x : coords_) x = static_cast<std::uint32_t>(x * s % p);
}

std::vector<ProjPoint> all_points(std::uint32_t p) {
  std::vector<ProjPoint> pts;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) pts.emplace_back(std::array<std::int64_t, 3>{1, a, b}, p);
  for (std::uint32_t b = 0; b < p; ++b) pts.emplace_back(std::array<std::int64_t, 3>{0, 1, b}, p);
  pts.emplace_back(std::array<std::int64_t, 3>{0, 0, 1}, p);
  std::sort(pts.begin(), pts.end());
  return pts;
}

ProjPoint act(const ProjPoint& x, const ProjMatrix& g) {
  const auto& v = x.coords();
  const auto& m = g.entries();
  std::array<std::int64_t, 3> r{};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) r[j] += static_cast<std::int64_t>(v[i]) * m[3 * i + j];
  return ProjPoint(r, x.modulus());
}

FieldElem conic_form(const ProjPoint& x) {
  const auto& c = x.coords();
  const std::uint32_t p = x.modulus();
  return FieldElem(static_cast<std::int64_t>(c[0]) * c[2], p) - FieldElem(static_cast<std::int64_t>(c[1]) * c[1], p);
}

namespace generators {
ProjMatrix eta() { return ProjMatrix::from_entries({1, 1, -1, 0, 1, 1, 1, 1, 0}); }
ProjMatrix psi() { return ProjMatrix::from_entries({1, 1, -1, 0, 1, -1, 0, 0, 1}); }
ProjMatrix alpha() { return ProjMatrix::from_entries({0, 0, 1, 0, -1, 0, 1, 0, 0}); }
ProjMatrix gamma() { return ProjMatrix::from_entries({0, 0, 1, 0, -1, -1, 1, -1, 1}); }
}  // namespace generators

}  // namespace flagtrans::gf
