#pragma once

// Symmetric forms on pointed sets. With the adjoint duality and trivial Θ a
// form on n is a base-point-fixing involution of {0..n}; isometries are the
// permutations intertwining two involutions.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgw/f1/morphism.hpp"

namespace kgw::herm {

using f1::Morphism;

class SymmetricForm {
 public:
  SymmetricForm() = default;  // the zero form
  explicit SymmetricForm(Morphism psi) : psi_(psi) {
    if (psi.src() != psi.dst() || !f1::is_iso(psi))
      throw InvalidForm(psi.to_string() + " is not an automorphism");
    if (f1::compose(psi, psi) != Morphism::identity(psi.src()))
      throw InvalidForm(psi.to_string() + " is not an involution");
  }

  static SymmetricForm identity(int n) { return SymmetricForm(Morphism::identity(n)); }
  static SymmetricForm zero() { return SymmetricForm(); }

  int size() const { return psi_.src(); }
  const Morphism& psi() const { return psi_; }
  int operator()(int x) const { return psi_(x); }

  int fixed_points() const {
    int k = 0;
    for (int x = 1; x <= size(); ++x) k += psi_(x) == x;
    return k;
  }
  int transpositions() const { return (size() - fixed_points()) / 2; }
  bool is_identity() const { return fixed_points() == size(); }

  // "inv:(1 2)(3)"
  std::string to_string() const {
    std::string s = "inv:";
    for (int x = 1; x <= size(); ++x) {
      const int y = psi_(x);
      if (y < x) continue;
      s += "(" + std::to_string(x) + (y == x ? "" : " " + std::to_string(y)) + ")";
    }
    return s;
  }

  friend auto operator<=>(const SymmetricForm&, const SymmetricForm&) = default;
  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

 private:
  Morphism psi_;
};

inline SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b) {
  return SymmetricForm(f1::direct_sum(a.psi(), b.psi()));
}

// H(U) on U (+) P(U): k <-> n + k.
inline SymmetricForm hyperbolic(int n) {
  f1::check_size(2 * n);
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  for (int k = 1; k <= std::min(n, f1::kMaxSize / 2); ++k) {
    t[k] = static_cast<std::uint8_t>(n + k);
    t[n + k] = static_cast<std::uint8_t>(k);
  }
  return SymmetricForm(Morphism::from_table_unchecked(2 * n, 2 * n, t));
}

// Parses "inv:(1 2)(3)(4)". The carrier is {1..max element mentioned};
// elements not mentioned are fixed.
inline SymmetricForm parse_form(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("form literal '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  ws();
  if (text.substr(pos, 4) != "inv:") throw fail("expected prefix 'inv:'");
  pos += 4;
  std::vector<std::vector<int>> cycles;
  int top = 0;
  for (;;) {
    ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw fail("expected an element at offset " + std::to_string(start));
      if (pos - start > 3) throw fail("element too large");
      const int x = std::stoi(std::string(text.substr(start, pos - start)));
      if (x < 1) throw fail("elements are numbered from 1");
      cyc.push_back(x);
      top = std::max(top, x);
    }
    if (cyc.empty() || cyc.size() > 2) throw fail("cycles of an involution have length 1 or 2");
    cycles.push_back(cyc);
  }
  if (top > f1::kMaxSize) throw SizeLimit("form literal '" + std::string(text) + "' exceeds the size limit");
  std::vector<int> t(top + 1, 0);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (t[c[k]]) throw fail("element " + std::to_string(c[k]) + " appears twice");
      t[c[k]] = c[(k + 1) % c.size()];
    }
  for (int x = 1; x <= top; ++x)
    if (!t[x]) t[x] = x;
  return SymmetricForm(Morphism(top, top, t));
}

// All forms on n, ordered by value table.
inline std::vector<SymmetricForm> enumerate_forms(int n) {
  f1::check_size(n);
  std::vector<SymmetricForm> out;
  std::array<std::uint8_t, f1::kMaxSize + 1> t{};
  std::function<void()> rec = [&] {
    int x = 1;
    while (x <= n && t[x]) ++x;
    if (x > n) {
      out.emplace_back(Morphism::from_table_unchecked(n, n, t));
      return;
    }
    t[x] = static_cast<std::uint8_t>(x);
    rec();
    for (int y = x + 1; y <= n; ++y) {
      if (t[y]) continue;
      t[x] = static_cast<std::uint8_t>(y);
      t[y] = static_cast<std::uint8_t>(x);
      rec();
      t[y] = 0;
    }
    t[x] = 0;
  };
  rec();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.psi() < b.psi(); });
  return out;
}

// phi : source -> target with psi_source = phi^ad∘psi_target∘phi.
struct Isometry {
  SymmetricForm source;
  SymmetricForm target;
  Morphism map;

  static bool holds(const SymmetricForm& s, const SymmetricForm& t, const Morphism& phi) {
    return phi.src() == s.size() && phi.dst() == t.size() && f1::is_iso(phi) &&
           f1::compose(f1::dualize(phi), t.psi(), phi) == s.psi();
  }
  void validate() const {
    if (!holds(source, target, map))
      throw InvalidForm(map.to_string() + " is not an isometry " + source.to_string() + " -> " +
                        target.to_string());
  }
  Isometry inverse() const { return make(target, source, f1::inverse(map)); }
  static Isometry make(const SymmetricForm& s, const SymmetricForm& t, const Morphism& phi) {
    Isometry i{s, t, phi};
    i.validate();
    return i;
  }
  static Isometry identity(const SymmetricForm& s) { return {s, s, Morphism::identity(s.size())}; }

  friend auto operator<=>(const Isometry&, const Isometry&) = default;
  friend bool operator==(const Isometry&, const Isometry&) = default;
};

inline Isometry compose(const Isometry& g, const Isometry& f) {
  if (f.target != g.source) throw TypeMismatch("isometries are not composable");
  return Isometry::make(f.source, g.target, f1::compose(g.map, f.map));
}

inline Isometry direct_sum(const Isometry& a, const Isometry& b) {
  return Isometry::make(direct_sum(a.source, b.source), direct_sum(a.target, b.target),
                        f1::direct_sum(a.map, b.map));
}

inline bool is_isometry(const SymmetricForm& s, const SymmetricForm& t, const Morphism& phi) {
  return Isometry::holds(s, t, phi);
}

// Aut(S): permutations commuting with psi, by exhaustive search.
inline std::vector<Morphism> isometry_group(const SymmetricForm& s) {
  std::vector<Morphism> out;
  f1::for_each_morphism(s.size(), s.size(), f1::HomFilter::isos, [&](const Morphism& g) {
    if (is_isometry(s, s, g)) out.push_back(g);
  });
  return out;
}

// First isometry in enumeration order, by exhaustive search.
inline std::optional<Morphism> find_isometry(const SymmetricForm& s, const SymmetricForm& t) {
  std::optional<Morphism> found;
  if (s.size() != t.size()) return found;
  f1::for_each_morphism(s.size(), s.size(), f1::HomFilter::isos, [&](const Morphism& g) {
    if (!found && is_isometry(s, t, g)) found = g;
  });
  return found;
}

// Least form in the isometry class: the fixed points 1..f, then adjacent
// transpositions (f+1 f+2)(f+3 f+4)...
inline SymmetricForm canonical_representative(const SymmetricForm& s) {
  const int n = s.size(), f = s.fixed_points();
  std::vector<int> t{0};
  for (int x = 1; x <= f; ++x) t.push_back(x);
  for (int x = f + 1; x + 1 <= n; x += 2) {
    t.push_back(x + 1);
    t.push_back(x);
  }
  return SymmetricForm(Morphism(n, n, t));
}

}  // namespace kgw::herm
