#pragma once

#include <array>
#include <boost/rational.hpp>
#include <functional>
#include <map>

// Brute-force oracle for group bialgebras k[G], G = (Z/2)^r written as
// bitmasks under xor. Axioms are expanded elementwise, straight from their
// restated forms, with plain rationals. Shares no code with the library.
namespace oracle {

using Rat = boost::rational<long long>;
template <std::size_t K>
using Tens = std::map<std::array<int, K>, Rat>;

struct Structure {
  int order;                       // |G|
  std::function<int(int)> alpha0;  // base twist on group elements (-1 = 0)
  unsigned s = 0, m = 1, e = 0;    // μ = α^s μ0, α = α^m, R twisted by α^e

  int pow(int g, unsigned n) const {
    for (unsigned i = 0; i < n && g >= 0; ++i) g = alpha0(g);
    return g;
  }
  int mul(int x, int y) const { return pow(x ^ y, s); }
  int alpha(int x) const { return pow(x, m); }
  int comul(int x) const { return pow(x, s); }  // Δ(x) = y ⊗ y with y = α^s x
};

template <std::size_t K>
void add(Tens<K>& t, std::array<int, K> k, Rat c) {
  for (int v : k)
    if (v < 0) return;
  t[k] += c;
  if (t[k] == Rat(0)) t.erase(k);
}

template <std::size_t K>
bool zero(const Tens<K>& a, const Tens<K>& b) {
  auto d = a;
  for (const auto& [k, v] : b) add(d, k, -v);
  return d.empty();
}

Tens<2> twisted(const Structure& S, const Tens<2>& R) {
  Tens<2> out;
  for (const auto& [k, v] : R) add<2>(out, {S.pow(k[0], S.e), S.pow(k[1], S.e)}, v);
  return out;
}

/// QT axioms with weak unit 1.
bool qt_holds(const Structure& S, const Tens<2>& R0) {
  for (int x = 0; x < S.order; ++x)
    if (S.mul(0, x) != S.alpha(x) || S.mul(x, 0) != S.alpha(x)) return false;
  Tens<2> R = twisted(S, R0);
  Tens<3> l1, r1, l2, r2;
  for (const auto& [i, ci] : R) {
    int d = S.comul(i[0]);
    add<3>(l1, {d, d, S.alpha(i[1])}, ci);
    int t = S.comul(i[1]);
    add<3>(l2, {S.alpha(i[0]), t, t}, ci);
    for (const auto& [j, cj] : R) {
      // Σ α(s_i) ⊗ α(s_j) ⊗ t_i t_j and Σ s_j s_i ⊗ α(t_i) ⊗ α(t_j)
      add<3>(r1, {S.alpha(i[0]), S.alpha(j[0]), S.mul(i[1], j[1])}, ci * cj);
      add<3>(r2, {S.mul(j[0], i[0]), S.alpha(i[1]), S.alpha(j[1])}, ci * cj);
    }
  }
  if (!zero(l1, r1) || !zero(l2, r2)) return false;
  for (int x = 0; x < S.order; ++x) {
    int d = S.comul(x);
    if (d < 0) continue;  // Δ(x) = 0
    Tens<2> lhs, rhs;
    for (const auto& [k, c] : R) {
      add<2>(lhs, {S.mul(d, k[0]), S.mul(d, k[1])}, c);
      add<2>(rhs, {S.mul(k[0], d), S.mul(k[1], d)}, c);
    }
    if (!zero(lhs, rhs)) return false;
  }
  return true;
}

using Form = std::function<Rat(int, int)>;

bool cobraided_holds(const Structure& S, const Form& R0) {
  auto R = [&](int x, int y) -> Rat {
    x = S.pow(x, S.e);
    y = S.pow(y, S.e);
    return x < 0 || y < 0 ? Rat(0) : R0(x, y);
  };
  auto Rv = [&](int x, int y) -> Rat { return x < 0 || y < 0 ? Rat(0) : R(x, y); };
  for (int x = 0; x < S.order; ++x)
    for (int y = 0; y < S.order; ++y) {
      for (int z = 0; z < S.order; ++z) {
        int dz = S.comul(z), dx = S.comul(x);
        Rat a = Rv(S.mul(x, y), S.alpha(z));
        Rat b = dz < 0 ? Rat(0) : Rv(S.alpha(x), dz) * Rv(S.alpha(y), dz);
        if (a != b) return false;
        a = Rv(S.alpha(x), S.mul(y, z));
        b = dx < 0 ? Rat(0) : Rv(dx, S.alpha(z)) * Rv(dx, S.alpha(y));
        if (a != b) return false;
      }
      int dx = S.comul(x), dy = S.comul(y);
      if (dx < 0 || dy < 0) continue;
      Tens<1> lhs, rhs;
      add<1>(lhs, {S.mul(dy, dx)}, Rv(dx, dy));
      add<1>(rhs, {S.mul(dx, dy)}, Rv(dx, dy));
      if (!zero(lhs, rhs)) return false;
    }
  return true;
}

}  // namespace oracle
