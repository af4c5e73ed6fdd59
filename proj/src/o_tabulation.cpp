#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "slcomb/comb_forge.hpp"
#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

constexpr Complex kI{0.0, 1.0};

using Key = std::pair<std::size_t, std::size_t>;
using Table = std::map<Key, ComplexMatrix>;

struct Builder {
  GeneratorBasis basis;

  const ComplexMatrix& l(int k) const { return basis[static_cast<std::size_t>(k)]; }

  ComplexMatrix lc(std::initializer_list<std::pair<int, double>> terms) const {
    ComplexMatrix out(static_cast<std::size_t>(basis.local_dim()));
    for (auto [k, c] : terms) out += l(k) * Complex(c);
    return out;
  }
  // l_a + i l_b and l_a - i l_b
  ComplexMatrix p(int a, int b) const { return l(a) + kI * l(b); }
  ComplexMatrix m(int a, int b) const { return l(a) - kI * l(b); }
  // l_a + l_b, as tabulated in one of the d = 4 entries
  ComplexMatrix s(int a, int b) const { return l(a) + l(b); }

  static ComplexMatrix k(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); }
  ComplexMatrix kk(int a) const { return kron(l(a), l(a)); }
};

Table qutrit_table() {
  const Builder b{generator_basis(3)};
  auto K = &Builder::k;
  Table t;
  const ComplexMatrix w = b.lc({{0, 2}, {8, 1}});
  t[{1, 1}] = 0.5 * (b.kk(2) - b.kk(1) - b.kk(3)) + K(w, w) * (1.0 / 18);

  const ComplexMatrix a = b.lc({{0, 2}, {8, 1}, {3, 3}});
  t[{1, 2}] = (K(a, b.m(6, 7)) + K(b.p(6, 7), a)) * (1.0 / 12) -
              0.25 * (K(b.m(1, 2), b.m(4, 5)) + K(b.p(4, 5), b.p(1, 2)));

  const ComplexMatrix c = b.lc({{0, 2}, {8, 1}, {3, -3}});
  t[{1, 3}] = 0.25 * (K(b.p(1, 2), b.m(6, 7)) + K(b.p(6, 7), b.m(1, 2))) -
              (K(c, b.m(4, 5)) + K(b.p(4, 5), c)) * (1.0 / 12);

  t[{2, 1}] = (K(b.m(6, 7), a) + K(a, b.p(6, 7))) * (1.0 / 12) -
              0.25 * (K(b.m(4, 5), b.m(1, 2)) + K(b.p(1, 2), b.p(4, 5)));

  const ComplexMatrix u = b.lc({{3, 1}, {8, 1}});
  const ComplexMatrix v = b.lc({{0, 4}, {3, 3}, {8, -1}});
  t[{2, 2}] = 0.5 * (b.kk(5) - b.kk(4) - 0.25 * K(u, u)) + K(v, v) * (1.0 / 72);

  const ComplexMatrix x = b.lc({{0, 1}, {8, -1}});
  t[{2, 3}] = -0.25 * (K(b.m(6, 7), b.m(4, 5)) + K(b.p(4, 5), b.p(6, 7))) +
              (K(x, b.m(1, 2)) + K(b.p(1, 2), x)) * (1.0 / 6);

  t[{3, 1}] = 0.25 * (K(b.m(6, 7), b.p(1, 2)) + K(b.m(1, 2), b.p(6, 7))) -
              (K(b.m(4, 5), c) + K(c, b.p(4, 5))) * (1.0 / 12);

  const ComplexMatrix y = b.lc({{0, 2}, {8, -1}});
  t[{3, 2}] = 0.25 * (K(b.m(4, 5), b.m(6, 7)) + K(b.p(6, 7), b.p(4, 5))) +
              (K(b.m(1, 2), y) + K(x, b.p(1, 2))) * (1.0 / 6);

  const ComplexMatrix f = b.lc({{3, 1}, {8, -1}});
  const ComplexMatrix g = b.lc({{0, 4}, {3, -3}, {8, -1}});
  t[{3, 3}] = 0.5 * (b.kk(7) - b.kk(6) - 0.25 * K(f, f)) + K(g, g) * (1.0 / 72);
  return t;
}

Table ququart_table() {
  const Builder b{generator_basis(4)};
  auto K = &Builder::k;
  const double q = 0.25, e = 1.0 / 8;
  Table t;

  const ComplexMatrix o11 = b.lc({{0, 1}, {15, 1}});
  t[{1, 1}] = 0.5 * (b.kk(2) - b.kk(1) - b.kk(13)) + e * K(o11, o11);

  const ComplexMatrix x = b.lc({{0, 1}, {13, 2}, {15, 1}});
  t[{1, 2}] = -q * (K(b.m(1, 2), b.m(3, 4)) + K(b.p(3, 4), b.p(1, 2))) + e * (K(x, b.m(7, 8)) + K(b.p(7, 8), x));
  t[{1, 3}] = -q * (K(b.m(1, 2), b.m(5, 6)) + K(b.p(6, 5), b.p(1, 2))) + e * (K(x, b.m(9, 10)) + K(b.p(9, 10), x));

  const ComplexMatrix y = b.lc({{0, 1}, {13, -2}, {15, 1}});
  t[{1, 4}] = q * (K(b.p(1, 2), b.m(7, 8)) + K(b.p(7, 8), b.m(1, 2))) - e * (K(y, b.m(3, 4)) + K(b.p(3, 4), y));
  t[{1, 5}] = q * (K(b.p(1, 2), b.m(9, 10)) + K(b.p(9, 10), b.m(1, 2))) - e * (K(y, b.m(5, 6)) + K(b.p(5, 6), y));
  t[{1, 6}] = q * (K(b.p(9, 10), b.m(3, 4)) + K(b.p(3, 4), b.m(9, 10))) -
              q * (K(b.p(5, 6), b.m(7, 8)) + K(b.p(7, 8), b.m(5, 6)));

  {
    const ComplexMatrix u = b.lc({{13, 1}, {14, -1}, {15, 1}});
    const ComplexMatrix v = b.lc({{0, 1}, {13, 1}, {14, 1}});
    t[{2, 2}] = 0.5 * (b.kk(4) - b.kk(3)) - e * (K(u, u) + K(v, v));
  }
  t[{2, 3}] = -q * (K(b.m(3, 4), b.m(5, 6)) + K(b.p(5, 6), b.p(3, 4))) + e * (K(x, b.m(11, 12)) + K(b.p(11, 12), x));

  const ComplexMatrix z = b.lc({{0, 1}, {14, 2}, {15, -1}});
  t[{2, 4}] = -q * (K(b.p(3, 4), b.p(7, 8)) + K(b.m(7, 8), b.m(3, 4))) + e * (K(z, b.m(1, 2)) + K(b.p(1, 2), z));
  t[{2, 5}] = -q * (K(b.m(7, 8), b.m(5, 6)) + K(b.p(5, 6), b.p(7, 8))) +
              q * (K(b.p(11, 12), b.m(1, 2)) + K(b.p(1, 2), b.m(11, 12)));
  t[{2, 6}] = q * (K(b.s(3, 4), b.m(11, 12)) + K(b.p(11, 12), b.m(3, 4))) - e * (K(b.p(5, 6), z) + K(z, b.m(5, 6)));

  {
    const ComplexMatrix u = b.lc({{13, 1}, {14, 1}, {15, 1}});
    const ComplexMatrix v = b.lc({{0, 1}, {13, 1}, {14, -1}});
    t[{3, 3}] = 0.5 * (b.kk(6) - b.kk(5)) - e * (K(u, u) - K(v, v));
  }
  t[{3, 4}] = -q * (K(b.m(9, 10), b.m(3, 4)) + K(b.p(3, 4), b.p(9, 10))) +
              q * (K(b.m(11, 12), b.m(1, 2)) + K(b.p(1, 2), b.p(11, 12)));

  const ComplexMatrix w = b.lc({{0, 1}, {14, -2}, {15, -1}});
  t[{3, 5}] = -q * (K(b.p(5, 6), b.p(9, 10)) + K(b.m(9, 10), b.m(5, 6))) + e * (K(b.p(1, 2), w) + K(w, b.m(1, 2)));
  t[{3, 6}] = -q * (K(b.p(5, 6), b.p(11, 12)) + K(b.m(11, 12), b.m(5, 6))) + e * (K(b.p(3, 4), w) + K(w, b.m(3, 4)));

  {
    const ComplexMatrix u = b.lc({{13, 1}, {14, 1}, {15, -1}});
    const ComplexMatrix v = b.lc({{0, 1}, {13, -1}, {14, 1}});
    t[{4, 4}] = 0.5 * (b.kk(8) - b.kk(7)) - e * (K(u, u) - K(v, v));
  }
  t[{4, 5}] = -q * (K(b.m(7, 8), b.m(9, 10)) + K(b.p(9, 10), b.p(7, 8))) + e * (K(y, b.m(11, 12)) + K(b.p(11, 12), y));

  const ComplexMatrix r = b.lc({{0, 1}, {14, 1}, {15, -1}});
  t[{4, 6}] = q * (K(b.p(7, 8), b.m(11, 12)) + K(b.p(11, 12), b.m(7, 8))) - e * (K(b.p(9, 10), r) + K(r, b.m(9, 10)));

  {
    const ComplexMatrix u = b.lc({{13, 1}, {14, -1}, {15, -1}});
    const ComplexMatrix v = b.lc({{0, 1}, {13, -1}, {14, -1}});
    t[{5, 5}] = 0.5 * (b.kk(10) - b.kk(9)) - e * (K(u, u) - K(v, v));
  }
  t[{5, 6}] = -q * (K(b.p(9, 10), b.p(11, 12)) + K(b.m(11, 12), b.m(9, 10))) + e * (K(b.p(7, 8), w) + K(w, b.m(7, 8)));

  const ComplexMatrix o66 = b.lc({{0, 1}, {15, -1}});
  t[{6, 6}] = 0.5 * (b.kk(12) - b.kk(11) - b.kk(14)) + e * K(o66, o66);
  return t;
}

const Table& table(int d) {
  static const Table t3 = qutrit_table();
  static const Table t4 = ququart_table();
  if (d == 3) return t3;
  if (d == 4) return t4;
  throw UnsupportedDimension("tabulated_o_operator: d = " + std::to_string(d) + " not in {3,4}");
}

}  // namespace

bool tabulated_o_operator(int d, std::size_t i, std::size_t j, ComplexMatrix& out) {
  const Table& t = table(d);
  auto it = t.find({i, j});
  if (it == t.end()) return false;
  out = it->second;
  return true;
}

std::vector<TabulationEntry> compare_with_tabulation(int d) {
  const Table& t = table(d);
  const OFamily& fam = o_family(d);
  std::vector<TabulationEntry> out;
  for (const auto& [key, m] : t)
    out.push_back({key.first, key.second, m.max_abs_diff(fam.at(key.first - 1, key.second - 1))});
  return out;
}

}  // namespace slcomb
