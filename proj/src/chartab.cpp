#include "acg/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "acg/errors.hpp"

namespace acg {

namespace {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

// Arithmetic in the prime field F_q.
class PrimeField {
 public:
  explicit PrimeField(u64 q) : q_(q) {}
  u64 q() const { return q_; }
  u64 add(u64 a, u64 b) const { return (a + b) % q_; }
  u64 sub(u64 a, u64 b) const { return (a + q_ - b) % q_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % q_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= q_;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % q_ == 0) throw InternalError("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
  }
  u64 from(std::uint64_t n) const { return n % q_; }

 private:
  u64 q_;
};

u64 primitive_root(u64 q) {
  auto factors = prime_divisors(q - 1);
  PrimeField f(q);
  for (u64 g = 2; g < q; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 p) { return f.pow(g, (q - 1) / p) != 1; });
    if (ok) return g;
  }
  return 1;  // q == 2
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    u64 inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 factor = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of {v : A v = 0}.
std::vector<std::vector<u64>> nullspace(Matrix a, const PrimeField& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = row_reduce(a, f);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// lowest degree first.
std::vector<u64> characteristic_polynomial(Matrix h, const PrimeField& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 inv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      u64 u = f.mul(h[j][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = f.sub(h[j][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = f.add(h[r][m], f.mul(u, h[r][j]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1}
    std::vector<u64> next(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = f.add(next[k + 1], p[m - 1][k]);
      next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], p[m - 1][k]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      u64 factor = f.mul(t, h[m - i - 1][m - 1]);
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) {
        next[k] = f.sub(next[k], f.mul(factor, p[m - i - 1][k]));
      }
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(const std::vector<u64>& poly, const PrimeField& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.q(); ++x) {
    u64 acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = f.add(f.mul(acc, x), poly[k]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent) {
  for (u64 q = exponent + 1;; q += exponent) {
    if (q * q > 4 * group_order && is_prime(q)) return q;
  }
}

std::size_t CharacterTable::class_of(const Permutation& g) const {
  auto it = class_lookup->find(g);
  if (it == class_lookup->end()) throw PreconditionError(g.to_string() + " is not an element of the group");
  return it->second;
}

CharacterTable character_table(const PermGroup& group) {
  CharacterTable table;
  table.group_order = group.order();
  table.classes = conjugacy_classes(group);
  const std::size_t r = table.classes.size();
  const u64 order = group.order();

  auto lookup = std::make_shared<std::unordered_map<Permutation, std::size_t, PermutationHash>>();
  u64 exp = 1;
  for (std::size_t k = 0; k < r; ++k) {
    for (const auto& x : *table.classes[k].members) lookup->emplace(x, k);
    exp = std::lcm(exp, table.classes[k].representative.order());
  }
  table.class_lookup = lookup;
  table.conductor = static_cast<unsigned>(exp);
  table.dixon_prime = dixon_prime(order, exp);
  const PrimeField f(table.dixon_prime);

  std::vector<u64> sizes(r);
  for (std::size_t k = 0; k < r; ++k) sizes[k] = table.classes[k].size;
  table.inverse_class.resize(r);
  for (std::size_t k = 0; k < r; ++k) table.inverse_class[k] = lookup->at(table.classes[k].representative.inverse());

  // Class multiplication coefficients: c[j][k][l] = #{x in C_j : x^-1 g_l in C_k}.
  std::vector<std::vector<std::vector<u64>>> coeff(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  const auto& elems = group.elements();
  for (std::size_t l = 0; l < r; ++l) {
    const Permutation& gl = table.classes[l].representative;
    for (const auto& x : elems) {
      std::size_t j = lookup->at(x);
      std::size_t k = lookup->at(x.inverse() * gl);
      ++coeff[j][k][l];
    }
  }

  // Simultaneous eigenspaces of the class matrices A_j, (A_j)_{k,l} = c[j][k][l].
  std::vector<Matrix> spaces;
  {
    Matrix identity(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
    spaces.push_back(std::move(identity));
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool split = std::all_of(spaces.begin(), spaces.end(), [](const Matrix& w) { return w.size() == 1; });
    if (split) break;
    std::vector<Matrix> next;
    for (auto& w : spaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      auto pivots = row_reduce(w, f);
      const std::size_t d = w.size();
      // restricted[m][i]: coordinate m of A_j w_i.
      Matrix restricted(d, std::vector<u64>(d, 0));
      std::vector<std::vector<u64>> images(d, std::vector<u64>(r, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
          u64 acc = 0;
          for (std::size_t l = 0; l < r; ++l) {
            if (coeff[j][k][l] != 0 && w[i][l] != 0) acc = f.add(acc, f.mul(f.from(coeff[j][k][l]), w[i][l]));
          }
          images[i][k] = acc;
        }
        for (std::size_t m = 0; m < d; ++m) restricted[m][i] = images[i][pivots[m]];
      }
      auto eigenvalues = roots(characteristic_polynomial(restricted, f), f);
      std::size_t total = 0;
      for (u64 lambda : eigenvalues) {
        Matrix shifted = restricted;
        for (std::size_t m = 0; m < d; ++m) shifted[m][m] = f.sub(shifted[m][m], lambda);
        Matrix sub;
        for (const auto& c : nullspace(shifted, f)) {
          std::vector<u64> v(r, 0);
          for (std::size_t m = 0; m < d; ++m) {
            if (c[m] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[m], w[m][k]));
          }
          sub.push_back(std::move(v));
        }
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != d) throw InternalError("class matrix is not diagonalisable over F_" + std::to_string(f.q()));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("eigenspaces of the class algebra did not split completely");

  // Central characters -> degrees -> character values mod q.
  const u64 z = f.pow(primitive_root(f.q()), (f.q() - 1) / exp);
  const u64 exp_inv = f.inv(f.from(exp));
  std::vector<std::vector<std::size_t>> power_class(r, std::vector<std::size_t>(exp));
  for (std::size_t k = 0; k < r; ++k) {
    const Permutation& g = table.classes[k].representative;
    Permutation power(g.degree());
    for (u64 t = 0; t < exp; ++t) {
      power_class[k][t] = lookup->at(power);
      power = power * g;
    }
  }

  struct Row {
    u64 degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (auto& space : spaces) {
    std::vector<u64> w = space[0];
    if (w[0] == 0) throw InternalError("central character vanishes at the identity");
    u64 norm = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, norm);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = f.add(s, f.mul(f.mul(w[k], w[table.inverse_class[k]]), f.inv(f.from(sizes[k]))));
    }
    u64 degree_sq = f.mul(f.from(order), f.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (f.mul(d, d) == degree_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw InternalError("character degree is not a square root of |G|/S");
    std::vector<u64> chi_mod(r);
    for (std::size_t k = 0; k < r; ++k) chi_mod[k] = f.mul(f.mul(w[k], f.from(degree)), f.inv(f.from(sizes[k])));

    Row row{degree, {}};
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::int64_t> weights(exp, 0);
      for (u64 i = 0; i < exp; ++i) {
        u64 acc = 0;
        for (u64 t = 0; t < exp; ++t) {
          u64 root = f.pow(z, (exp - (i * t) % exp) % exp);
          acc = f.add(acc, f.mul(chi_mod[power_class[k][t]], root));
        }
        u64 multiplicity = f.mul(acc, exp_inv);
        if (multiplicity > degree) throw InternalError("eigenvalue multiplicity exceeds the character degree");
        weights[i] = static_cast<std::int64_t>(multiplicity);
      }
      row.values.push_back(Cyclotomic::from_exponent_weights(static_cast<unsigned>(exp), weights));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto trivial = [](const Row& x) {
      return std::all_of(x.values.begin(), x.values.end(),
                         [&](const Cyclotomic& v) { return v == Cyclotomic::integer(v.conductor(), 1); });
    };
    bool ta = trivial(a);
    bool tb = trivial(b);
    if (ta != tb) return ta;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      if (a.values[k].coefficients() != b.values[k].coefficients()) {
        return a.values[k].coefficients() < b.values[k].coefficients();
      }
    }
    return false;
  });

  u64 degree_sum = 0;
  for (auto& row : rows) {
    degree_sum += row.degree * row.degree;
    table.degrees.push_back(row.degree);
    if (row.degree == 1) ++table.linear_count;
    table.irreducibles.push_back(std::move(row.values));
  }
  if (degree_sum != order) throw InternalError("sum of squared degrees differs from |G|");

  // First orthogonality relation, exactly.
  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t k = 0; k < r; ++k) conj[c].push_back(table.irreducibles[c][k].conjugate());
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic sum(table.conductor);
      for (std::size_t k = 0; k < r; ++k) {
        sum += Cyclotomic::integer(table.conductor, static_cast<std::int64_t>(sizes[k])) *
               (table.irreducibles[a][k] * conj[b][k]);
      }
      auto expected = static_cast<std::int64_t>(a == b ? order : 0);
      if (sum != Cyclotomic::integer(table.conductor, expected)) {
        throw InternalError("row orthogonality fails for characters " + std::to_string(a) + " and " +
                            std::to_string(b));
      }
    }
  }
  return table;
}

bool is_zero_at(const CharacterTable& table, std::size_t character, std::size_t cls) {
  if (character >= table.character_count() || cls >= table.class_count()) {
    throw PreconditionError("character table index out of range");
  }
  return table.irreducibles[character][cls].is_zero();
}

std::int64_t orthogonality_check(const CharacterTable& table, std::size_t class_i, std::size_t class_j) {
  if (class_i >= table.class_count() || class_j >= table.class_count()) {
    throw PreconditionError("class index out of range");
  }
  Cyclotomic sum(table.conductor);
  for (const auto& row : table.irreducibles) sum += row[class_i] * row[class_j].conjugate();
  return sum.to_integer();
}

Rational restriction_norm(const CharacterTable& table, const PermGroup& group, const PermGroup& normal,
                          std::size_t character) {
  if (!is_normal(group, normal)) throw PreconditionError("restriction_norm: subgroup is not normal");
  if (character >= table.character_count()) throw PreconditionError("character index out of range");
  // A normal subgroup is a union of classes.
  Cyclotomic sum(table.conductor);
  const auto& row = table.irreducibles[character];
  for (std::size_t k = 0; k < table.class_count(); ++k) {
    if (!normal.contains(table.classes[k].representative)) continue;
    sum += Cyclotomic::integer(table.conductor, static_cast<std::int64_t>(table.classes[k].size)) *
           (row[k] * row[k].conjugate());
  }
  return Rational(sum.to_integer(), static_cast<std::int64_t>(normal.order()));
}

std::string export_character_table(const CharacterTable& table) {
  std::ostringstream out;
  out << "# conductor " << table.conductor << "\n";
  for (std::size_t k = 0; k < table.class_count(); ++k) {
    if (k > 0) out << ',';
    out << table.classes[k].size;
  }
  out << "\n";
  for (const auto& row : table.irreducibles) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << ',';
      out << row[k].to_string();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace acg
