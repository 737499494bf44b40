#include "acg/zoo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "acg/analysis.hpp"
#include "acg/anticentral.hpp"
#include "acg/errors.hpp"
#include "acg/structure.hpp"

namespace acg {

namespace {

using u64 = std::uint64_t;

std::uint64_t ipow(u64 base, u64 exp) {
  u64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// p and k with q = p^k, or nullopt if q is not a prime power.
std::optional<std::pair<u64, u64>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto primes = prime_divisors(q);
  if (primes.size() != 1) return std::nullopt;
  u64 k = 0;
  for (u64 r = q; r > 1; r /= primes[0]) ++k;
  return std::make_pair(primes[0], k);
}

Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation::from_images(std::move(images));
}

// Right regular representation of a group given by its multiplication on
// indices 0..size-1.
PermGroup regular(std::size_t size, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                  const std::vector<std::size_t>& generators) {
  std::vector<Permutation> gens;
  for (auto g : generators) gens.push_back(from_map(size, [&](std::size_t x) { return mul(x, g); }));
  return PermGroup(size, std::move(gens));
}

Permutation cycle(std::size_t degree, std::size_t first, std::size_t length) {
  return from_map(degree, [&](std::size_t i) {
    if (i < first || i >= first + length) return i;
    return first + (i - first + 1) % length;
  });
}

std::string join(const std::vector<u64>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i > 0 ? sep : "") + std::to_string(xs[i]);
  return out;
}

// GF(p^k) with elements encoded as base-p digit strings of polynomials.
class GaloisField {
 public:
  GaloisField(u64 p, u64 k) : p_(p), k_(k), q_(ipow(p, k)) {
    if (k_ == 1) return;
    for (u64 code = 0; code < q_; ++code) {
      std::vector<u64> f = digits(code);
      f.push_back(1);
      if (irreducible(f)) {
        modulus_ = f;
        return;
      }
    }
    throw InternalError("no irreducible polynomial of degree " + std::to_string(k));
  }

  u64 add(u64 a, u64 b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (u64 i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  u64 mul(u64 a, u64 b) const {
    if (k_ == 1) return (a * b) % p_;
    auto x = digits(a);
    auto y = digits(b);
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (u64 i = 0; i < k_; ++i) {
      for (u64 j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    return encode(reduce(prod, modulus_));
  }

 private:
  std::vector<u64> digits(u64 code) const {
    std::vector<u64> d(k_, 0);
    for (u64 i = 0; i < k_; ++i, code /= p_) d[i] = code % p_;
    return d;
  }
  u64 encode(const std::vector<u64>& d) const {
    u64 code = 0;
    for (u64 i = k_; i-- > 0;) code = code * p_ + (i < d.size() ? d[i] : 0);
    return code;
  }
  // Remainder of a modulo the monic polynomial m.
  std::vector<u64> reduce(std::vector<u64> a, const std::vector<u64>& m) const {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
      u64 c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p_ - c) * m[j]) % p_;
    }
    a.resize(dm);
    return a;
  }
  bool irreducible(const std::vector<u64>& f) const {
    const u64 deg = f.size() - 1;
    for (u64 d = 1; 2 * d <= deg; ++d) {
      for (u64 code = 0; code < ipow(p_, d); ++code) {
        std::vector<u64> g(d + 1, 0);
        for (u64 i = 0, c = code; i < d; ++i, c /= p_) g[i] = c % p_;
        g[d] = 1;
        auto r = reduce(f, g);
        if (std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; })) return false;
      }
    }
    return true;
  }

  u64 p_, k_, q_;
  std::vector<u64> modulus_;
};

ZooGroup finish(PermGroup group, GroupManifest manifest) {
  ZooGroup z{std::move(group), std::move(manifest)};
  verify_manifest(z);
  return z;
}

// Generator of the (cyclic) center of a group with |Z| prime.
Permutation central_generator(const PermGroup& g) {
  PermGroup z = center(g);
  for (const auto& x : z.elements()) {
    if (!x.is_identity()) return x;
  }
  throw InternalError("group has trivial center");
}

// B1 x B2 modulo the diagonal <(z1, z2^-1)>, acting regularly.
PermGroup central_product(const PermGroup& b1, const PermGroup& b2, const Permutation& z1, const Permutation& z2,
                          std::vector<Permutation> images_of, std::vector<Permutation>* images) {
  PermGroup product = direct_product(b1, b2);
  Permutation glue = direct_product_element(z1, z2.inverse());
  PermGroup kernel(product.degree(), {glue});
  CosetAction action = coset_action(product, kernel);
  if (images != nullptr) {
    for (const auto& x : images_of) images->push_back(action.image_of(x));
  }
  return action.image;
}

GroupManifest manifest(std::string name, std::string family, nlohmann::json params) {
  GroupManifest m;
  m.name = std::move(name);
  m.family = std::move(family);
  m.parameters = std::move(params);
  return m;
}

}  // namespace

void verify_manifest(const ZooGroup& z) {
  const PermGroup& g = z.group;
  const auto& m = z.manifest;
  auto fail = [&](const std::string& key, std::int64_t expected, std::int64_t actual) {
    throw InternalError("manifest of " + m.name + ": " + key + " expected " + std::to_string(expected) + ", got " +
                        std::to_string(actual));
  };
  for (const auto& [key, expected] : m.expected) {
    std::int64_t actual = 0;
    if (key == "order") {
      actual = static_cast<std::int64_t>(g.order());
    } else if (key == "abelian_index") {
      actual = static_cast<std::int64_t>(g.order() / derived_subgroup(g).order());
    } else if (key == "derived_order") {
      actual = static_cast<std::int64_t>(derived_subgroup(g).order());
    } else if (key == "center_order") {
      actual = static_cast<std::int64_t>(center(g).order());
    } else if (key == "nilpotency_class") {
      auto report = series_report(g, SeriesKind::lower_central);
      actual = report.nilpotency_class ? static_cast<std::int64_t>(*report.nilpotency_class) : -1;
    } else if (key == "anticentral_classes") {
      actual = static_cast<std::int64_t>(find_anticentral_classes(GroupAnalysis(g)).size());
    } else if (key.rfind("designated_", 0) == 0) {
      if (!m.designated) throw InternalError("manifest of " + m.name + ": " + key + " without a designated element");
      const Permutation& a = *m.designated;
      if (!g.contains(a)) throw InternalError("manifest of " + m.name + ": designated element not in the group");
      if (key == "designated_order") {
        actual = static_cast<std::int64_t>(a.order());
      } else if (key == "designated_centralizer_order") {
        actual = static_cast<std::int64_t>(g.order() / class_size(g, a));
      } else if (key == "designated_anticentral") {
        actual = is_anticentral(g, a) ? 1 : 0;
      } else {
        throw InternalError("manifest of " + m.name + ": unknown key " + key);
      }
    } else {
      throw InternalError("manifest of " + m.name + ": unknown key " + key);
    }
    if (actual != expected) fail(key, expected, actual);
  }
}

nlohmann::json manifest_to_json(const GroupManifest& m) {
  nlohmann::json j{{"schema_version", 1}, {"name", m.name}, {"family", m.family}, {"parameters", m.parameters}};
  j["expected"] = nlohmann::json::object();
  for (const auto& [k, v] : m.expected) j["expected"][k] = v;
  j["designated"] = m.designated ? nlohmann::json(m.designated->to_string()) : nlohmann::json(nullptr);
  return j;
}

GroupManifest manifest_from_json(const nlohmann::json& j, std::size_t degree) {
  try {
    GroupManifest m;
    m.name = j.at("name").get<std::string>();
    m.family = j.at("family").get<std::string>();
    m.parameters = j.value("parameters", nlohmann::json::object());
    for (const auto& [k, v] : j.at("expected").items()) m.expected[k] = v.get<std::int64_t>();
    if (j.contains("designated") && !j["designated"].is_null()) {
      m.designated = parse_permutation(j["designated"].get<std::string>(), degree);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what(), 0);
  }
}

ZooGroup abelian_group(const std::vector<std::uint64_t>& factors) {
  for (auto f : factors) {
    if (f < 2) throw PreconditionError("abelian_group: factor " + std::to_string(f) + " is less than 2");
  }
  std::size_t degree = std::accumulate(factors.begin(), factors.end(), std::size_t{0});
  std::string name = "C" + join(factors, "xC");
  if (degree == 0) {
    degree = 1;
    name = "trivial";
  }
  std::vector<Permutation> gens;
  std::size_t first = 0;
  for (auto f : factors) {
    gens.push_back(cycle(degree, first, f));
    first += f;
  }
  Permutation designated(degree);
  for (const auto& g : gens) designated = designated * g;
  u64 order = 1;
  for (auto f : factors) order *= f;
  auto m = manifest(name, "abelian", {{"factors", factors}});
  m.expected = {{"order", order}, {"abelian_index", order}, {"designated_anticentral", 1}};
  m.designated = designated;
  return finish(PermGroup(degree, std::move(gens)), std::move(m));
}

ZooGroup two_generated_2group(TwoGroupKind kind, std::uint64_t order) {
  auto pk = prime_power(order);
  const u64 minimum = kind == TwoGroupKind::semidihedral ? 16 : 8;
  if (!pk || pk->first != 2 || order < minimum) {
    throw PreconditionError("two_generated_2group: order must be a power of 2 and at least " + std::to_string(minimum));
  }
  const u64 k = pk->second;
  const std::size_t m = order / 2;  // order of the cyclic maximal subgroup <a>
  PermGroup group;
  Permutation designated;
  std::string name;
  if (kind == TwoGroupKind::dihedral) {
    Permutation a = cycle(m, 0, m);
    Permutation b = from_map(m, [&](std::size_t i) { return (m - i) % m; });
    group = PermGroup(m, {a, b});
    designated = b;
    name = "D" + std::to_string(order);
  } else {
    // Elements a^i b^j are indexed i + m*j.
    std::function<std::size_t(std::size_t, std::size_t)> mul;
    if (kind == TwoGroupKind::quaternion) {
      mul = [m](std::size_t x, std::size_t y) {
        std::size_t i = x % m, j = x / m, k2 = y % m, l = y / m;
        std::size_t e = (j == 0 ? i + k2 : i + m - k2) + (j == 1 && l == 1 ? m / 2 : 0);
        return e % m + m * (j ^ l);
      };
      name = "Q" + std::to_string(order);
    } else {
      mul = [m](std::size_t x, std::size_t y) {
        std::size_t i = x % m, j = x / m, k2 = y % m, l = y / m;
        std::size_t e = i + (j == 0 ? k2 : k2 * (m / 2 - 1));
        return e % m + m * (j ^ l);
      };
      name = "SD" + std::to_string(order);
    }
    group = regular(order, mul, {1, m});
    designated = group.generators()[1];
  }
  const char* kinds[] = {"dihedral", "quaternion", "semidihedral"};
  auto man = manifest(name, kinds[static_cast<int>(kind)], {{"order", order}});
  man.expected = {{"order", order},
                  {"abelian_index", 4},
                  {"nilpotency_class", static_cast<std::int64_t>(k - 1)},
                  {"designated_anticentral", 1}};
  man.designated = designated;
  return finish(std::move(group), std::move(man));
}

namespace {

// Order-p^3 extraspecial block and a noncentral element of it.
std::pair<PermGroup, Permutation> extraspecial_block(u64 p, const std::string& type) {
  if (p == 2) {
    auto z = two_generated_2group(type == "minus" ? TwoGroupKind::quaternion : TwoGroupKind::dihedral, 8);
    return {z.group, z.group.generators()[0]};
  }
  if (type == "p") {
    // Affine maps (u,v) -> (u+1, v) and (u,v) -> (u, v+u) on Z_p^2; point u + p*v.
    const std::size_t n = p * p;
    Permutation x = from_map(n, [&](std::size_t pt) { return (pt % p + 1) % p + p * (pt / p); });
    Permutation y = from_map(n, [&](std::size_t pt) { return pt % p + p * ((pt / p + pt % p) % p); });
    return {PermGroup(n, {x, y}), x};
  }
  // x -> x+1 and x -> (1+p)x on Z_{p^2}.
  const std::size_t n = p * p;
  Permutation x = from_map(n, [&](std::size_t pt) { return (pt + 1) % n; });
  Permutation y = from_map(n, [&](std::size_t pt) { return (pt * (1 + p)) % n; });
  return {PermGroup(n, {x, y}), x};
}

}  // namespace

ZooGroup extraspecial(std::uint64_t p, std::uint64_t order, const std::string& type) {
  if (!is_prime(p)) throw PreconditionError("extraspecial: " + std::to_string(p) + " is not prime");
  const bool valid_type = p == 2 ? (type == "plus" || type == "minus") : (type == "p" || type == "p2");
  if (!valid_type) {
    throw PreconditionError("extraspecial: type must be " + std::string(p == 2 ? "plus or minus" : "p or p2"));
  }
  if (order != ipow(p, 3) && order != ipow(p, 5)) {
    throw UnsupportedError("extraspecial: only orders p^3 and p^5 are supported");
  }
  PermGroup group;
  Permutation designated;
  std::string name;
  if (order == ipow(p, 3)) {
    auto [block, x] = extraspecial_block(p, type);
    group = block;
    designated = x;
    name = p == 2 ? (type == "plus" ? "ES8_plus" : "ES8_minus") : "ES" + std::to_string(order) + "_" + type;
  } else {
    // Plus type is a product of two like blocks; minus/p2 glues in one block of the other kind.
    auto [b1, x1] = extraspecial_block(p, p == 2 ? "plus" : "p");
    auto [b2, x2] = extraspecial_block(p, type);
    std::vector<Permutation> images;
    group = central_product(b1, b2, central_generator(b1), central_generator(b2),
                            {direct_product_element(x1, Permutation(b2.degree()))}, &images);
    designated = images.front();
    name = "ES" + std::to_string(order) + "_" + type;
  }
  auto m = manifest(name, "extraspecial", {{"p", p}, {"order", order}, {"exponent", type}});
  const auto po = static_cast<std::int64_t>(p);
  m.expected = {{"order", static_cast<std::int64_t>(order)},
                {"center_order", po},
                {"derived_order", po},
                {"abelian_index", static_cast<std::int64_t>(order / p)},
                {"designated_anticentral", 1},
                // Every noncentral class a Z is anticentral.
                {"anticentral_classes", static_cast<std::int64_t>((order - p) / p)}};
  m.designated = designated;
  return finish(std::move(group), std::move(m));
}

ZooGroup unitriangular(std::uint64_t n, std::uint64_t q) {
  if (n < 2) throw PreconditionError("unitriangular: n must be at least 2");
  auto pk = prime_power(q);
  if (!pk) throw PreconditionError("unitriangular: " + std::to_string(q) + " is not a prime power");
  u64 degree = 1;
  for (u64 i = 0; i < n; ++i) {
    degree *= q;
    if (degree > kUnitriangularDegreeBudget) {
      throw CapacityError("unitriangular: q^n exceeds the degree budget of " +
                          std::to_string(kUnitriangularDegreeBudget));
    }
  }
  const auto [p, k] = *pk;
  GaloisField field(p, k);
  auto coords = [&](std::size_t pt) {
    std::vector<u64> v(n);
    for (u64 j = 0; j < n; ++j, pt /= q) v[j] = pt % q;
    return v;
  };
  auto encode = [&](const std::vector<u64>& v) {
    std::size_t pt = 0;
    for (u64 j = n; j-- > 0;) pt = pt * q + v[j];
    return pt;
  };
  // Row vector times I + t E_{i,i+1}: coordinate i+1 gains t * v_i.
  auto elementary = [&](u64 i, u64 t) {
    return from_map(degree, [&, i, t](std::size_t pt) {
      auto v = coords(pt);
      v[i + 1] = field.add(v[i + 1], field.mul(v[i], t));
      return encode(v);
    });
  };
  std::vector<Permutation> gens;
  for (u64 i = 0; i + 1 < n; ++i) {
    for (u64 b = 0; b < k; ++b) gens.push_back(elementary(i, ipow(p, b)));
  }
  Permutation designated = from_map(degree, [&](std::size_t pt) {
    auto v = coords(pt);
    std::vector<u64> w(v);
    for (u64 j = 1; j < n; ++j) w[j] = field.add(v[j], v[j - 1]);
    return encode(w);
  });
  u64 designated_order = 1;
  while (designated_order < n) designated_order *= p;
  auto m = manifest("UT" + std::to_string(n) + "_" + std::to_string(q), "unitriangular", {{"n", n}, {"q", q}});
  const auto index = static_cast<std::int64_t>(ipow(q, n - 1));
  m.expected = {{"order", static_cast<std::int64_t>(ipow(q, n * (n - 1) / 2))},
                {"abelian_index", index},
                {"designated_centralizer_order", index},
                {"designated_order", static_cast<std::int64_t>(designated_order)},
                {"designated_anticentral", 1}};
  m.designated = designated;
  return finish(PermGroup(degree, std::move(gens)), std::move(m));
}

ZooGroup central_product_sl23_e(const std::string& e_kind) {
  if (e_kind != "D8" && e_kind != "Q8") throw PreconditionError("central_product_sl23_e: kind must be D8 or Q8");
  // SL(2,3) on the nonzero row vectors (a,b) of F_3^2, point 3a + b - 1.
  auto vec = [](std::size_t pt) { return std::make_pair((pt + 1) / 3, (pt + 1) % 3); };
  auto pt_of = [](std::size_t a, std::size_t b) { return 3 * a + b - 1; };
  auto matrix = [&](std::size_t m00, std::size_t m01, std::size_t m10, std::size_t m11) {
    return from_map(8, [&, m00, m01, m10, m11](std::size_t pt) {
      auto [a, b] = vec(pt);
      return pt_of((a * m00 + b * m10) % 3, (a * m01 + b * m11) % 3);
    });
  };
  Permutation x = matrix(1, 1, 0, 1);
  PermGroup sl23(8, {x, matrix(1, 0, 1, 1)});
  Permutation minus_one = matrix(2, 0, 0, 2);
  auto e = two_generated_2group(e_kind == "D8" ? TwoGroupKind::dihedral : TwoGroupKind::quaternion, 8);
  Permutation y = e.group.generators()[0];
  std::vector<Permutation> images;
  PermGroup group = central_product(sl23, e.group, minus_one, central_generator(e.group),
                                    {direct_product_element(x, y)}, &images);
  auto m = manifest("SL23o" + e_kind, "sl23", {{"kind", e_kind}});
  m.expected = {{"order", 96},
                {"abelian_index", 12},
                {"derived_order", 8},
                {"designated_order", 12},
                {"designated_centralizer_order", 12},
                {"designated_anticentral", 1}};
  m.designated = images.front();
  return finish(std::move(group), std::move(m));
}

ZooGroup fpf_semidirect(const std::vector<std::uint64_t>& k_factors) {
  if (k_factors.empty()) throw PreconditionError("fpf_semidirect: K must be nontrivial");
  u64 size = 1;
  for (auto f : k_factors) {
    if (f < 3 || f % 2 == 0) throw PreconditionError("fpf_semidirect: |K| must be odd");
    size *= f;
  }
  // Mixed-radix points; translations by the unit vectors and inversion.
  auto digits = [&](std::size_t pt) {
    std::vector<u64> d;
    for (auto f : k_factors) {
      d.push_back(pt % f);
      pt /= f;
    }
    return d;
  };
  auto encode = [&](const std::vector<u64>& d) {
    std::size_t pt = 0;
    for (std::size_t i = k_factors.size(); i-- > 0;) pt = pt * k_factors[i] + d[i];
    return pt;
  };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k_factors.size(); ++i) {
    gens.push_back(from_map(size, [&, i](std::size_t pt) {
      auto d = digits(pt);
      d[i] = (d[i] + 1) % k_factors[i];
      return encode(d);
    }));
  }
  Permutation alpha = from_map(size, [&](std::size_t pt) {
    auto d = digits(pt);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (k_factors[i] - d[i]) % k_factors[i];
    return encode(d);
  });
  gens.push_back(alpha);
  auto m = manifest("fpf_C" + join(k_factors, "xC"), "fpf", {{"factors", k_factors}});
  m.expected = {{"order", static_cast<std::int64_t>(2 * size)},
                {"abelian_index", 2},
                {"designated_centralizer_order", 2},
                {"designated_anticentral", 1}};
  m.designated = alpha;
  return finish(PermGroup(size, std::move(gens)), std::move(m));
}

ZooGroup classical(const std::string& kind, std::uint64_t n, std::uint64_t d) {
  if (kind == "symmetric" || kind == "alternating") {
    if (n < 1) throw PreconditionError("classical: n must be positive");
    std::vector<Permutation> gens;
    u64 order = 1;
    for (u64 i = 2; i <= n; ++i) order *= i;
    if (kind == "symmetric") {
      if (n >= 2) gens = {cycle(n, 0, 2), cycle(n, 0, n)};
    } else {
      if (n >= 3) {
        gens.push_back(cycle(n, 0, 3));
        if (n > 3) gens.push_back(n % 2 == 1 ? cycle(n, 0, n) : cycle(n, 1, n - 1));
      }
      order = std::max<u64>(order / 2, 1);
    }
    auto m = manifest((kind == "symmetric" ? "S" : "A") + std::to_string(n), "classical",
                      {{"kind", kind}, {"n", n}});
    m.expected = {{"order", static_cast<std::int64_t>(order)}};
    return finish(PermGroup(n, std::move(gens)), std::move(m));
  }
  if (kind == "frobenius") {
    const u64 p = n;
    if (!is_prime(p)) throw PreconditionError("classical frobenius: p must be prime");
    if (d < 1 || (p - 1) % d != 0) throw PreconditionError("classical frobenius: d must divide p-1");
    u64 root = 1;
    for (u64 r = 2; r < p || p == 2; ++r) {
      auto factors = prime_divisors(p - 1);
      bool primitive = std::all_of(factors.begin(), factors.end(), [&](u64 f) {
        u64 acc = 1;
        for (u64 i = 0; i < (p - 1) / f; ++i) acc = acc * r % p;
        return acc != 1;
      });
      if (primitive || p == 2) {
        root = p == 2 ? 1 : r;
        break;
      }
    }
    u64 mult = 1;
    for (u64 i = 0; i < (p - 1) / d; ++i) mult = mult * root % p;
    Permutation multiplier = from_map(p, [&](std::size_t x) { return x * mult % p; });
    PermGroup group(p, {cycle(p, 0, p), multiplier});
    auto m = manifest("F" + std::to_string(p * d), "classical", {{"kind", kind}, {"p", p}, {"d", d}});
    m.expected = {{"order", static_cast<std::int64_t>(p * d)}, {"designated_anticentral", 1}};
    if (d > 1) m.expected["abelian_index"] = static_cast<std::int64_t>(d);
    m.designated = multiplier;
    return finish(std::move(group), std::move(m));
  }
  if (kind == "wreath_pp") {
    const u64 p = n;
    if (!is_prime(p)) throw PreconditionError("classical wreath_pp: p must be prime");
    const std::size_t degree = p * p;
    Permutation base = cycle(degree, 0, p);
    Permutation top = from_map(degree, [&](std::size_t x) { return (x + p) % degree; });
    auto m = manifest("C" + std::to_string(p) + "wrC" + std::to_string(p), "classical", {{"kind", kind}, {"p", p}});
    m.expected = {{"order", static_cast<std::int64_t>(ipow(p, p + 1))},
                  {"nilpotency_class", static_cast<std::int64_t>(p)},
                  {"designated_anticentral", 1}};
    m.designated = top;
    return finish(PermGroup(degree, {base, top}), std::move(m));
  }
  if (kind == "psl27") {
    // x -> x+1 and x -> -1/x on the projective line over F_7, infinity last.
    Permutation t = cycle(8, 0, 7);
    Permutation s = from_map(8, [](std::size_t x) -> std::size_t {
      if (x == 7) return 0;
      if (x == 0) return 7;
      std::size_t inv = 1;
      while (inv * x % 7 != 1) ++inv;
      return (7 - inv) % 7;
    });
    auto m = manifest("PSL27", "classical", {{"kind", kind}});
    m.expected = {{"order", 168}, {"anticentral_classes", 0}};
    return finish(PermGroup(8, {t, s}), std::move(m));
  }
  throw PreconditionError("classical: unknown kind '" + kind + "'");
}

ZooGroup direct_product(const ZooGroup& a, const ZooGroup& b) {
  auto m = manifest(a.manifest.name + "x" + b.manifest.name, "direct_product",
                    {{"left", a.manifest.name}, {"right", b.manifest.name}});
  m.expected = {{"order", static_cast<std::int64_t>(a.group.order() * b.group.order())}};
  if (a.manifest.designated && b.manifest.designated) {
    m.designated = direct_product_element(*a.manifest.designated, *b.manifest.designated);
    auto ia = a.manifest.expected.find("designated_anticentral");
    auto ib = b.manifest.expected.find("designated_anticentral");
    if (ia != a.manifest.expected.end() && ib != b.manifest.expected.end()) {
      m.expected["designated_anticentral"] = ia->second * ib->second;
    }
  }
  return finish(direct_product(a.group, b.group), std::move(m));
}

ZooGroup construct(const std::string& family, const ConstructParams& params) {
  auto need = [&](const std::optional<std::uint64_t>& v, const char* flag) {
    if (!v) throw PreconditionError("construct " + family + ": missing --" + std::string(flag));
    return *v;
  };
  if (family == "abelian") return abelian_group(params.factors);
  if (family == "dihedral") return two_generated_2group(TwoGroupKind::dihedral, need(params.order, "order"));
  if (family == "quaternion") return two_generated_2group(TwoGroupKind::quaternion, need(params.order, "order"));
  if (family == "semidihedral") {
    return two_generated_2group(TwoGroupKind::semidihedral, need(params.order, "order"));
  }
  if (family == "extraspecial") {
    u64 p = need(params.p, "p");
    std::string type = params.exponent.value_or(p == 2 ? "plus" : "p");
    return extraspecial(p, need(params.order, "order"), type);
  }
  if (family == "unitriangular") return unitriangular(need(params.n, "n"), need(params.q, "q"));
  if (family == "sl23") return central_product_sl23_e(params.kind.value_or("D8"));
  if (family == "fpf") return fpf_semidirect(params.factors);
  if (family == "classical") {
    if (!params.kind) throw PreconditionError("construct classical: missing --kind");
    const std::string& kind = *params.kind;
    if (kind == "frobenius") return classical(kind, need(params.p, "p"), need(params.d, "d"));
    if (kind == "wreath_pp") return classical(kind, need(params.p, "p"));
    if (kind == "psl27") return classical(kind);
    return classical(kind, need(params.n, "n"));
  }
  throw PreconditionError("construct: unknown family '" + family + "'");
}

std::vector<ZooGroup> builtin_corpus() {
  std::vector<ZooGroup> out;
  out.push_back(abelian_group({}));
  out.push_back(abelian_group({6}));
  out.push_back(abelian_group({2, 2}));
  out.push_back(abelian_group({4, 2}));
  out.push_back(fpf_semidirect({3}));
  out.push_back(fpf_semidirect({5}));
  out.push_back(fpf_semidirect({3, 3}));
  out.push_back(two_generated_2group(TwoGroupKind::dihedral, 8));
  out.push_back(two_generated_2group(TwoGroupKind::quaternion, 8));
  out.push_back(two_generated_2group(TwoGroupKind::dihedral, 16));
  out.push_back(two_generated_2group(TwoGroupKind::quaternion, 16));
  out.push_back(two_generated_2group(TwoGroupKind::semidihedral, 16));
  out.push_back(extraspecial(3, 27, "p"));
  out.push_back(extraspecial(3, 27, "p2"));
  out.push_back(extraspecial(2, 32, "plus"));
  out.push_back(extraspecial(2, 32, "minus"));
  out.push_back(extraspecial(3, 243, "p"));
  out.push_back(extraspecial(3, 243, "p2"));
  for (auto [n, q] : std::vector<std::pair<u64, u64>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    out.push_back(unitriangular(n, q));
  }
  out.push_back(central_product_sl23_e("D8"));
  out.push_back(central_product_sl23_e("Q8"));
  out.push_back(classical("symmetric", 4));
  out.push_back(classical("alternating", 4));
  out.push_back(classical("symmetric", 5));
  out.push_back(classical("alternating", 5));
  out.push_back(classical("psl27"));
  out.push_back(classical("frobenius", 7, 3));
  out.push_back(classical("frobenius", 5, 4));
  out.push_back(classical("wreath_pp", 3));
  auto s3 = classical("symmetric", 3);
  s3.manifest.designated = parse_permutation("(1 2)", 3);
  s3.manifest.expected["designated_anticentral"] = 1;
  auto a4 = classical("alternating", 4);
  a4.manifest.designated = parse_permutation("(1 2 3)", 4);
  a4.manifest.expected["designated_anticentral"] = 1;
  out.push_back(direct_product(s3, s3));
  out.push_back(direct_product(s3, a4));
  std::sort(out.begin(), out.end(), [](const ZooGroup& x, const ZooGroup& y) { return x.manifest.name < y.manifest.name; });
  return out;
}

}  // namespace acg
