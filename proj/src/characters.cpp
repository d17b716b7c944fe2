#include "unitri/characters.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unitri {

namespace {

Rational q_power(std::uint32_t q, long long k) {
  mpz_class v = 1;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) v *= q;
  return k < 0 ? Rational(mpz_class(1), v) : Rational(v);
}

Rational frac(const mpz_class& a, const mpz_class& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

void require_same_group(const ClassFunction& a, const ClassFunction& b, const char* what) {
  if (!(a.group() == b.group())) throw std::invalid_argument(std::string(what) + ": class functions on different groups");
}

bool is_subgroup(const Algebra& h, const Algebra& g) { return h == g || h.is_subalgebra_of(g); }

}  // namespace

ClassFunction::ClassFunction(Algebra group, std::vector<CyclotomicNumber> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("class function: empty table");
  int m = 1;
  for (const auto& v : values_) m = std::lcm(m, v.conductor());
  for (auto& v : values_)
    if (v.conductor() != m) v = v.embed(m);
  conductor_ = m;
}

ClassFunction ClassFunction::from_function(const Algebra& group,
                                           const std::function<CyclotomicNumber(const GroupElement&)>& f,
                                           std::uint64_t cap) {
  std::vector<CyclotomicNumber> values(group.order(cap));
  for_each_element(group, [&](std::uint64_t idx, const GroupElement& g) { values[idx] = f(g); }, cap);
  return ClassFunction(group, std::move(values));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(*this, o, "sum");
  std::vector<CyclotomicNumber> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  require_same_group(*this, o, "difference");
  std::vector<CyclotomicNumber> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  require_same_group(*this, o, "product");
  std::vector<CyclotomicNumber> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
  std::vector<CyclotomicNumber> v(values_);
  for (auto& x : v) x *= r;
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::galois(long long t) const {
  std::vector<CyclotomicNumber> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(galois_apply(x, t));
  return ClassFunction(group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

ClassFunction theta_sum(const Algebra& group, const std::vector<Functional>& functionals, const Rational& scale,
                        std::uint64_t cap) {
  for (const auto& mu : functionals)
    if (!(mu.algebra() == group)) throw std::invalid_argument("theta sum: functional on a different algebra");
  const Field& f = group.field();
  const int p = f.p();
  const std::uint64_t order = group.order(cap);
  std::vector<CyclotomicNumber> values(order);
  std::vector<long long> counts(static_cast<std::size_t>(p));
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    const Vector coords = group.coordinates_of_index(idx);
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& mu : functionals) ++counts[static_cast<std::size_t>(f.trace(mu.evaluate(coords)))];
    values[idx] = CyclotomicNumber::from_exponent_counts(p, counts, scale);
  }
  return ClassFunction(group, std::move(values));
}

ClassFunction theta_lambda(const Functional& lambda, std::uint64_t cap) {
  return theta_sum(lambda.algebra(), {lambda}, Rational(1), cap);
}

ClassFunction kirillov(const Functional& lambda, std::uint64_t cap) {
  const auto orb = orbit(lambda, OrbitKind::Coadjoint, cap);
  const std::uint32_t q = lambda.algebra().field().q();
  // |orbit| = q^{2k}.
  std::uint64_t size = orb.size();
  long long k2 = 0;
  while (size % q == 0) {
    size /= q;
    ++k2;
  }
  if (size != 1 || k2 % 2 != 0) throw std::logic_error("kirillov: coadjoint orbit size is not an even power of q");
  return theta_sum(lambda.algebra(), orb, q_power(q, -k2 / 2), cap);
}

ClassFunction exp_kirillov(const Functional& lambda, std::uint64_t cap) {
  const ClassFunction psi = kirillov(lambda, cap);
  const Algebra& g = lambda.algebra();
  std::vector<CyclotomicNumber> values(psi.size());
  for_each_element(
      g, [&](std::uint64_t idx, const GroupElement& x) { values[idx] = psi(GroupElement{trunc_log(x)}); }, cap);
  return ClassFunction(g, std::move(values));
}

ClassFunction supercharacter(const Functional& lambda, std::uint64_t cap) {
  const auto two_sided = orbit(lambda, OrbitKind::TwoSided, cap);
  const auto left = orbit(lambda, OrbitKind::Left, cap);
  return theta_sum(lambda.algebra(), two_sided,
                   frac(static_cast<unsigned long>(left.size()), static_cast<unsigned long>(two_sided.size())),
                   cap);
}

XiResult xi(const Functional& lambda, bool tabulate, std::uint64_t cap) {
  XiResult out;
  out.chain = chain_compute(lambda);
  out.degree_exponent = out.chain.xi_degree_exponent();
  out.norm_exponent = out.chain.xi_norm_exponent();
  if (tabulate) {
    const Algebra& g = lambda.algebra();
    try {
      g.order(cap);
      const Algebra lbar = Algebra::from_subspace(g.n(), g.field(), out.chain.l_bar);
      const ClassFunction theta = theta_lambda(Functional::from_entries(lbar, lambda.entries()), cap);
      out.table = induce(theta, g, cap);
    } catch (const CapExceeded&) {
      out.table_capped = true;
    }
  }
  return out;
}

std::vector<Functional> xi_orbit_set(const Functional& lambda, const ChainResult& chain, std::uint64_t cap) {
  const Algebra& g = lambda.algebra();
  const Algebra sbar = Algebra::from_subspace(g.n(), g.field(), chain.s_bar);
  std::set<Functional> out;
  for (const auto& mu : orbit_under(lambda, OrbitKind::Right, sbar, cap)) {
    if (out.count(mu)) continue;
    for (auto& nu : orbit(mu, OrbitKind::Coadjoint, cap)) {
      out.insert(std::move(nu));
      if (out.size() > cap) throw CapExceeded("xi orbit set exceeds cap " + std::to_string(cap));
    }
  }
  return {out.begin(), out.end()};
}

ClassFunction xi_from_orbit_sum(const Functional& lambda, std::uint64_t cap) {
  const ChainResult chain = chain_compute(lambda);
  const auto set = xi_orbit_set(lambda, chain, cap);
  const Algebra& g = lambda.algebra();
  const long long gap = static_cast<long long>(chain.s_bar.dim()) - static_cast<long long>(g.dim());
  return theta_sum(g, set, q_power(g.field().q(), gap), cap);
}

ConjugacyClasses conjugacy_classes(const Algebra& group, std::uint64_t cap) {
  const std::uint64_t order = group.order(cap);
  std::vector<GroupElement> gens, gens_inv;
  for (const auto& body : group.generators()) {
    gens.push_back({body});
    gens_inv.push_back(group_inv({body}));
  }
  ConjugacyClasses out;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  out.class_of.assign(order, kUnset);
  for (std::uint64_t start = 0; start < order; ++start) {
    if (out.class_of[start] != kUnset) continue;
    const std::size_t c = out.classes.size();
    out.classes.emplace_back();
    auto& cls = out.classes.back();
    out.class_of[start] = c;
    cls.push_back(start);
    for (std::size_t head = 0; head < cls.size(); ++head) {
      const GroupElement y = group.element(cls[head]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const std::uint64_t idx = group.index_of(group_mul(group_mul(gens[s], y), gens_inv[s]));
        if (out.class_of[idx] == kUnset) {
          out.class_of[idx] = c;
          cls.push_back(idx);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
  }
  return out;
}

ClassFunction induce(const ClassFunction& f, const Algebra& group, std::uint64_t cap) {
  const Algebra& h = f.group();
  if (!is_subgroup(h, group)) throw std::invalid_argument("induce: not a subgroup");
  const std::uint64_t g_order = group.order(cap);
  const std::uint64_t h_order = f.size();
  const ConjugacyClasses cc = conjugacy_classes(group, cap);
  std::vector<CyclotomicNumber> values(g_order);
  for (const auto& cls : cc.classes) {
    CyclotomicNumber sum(f.conductor());
    for (const std::uint64_t idx : cls) {
      const GroupElement y = group.element(idx);
      if (h.contains(y.body)) sum += f(y);
    }
    // |G| / (|H| |class|) times the sum over the class meeting H.
    sum *= frac(static_cast<unsigned long>(g_order),
                mpz_class(static_cast<unsigned long>(h_order)) * static_cast<unsigned long>(cls.size()));
    for (const std::uint64_t idx : cls) values[idx] = sum;
  }
  return ClassFunction(group, std::move(values));
}

ClassFunction restrict(const ClassFunction& f, const Algebra& subgroup) {
  if (!is_subgroup(subgroup, f.group())) throw std::invalid_argument("restrict: not a subgroup");
  std::vector<CyclotomicNumber> values(subgroup.order());
  for_each_element(subgroup, [&](std::uint64_t idx, const GroupElement& g) { values[idx] = f(g); });
  return ClassFunction(subgroup, std::move(values));
}

ClassFunction inflate(const ClassFunction& f, const QuotientProjection& pi, std::uint64_t cap) {
  if (!(f.group() == pi.part())) throw std::invalid_argument("inflate: function is not on the quotient");
  return ClassFunction::from_function(
      pi.whole(), [&](const GroupElement& g) { return f(pi.project(g)); }, cap);
}

CyclotomicNumber inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_group(f, g, "inner product");
  CyclotomicNumber sum(std::lcm(f.conductor(), g.conductor()));
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (f.at(i).is_zero() || g.at(i).is_zero()) continue;
    sum += f.at(i) * g.at(i).conj();
  }
  sum *= frac(1, static_cast<unsigned long>(f.size()));
  return sum;
}

AbelianDual::AbelianDual(Algebra group, std::vector<std::uint64_t> generators, std::vector<long long> orders,
                         std::vector<std::vector<long long>> exponents)
    : group_(std::move(group)),
      generators_(std::move(generators)),
      orders_(std::move(orders)),
      exponents_(std::move(exponents)) {
  for (const long long e : orders_) exponent_ = std::lcm(exponent_, e);
}

long long AbelianDual::character_exponent(const std::vector<long long>& label, std::uint64_t index) const {
  if (label.size() != orders_.size()) throw std::invalid_argument("abelian dual: label length mismatch");
  const auto& a = exponents_.at(index);
  long long k = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) k = (k + label[i] * a[i] % orders_[i] * (exponent_ / orders_[i])) % exponent_;
  return k;
}

ClassFunction AbelianDual::character(const std::vector<long long>& label) const {
  std::vector<CyclotomicNumber> values(exponents_.size());
  const int m = static_cast<int>(exponent_);
  for (std::uint64_t idx = 0; idx < exponents_.size(); ++idx)
    values[idx] = CyclotomicNumber::zeta(m, character_exponent(label, idx));
  return ClassFunction(group_, std::move(values));
}

std::vector<std::vector<long long>> AbelianDual::labels() const {
  std::vector<std::vector<long long>> out;
  std::vector<long long> c(orders_.size(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < orders_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (c.empty()) return out;
  }
}

AbelianDual abelian_dual(const Algebra& group, std::uint64_t cap) {
  if (!group.is_commutative()) throw std::invalid_argument("abelian dual: group is not abelian");
  const std::uint64_t order = group.order(cap);
  const std::vector<GroupElement> elems = enumerate_group(group, cap);
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return group.index_of(group_mul(elems[a], elems[b])); };

  // K = <x_1> x ... x <x_j>, with exponent vectors of its members.
  std::vector<char> in_k(order, 0);
  std::vector<std::vector<long long>> exps(order);
  std::vector<std::uint64_t> members{0};
  in_k[0] = 1;
  std::vector<std::uint64_t> gens;
  std::vector<long long> orders;

  while (members.size() < order) {
    // Element of maximal order modulo K.
    std::uint64_t best = 0;
    long long best_e = 0;
    for (std::uint64_t y = 0; y < order; ++y) {
      if (in_k[y]) continue;
      long long e = 1;
      std::uint64_t cur = y;
      while (!in_k[cur]) {
        cur = mul(cur, y);
        ++e;
      }
      if (e > best_e) {
        best_e = e;
        best = y;
      }
    }
    // Adjust within the coset yK to an element of order exactly e.
    std::optional<std::uint64_t> lift;
    for (const std::uint64_t k : members) {
      const std::uint64_t cand = mul(best, k);
      std::uint64_t cur = 0;
      for (long long t = 0; t < best_e; ++t) cur = mul(cur, cand);
      if (cur == 0) {
        lift = cand;
        break;
      }
    }
    if (!lift) throw std::logic_error("abelian dual: no lift of maximal order");
    std::vector<std::uint64_t> next;
    next.reserve(members.size() * static_cast<std::size_t>(best_e));
    std::vector<std::uint64_t> powers{0};
    for (long long t = 1; t < best_e; ++t) powers.push_back(mul(powers.back(), *lift));
    for (const std::uint64_t k : members) {
      for (long long t = 0; t < best_e; ++t) {
        const std::uint64_t idx = t == 0 ? k : mul(k, powers[static_cast<std::size_t>(t)]);
        if (t > 0) {
          if (in_k[idx]) throw std::logic_error("abelian dual: product is not direct");
          in_k[idx] = 1;
          exps[idx] = exps[k];
        }
        next.push_back(idx);
      }
    }
    for (const std::uint64_t idx : next) exps[idx].push_back(0);
    for (const std::uint64_t k : members)
      for (long long t = 1; t < best_e; ++t) exps[mul(k, powers[static_cast<std::size_t>(t)])].back() = t;
    members = std::move(next);
    gens.push_back(*lift);
    orders.push_back(best_e);
  }
  for (auto& e : exps) e.resize(orders.size(), 0);
  return AbelianDual(group, std::move(gens), std::move(orders), std::move(exps));
}

std::vector<ClassFunction> constituents_of_induced_linear(const AbelianDual& dual, const Algebra& subgroup,
                                                          const ClassFunction& theta_on_subgroup) {
  const Algebra& a = dual.group();
  if (!(theta_on_subgroup.group() == subgroup)) throw std::invalid_argument("constituents: function not on the subgroup");
  if (!is_subgroup(subgroup, a)) throw std::invalid_argument("constituents: not a subgroup");
  const LinearityReport lin = is_character_linear(theta_on_subgroup);
  if (!lin.is_character) throw std::invalid_argument("constituents: function is not a homomorphism on the subgroup");

  const long long e = dual.exponent();
  const long long mt = theta_on_subgroup.conductor();
  const long long m = std::lcm(e, mt);
  std::vector<std::uint64_t> in_a;
  std::vector<long long> target;
  for_each_element(subgroup, [&](std::uint64_t idx, const GroupElement& g) {
    in_a.push_back(a.index_of(g));
    target.push_back(static_cast<long long>(*theta_on_subgroup.at(idx).root_of_unity_exponent()) * (m / mt) % m);
  });
  std::vector<ClassFunction> out;
  for (const auto& label : dual.labels()) {
    bool ok = true;
    for (std::size_t i = 0; i < in_a.size() && ok; ++i)
      ok = dual.character_exponent(label, in_a[i]) * (m / e) % m == target[i];
    if (ok) out.push_back(dual.character(label));
  }
  return out;
}

LinearityReport is_character_linear(const ClassFunction& f) {
  const Algebra& a = f.group();
  if (!a.is_commutative()) throw std::invalid_argument("linearity test: group is not abelian");
  LinearityReport rep;
  if (!(f.degree() == CyclotomicNumber::rational(1))) {
    rep.witness = std::make_pair(std::uint64_t{0}, std::uint64_t{0});
    return rep;
  }
  const std::uint64_t order = f.size();
  const std::vector<GroupElement> elems = enumerate_group(a);
  // Root-of-unity exponents when every value is one; a homomorphism needs this.
  const int m = f.conductor();
  std::vector<int> ex(order, -1);
  bool all_roots = true;
  for (std::uint64_t i = 0; i < order; ++i) {
    const auto k = f.at(i).root_of_unity_exponent();
    if (k) ex[i] = *k;
    else all_roots = false;
  }
  auto holds = [&](std::uint64_t g, std::uint64_t h) {
    const std::uint64_t gh = a.index_of(group_mul(elems[g], elems[h]));
    if (all_roots) return (ex[g] + ex[h]) % m == ex[gh];
    return f.at(gh) == f.at(g) * f.at(h);
  };
  // f(gs) = f(g) f(s) for all g and generators s already forces a homomorphism;
  // small groups are also checked on all pairs.
  std::vector<std::uint64_t> right;
  if (order <= 256) {
    for (std::uint64_t h = 0; h < order; ++h) right.push_back(h);
  } else {
    for (const auto& body : a.generators()) right.push_back(a.index_of(GroupElement{body}));
  }
  for (std::uint64_t g = 0; g < order; ++g)
    for (const std::uint64_t h : right)
      if (!holds(g, h)) {
        rep.witness = std::make_pair(g, h);
        return rep;
      }
  rep.is_character = true;
  return rep;
}

ValueField field_of_values(const ClassFunction& f) {
  ValueField out;
  out.conductor = f.conductor();
  long long order = 1;
  bool all_roots = true;
  for (const auto& v : f.values()) {
    const auto k = v.root_of_unity_exponent();
    if (!k) {
      all_roots = false;
      continue;
    }
    order = std::lcm(order, static_cast<long long>(out.conductor) / std::gcd(static_cast<long long>(*k), static_cast<long long>(out.conductor)));
  }
  if (all_roots) out.value_order = order;
  if (out.conductor == 1) return out;
  const auto pk = prime_power_decomposition(out.conductor);
  if (!pk) throw std::invalid_argument("field of values: conductor " + std::to_string(out.conductor) + " is not a prime power");
  for (int i = 0; i <= pk->second; ++i) {
    bool all = true;
    for (const auto& v : f.values())
      if (!in_subfield(v, i)) {
        all = false;
        break;
      }
    if (all) {
      out.min_subfield_index = i;
      return out;
    }
  }
  out.min_subfield_index = pk->second;
  return out;
}

}  // namespace unitri
