#include "lcgroups/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "lcgroups/arith.hpp"
#include "lcgroups/errors.hpp"

namespace lcg {

namespace {
// Groups up to this order carry a full multiplication table (n^2 words);
// larger ones fall back to compose-and-look-up.
constexpr std::size_t kMulTableMaxOrder = 1024;
}  // namespace

struct FiniteGroup::Data {
  uint32_t degree = 0;
  std::vector<Perm> elements;
  std::unordered_map<Perm, uint32_t, PermHash> index;
  std::vector<uint32_t> gen_indices;
  std::vector<uint32_t> inverses;
  std::vector<uint32_t> orders;
  std::vector<uint32_t> canonical;
  std::vector<uint32_t> canonical_rank;
  std::vector<uint32_t> multable;  // empty when the group is too large
  uint64_t exponent = 1;
};

FiniteGroup FiniteGroup::enumerate(const std::vector<Perm>& generators, std::size_t order_cap) {
  if (generators.empty()) throw InvalidArgumentError("enumerate: empty generator list");
  if (order_cap == 0) throw InvalidArgumentError("enumerate: order cap must be positive");
  uint32_t degree = generators[0].degree();
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw InvalidArgumentError("enumerate: generators have mixed degrees");

  auto d = std::make_shared<Data>();
  d->degree = degree;

  auto add = [&](const Perm& p) -> bool {
    if (d->index.count(p)) return false;
    if (d->elements.size() >= order_cap)
      throw CapExceededError("group enumeration exceeded order cap " + std::to_string(order_cap),
                             order_cap);
    uint32_t idx = static_cast<uint32_t>(d->elements.size());
    d->elements.push_back(p);
    d->index.emplace(p, idx);
    return true;
  };

  // Breadth-first closure: index 0 is the identity, then words of length 1
  // in generator order, and so on.  New words extend old ones by a right
  // factor: next = compose(current, gen).
  add(Perm::identity(degree));
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    for (const Perm& g : generators) {
      Perm nxt = compose(d->elements[cur], g);
      if (add(nxt)) queue.push_back(d->index.at(nxt));
    }
  }

  for (const Perm& g : generators) {
    uint32_t idx = d->index.at(g);
    if (std::find(d->gen_indices.begin(), d->gen_indices.end(), idx) == d->gen_indices.end())
      d->gen_indices.push_back(idx);
  }

  std::size_t n = d->elements.size();
  d->inverses.resize(n);
  d->orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d->inverses[i] = d->index.at(d->elements[i].inverse());
    d->orders[i] = static_cast<uint32_t>(element_order(d->elements[i]));
    d->exponent = lcm_checked(d->exponent, d->orders[i]);
  }

  d->canonical.resize(n);
  for (std::size_t i = 0; i < n; ++i) d->canonical[i] = static_cast<uint32_t>(i);
  std::sort(d->canonical.begin(), d->canonical.end(),
            [&](uint32_t a, uint32_t b) { return d->elements[a] < d->elements[b]; });
  d->canonical_rank.resize(n);
  for (std::size_t r = 0; r < n; ++r) d->canonical_rank[d->canonical[r]] = static_cast<uint32_t>(r);

  if (n <= kMulTableMaxOrder) {
    d->multable.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d->multable[a * n + b] = d->index.at(compose(d->elements[a], d->elements[b]));
  }

  return FiniteGroup(std::move(d));
}

uint32_t FiniteGroup::degree() const { return d_->degree; }
std::size_t FiniteGroup::order() const { return d_->elements.size(); }
const std::vector<Perm>& FiniteGroup::elements() const { return d_->elements; }
const Perm& FiniteGroup::element(uint32_t i) const { return d_->elements[i]; }
const std::vector<uint32_t>& FiniteGroup::generator_indices() const { return d_->gen_indices; }

std::optional<uint32_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::contains(const Perm& p) const { return d_->index.count(p) != 0; }

uint32_t FiniteGroup::mul(uint32_t a, uint32_t b) const {
  std::size_t n = d_->elements.size();
  if (!d_->multable.empty()) return d_->multable[static_cast<std::size_t>(a) * n + b];
  return d_->index.at(compose(d_->elements[a], d_->elements[b]));
}

uint32_t FiniteGroup::inv(uint32_t a) const { return d_->inverses[a]; }

uint32_t FiniteGroup::conj(uint32_t h, uint32_t g) const { return mul(mul(inv(g), h), g); }

uint32_t FiniteGroup::power(uint32_t a, uint64_t e) const {
  e %= d_->orders[a];
  uint32_t result = 0;  // identity
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

uint32_t FiniteGroup::commutator(uint32_t a, uint32_t b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

uint32_t FiniteGroup::order_of(uint32_t a) const { return d_->orders[a]; }
uint64_t FiniteGroup::exponent() const { return d_->exponent; }
const std::vector<uint32_t>& FiniteGroup::canonical_order() const { return d_->canonical; }
uint32_t FiniteGroup::canonical_rank(uint32_t i) const { return d_->canonical_rank[i]; }

FiniteGroup enumerate_group(const std::vector<Perm>& generators, std::size_t order_cap) {
  return FiniteGroup::enumerate(generators, order_cap);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<uint32_t> members,
                   std::vector<uint32_t> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  if (members_.empty() || members_[0] != 0)
    throw InvalidArgumentError("subgroup must contain the identity");
}

bool Subgroup::contains(uint32_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

bool Subgroup::contains_perm(const Perm& p) const {
  auto idx = parent_.index_of(p);
  return idx && contains(*idx);
}

std::vector<Perm> Subgroup::member_perms() const {
  std::vector<Perm> out;
  out.reserve(members_.size());
  for (uint32_t m : members_) out.push_back(parent_.element(m));
  return out;
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  out.reserve(generators_.size());
  for (uint32_t g : generators_) out.push_back(parent_.element(g));
  return out;
}

FiniteGroup Subgroup::as_group(std::size_t order_cap) const {
  std::vector<Perm> gens = generator_perms();
  if (gens.empty()) gens.push_back(Perm::identity(parent_.degree()));
  FiniteGroup H = FiniteGroup::enumerate(gens, order_cap);
  if (H.order() != members_.size())
    throw InvariantViolationError("subgroup generators do not reproduce the member set");
  return H;
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {0}, {}); }

Subgroup whole_subgroup(const FiniteGroup& G) {
  std::vector<uint32_t> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<uint32_t>(i);
  return Subgroup(G, std::move(all), G.generator_indices());
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<uint32_t>& seed) {
  std::vector<uint32_t> gens;
  for (uint32_t s : seed) {
    if (s >= G.order()) throw InvalidArgumentError("subgroup seed index out of range");
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<bool> in(G.order(), false);
  std::deque<uint32_t> queue;
  auto add = [&](uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  add(0);
  for (uint32_t g : gens) add(g);
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    for (uint32_t g : gens) add(G.mul(cur, g));
  }
  std::vector<uint32_t> members;
  for (uint32_t i = 0; i < G.order(); ++i)
    if (in[i]) members.push_back(i);
  return Subgroup(G, std::move(members), std::move(gens));
}

Subgroup subgroup_generated_perms(const FiniteGroup& G, const std::vector<Perm>& seed) {
  std::vector<uint32_t> idx;
  for (const Perm& p : seed) {
    auto i = G.index_of(p);
    if (!i) throw InvalidArgumentError("subgroup seed permutation not in the group");
    idx.push_back(*i);
  }
  return subgroup_generated(G, idx);
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<uint32_t>& seed) {
  std::vector<uint32_t> seeds = seed;
  for (;;) {
    Subgroup S = subgroup_generated(G, seeds);
    bool grew = false;
    for (uint32_t m : S.members()) {
      for (uint32_t g : G.generator_indices()) {
        uint32_t c = G.conj(m, g);
        if (!S.contains(c)) {
          seeds.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return S;
  }
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<uint32_t>& s) {
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (uint32_t x : s) {
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(g);
  }
  std::vector<uint32_t> gens = members;
  return Subgroup(G, std::move(members), std::move(gens));
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& s) {
  // Commuting with the generators is commuting with everything they generate.
  return centralizer(G, s.generators().empty() ? s.members() : s.generators());
}

Subgroup center(const FiniteGroup& G) { return centralizer(G, G.generator_indices()); }

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  const std::vector<uint32_t>& hgens = H.generators().empty() ? H.members() : H.generators();
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (uint32_t h : hgens) {
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(g);
  }
  std::vector<uint32_t> gens = members;
  return Subgroup(G, std::move(members), std::move(gens));
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  // Conjugating the generators of H by the generators of G suffices:
  // H^g = <gens^g> <= H forces H^g = H by cardinality.
  const std::vector<uint32_t>& hgens = H.generators().empty() ? H.members() : H.generators();
  for (uint32_t h : hgens)
    for (uint32_t g : G.generator_indices())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

bool subgroup_le(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_underlying(b.parent()))
    throw InvalidArgumentError("subgroup comparison across different parent groups");
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                       a.members().end());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_underlying(b.parent()))
    throw InvalidArgumentError("subgroup intersection across different parent groups");
  std::vector<uint32_t> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(members));
  std::vector<uint32_t> gens = members;
  return Subgroup(a.parent(), std::move(members), std::move(gens));
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::vector<bool> seen(G.order(), false);
  std::vector<uint32_t> seeds;
  for (uint32_t a = 0; a < G.order(); ++a) {
    for (uint32_t b = 0; b < G.order(); ++b) {
      uint32_t c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        if (c != 0) seeds.push_back(c);
      }
    }
  }
  return subgroup_generated(G, seeds);
}

Subgroup restrict_to(const FiniteGroup& H, const Subgroup& s) {
  std::vector<uint32_t> members;
  members.reserve(s.order());
  for (uint32_t m : s.members()) {
    auto idx = H.index_of(s.parent().element(m));
    if (!idx) throw InvalidArgumentError("restrict_to: member permutation not in target group");
    members.push_back(*idx);
  }
  std::sort(members.begin(), members.end());
  std::vector<uint32_t> gens;
  for (uint32_t g : s.generators()) gens.push_back(*H.index_of(s.parent().element(g)));
  return Subgroup(H, std::move(members), std::move(gens));
}

std::size_t IndexVecHash::operator()(const std::vector<uint32_t>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (uint32_t x : v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace lcg
