#include "wedge/betti.hpp"

#include "wedge/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace wedge {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct VecHash {
  std::size_t operator()(const std::vector<Exponent>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : v) h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<Exponent> to_key(const ExponentVec& v) {
  return std::vector<Exponent>(v.data(), v.data() + v.size());
}

int thread_count(const EngineOptions& opts, std::size_t jobs) {
  int t = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (static_cast<std::size_t>(t) > jobs) t = static_cast<int>(jobs);
  return t;
}

template <class Fn>
void parallel_for(std::size_t jobs, int threads, Fn&& fn) {
  if (threads <= 1 || jobs < 2) {
    for (std::size_t k = 0; k < jobs; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= jobs) return;
        fn(k);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t prime) {
  if (!is_prime(prime)) throw std::invalid_argument("FieldSpec: modulus must be prime");
  return FieldSpec{Kind::prime, prime};
}

FieldSpec FieldSpec::rationals() { return FieldSpec{Kind::rational, 0}; }

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational" || text == "qq") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string num = text.substr(3);
    try {
      const unsigned long p = std::stoul(num);
      if (p > 0x7fffffffUL) throw std::out_of_range("too large");
      return gf(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw std::invalid_argument("FieldSpec: expected `gf:<prime>` or `rational`, got `" + text + "`");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rational ? "rational" : "gf:" + std::to_string(p);
}

LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t cap) {
  if (I.is_zero()) throw std::invalid_argument("lcm_lattice: zero ideal");
  const int n = I.context()->count();

  std::unordered_set<std::vector<Exponent>, VecHash> seen;
  std::vector<ExponentVec> frontier;
  std::vector<ExponentVec> all;
  for (const auto& g : I.gens()) {
    if (seen.insert(to_key(g.exponents())).second) {
      frontier.push_back(g.exponents());
      all.push_back(g.exponents());
    }
  }

  while (!frontier.empty()) {
    std::vector<ExponentVec> fresh;
    for (const auto& x : frontier) {
      for (const auto& g : I.gens()) {
        ExponentVec y = x.max(g.exponents());
        if (seen.insert(to_key(y)).second) {
          if (seen.size() > cap)
            throw ResourceLimitError("lcm_lattice: size exceeds the cap of " + std::to_string(cap));
          fresh.push_back(std::move(y));
        }
      }
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }

  std::sort(all.begin(), all.end(), [n](const ExponentVec& a, const ExponentVec& b) {
    const Exponent da = a.sum(), db = b.sum();
    if (da != db) return da < db;
    for (int i = 0; i < n; ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  return LcmLattice{I.context(), std::move(all)};
}

bool lattice_contains(const MonomialIdeal& I, const ExponentVec& a) {
  // a is a subset lcm iff it equals the lcm of the generators dividing it.
  ExponentVec join = ExponentVec::Zero(a.size());
  bool any = false;
  for (const auto& g : I.gens()) {
    if ((g.exponents() <= a).all()) {
      join = join.max(g.exponents());
      any = true;
    }
  }
  return any && (join == a).all();
}

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<Face> faces)
    : ground_(ground_size), faces_(std::move(faces)) {
  if (ground_ < 0 || ground_ > 31)
    throw std::invalid_argument("SimplicialComplex: ground set must have 0..31 vertices");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  if (!faces_.empty() && (faces_.back() >> ground_) != 0)
    throw std::invalid_argument("SimplicialComplex: face outside the ground set");
  // downward closure: every face with one vertex removed must be present
  std::unordered_set<Face> present(faces_.begin(), faces_.end());
  for (const Face f : faces_)
    for (int b = 0; b < ground_; ++b)
      if ((f >> b) & 1u)
        if (!present.count(f & ~(Face{1} << b)))
          throw std::invalid_argument("SimplicialComplex: not downward closed");
}

SimplicialComplex SimplicialComplex::void_complex(int ground_size) {
  return SimplicialComplex(ground_size, {});
}

long SimplicialComplex::face_count(int dim) const {
  long c = 0;
  for (const Face f : faces_)
    if (std::popcount(f) == dim + 1) ++c;
  return c;
}

int SimplicialComplex::top_dimension() const {
  int top = -2;
  for (const Face f : faces_) top = std::max(top, std::popcount(f) - 1);
  return top;
}

namespace {

/// Boundary ranks of the augmented chain complex over a field policy.
template <class Field>
std::vector<long> homology_dims_impl(const Field& F, const SimplicialComplex& C) {
  const int n = C.ground_size();
  std::vector<long> dims(static_cast<std::size_t>(n) + 1, 0);
  if (C.is_void()) return dims;

  // faces grouped by dimension; index -1 lives at slot 0
  const int top = C.top_dimension();
  std::vector<std::vector<SimplicialComplex::Face>> by_dim(static_cast<std::size_t>(top) + 2);
  for (const auto f : C.faces()) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  std::vector<std::unordered_map<SimplicialComplex::Face, int>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    for (std::size_t k = 0; k < by_dim[d].size(); ++k) index[d][by_dim[d][k]] = static_cast<int>(k);

  // ranks[d] = rank of boundary from dimension d-1 faces (popcount d) down
  std::vector<long> ranks(by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    const auto& cols = by_dim[d];
    const auto& rows = by_dim[d - 1];
    if (cols.empty() || rows.empty()) continue;
    FieldMatrix<Field> M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    M.setConstant(F.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto f = cols[c];
      int position = 0;
      for (int b = 0; b < n; ++b) {
        if (!((f >> b) & 1u)) continue;
        const auto sub = f & ~(SimplicialComplex::Face{1} << b);
        const auto it = index[d - 1].find(sub);
        if (it != index[d - 1].end()) {
          const auto value = (position % 2 == 0) ? F.one() : F.neg(F.one());
          M(it->second, static_cast<Eigen::Index>(c)) = value;
        }
        ++position;
      }
    }
    ranks[d] = rank_in_place(F, M);
  }

  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    const long f_d = static_cast<long>(by_dim[d].size());
    const long h = f_d - ranks[d] - ranks[d + 1];
    dims[d] = h;  // dims[d] = dim H~_{d-1}
  }
  return dims;
}

}  // namespace

std::vector<long> reduced_homology_dims(const SimplicialComplex& C, const FieldSpec& F) {
  if (F.kind == FieldSpec::Kind::prime) return homology_dims_impl(PrimeField(F.p), C);
  return homology_dims_impl(RationalField{}, C);
}

namespace {

/// Face masks of K^a(I) without the downward-closure revalidation.
std::vector<SimplicialComplex::Face> koszul_faces(const MonomialIdeal& I, const ExponentVec& a) {
  const int n = I.context()->count();
  SimplicialComplex::Face support = 0;
  for (int j = 0; j < n; ++j)
    if (a(j) > 0) support |= SimplicialComplex::Face{1} << j;

  std::vector<char> is_face(std::size_t{1} << std::popcount(support), 0);
  std::vector<SimplicialComplex::Face> faces;

  // compress support bits to consecutive positions for the flag array
  std::vector<int> bits;
  for (int j = 0; j < n; ++j)
    if ((support >> j) & 1u) bits.push_back(j);

  const std::size_t total = std::size_t{1} << bits.size();
  ExponentVec rest(n);
  for (std::size_t m = 0; m < total; ++m) {
    // a face needs every subset to be one; checking the strict subsets with
    // one bit removed is enough because of the scan order
    bool parents_ok = true;
    for (std::size_t b = 0; b < bits.size() && parents_ok; ++b)
      if ((m >> b) & 1u)
        if (!is_face[m & ~(std::size_t{1} << b)]) parents_ok = false;
    if (!parents_ok) continue;

    rest = a;
    for (std::size_t b = 0; b < bits.size(); ++b)
      if ((m >> b) & 1u) rest(bits[b]) -= 1;
    if (!contains(I, rest)) continue;

    is_face[m] = 1;
    SimplicialComplex::Face f = 0;
    for (std::size_t b = 0; b < bits.size(); ++b)
      if ((m >> b) & 1u) f |= SimplicialComplex::Face{1} << bits[b];
    faces.push_back(f);
  }
  return faces;
}

}  // namespace

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const ExponentVec& a) {
  if (I.is_zero()) throw std::invalid_argument("upper_koszul_complex: zero ideal");
  if (a.size() != I.context()->count())
    throw std::invalid_argument("upper_koszul_complex: degree length mismatch");
  if (!lattice_contains(I, a))
    throw std::invalid_argument("upper_koszul_complex: degree is not in the lcm lattice");
  return SimplicialComplex(I.context()->count(), koszul_faces(I, a));
}

void BettiTable::add(int i, const ExponentVec& degree, long count) { add(i, to_key(degree), count); }

void BettiTable::add(int i, const Multidegree& degree, long count) {
  if (count == 0) return;
  entries_[{i, degree}] += count;
}

std::map<std::pair<int, long>, long> BettiTable::coarse() const {
  std::map<std::pair<int, long>, long> out;
  for (const auto& [key, count] : entries_) {
    long degree = 0;
    for (const Exponent e : key.second) degree += e;
    out[{key.first, degree}] += count;
  }
  return out;
}

long BettiTable::coarse_entry(int i, long j) const {
  long total = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first != i) continue;
    long degree = 0;
    for (const Exponent e : key.second) degree += e;
    if (degree == j) total += count;
  }
  return total;
}

BettiTable BettiTable::to_quotient() const {
  if (convention_ == TableConvention::quotient) return *this;
  BettiTable out(TableConvention::quotient, ambient_, field_);
  out.add(0, Multidegree(static_cast<std::size_t>(ambient_), 0), 1);
  for (const auto& [key, count] : entries_) out.add(key.first + 1, key.second, count);
  return out;
}

BettiTable BettiTable::to_ideal() const {
  if (convention_ == TableConvention::ideal) return *this;
  BettiTable out(TableConvention::ideal, ambient_, field_);
  const Multidegree origin(static_cast<std::size_t>(ambient_), 0);
  for (const auto& [key, count] : entries_) {
    if (key.first == 0) {
      if (key.second != origin || count != 1)
        throw std::logic_error("BettiTable: malformed quotient table at homological degree 0");
      continue;
    }
    out.add(key.first - 1, key.second, count);
  }
  return out;
}

BettiTable betti_upper_koszul(const MonomialIdeal& I, const EngineOptions& opts) {
  if (I.is_zero()) throw std::invalid_argument("betti_upper_koszul: zero ideal");
  if (I.is_unit()) throw std::invalid_argument("betti_upper_koszul: unit ideal is out of model");
  const LcmLattice lattice = lcm_lattice(I, opts.lattice_cap);
  const int n = I.context()->count();

  std::vector<std::vector<long>> dims(lattice.size());
  parallel_for(lattice.size(), thread_count(opts, lattice.size()), [&](std::size_t k) {
    const SimplicialComplex complex(n, koszul_faces(I, lattice.elements[k]));
    dims[k] = reduced_homology_dims(complex, opts.field);
  });

  BettiTable table(TableConvention::ideal, n, opts.field);
  for (std::size_t k = 0; k < lattice.size(); ++k)
    for (std::size_t i = 0; i < dims[k].size(); ++i)
      table.add(static_cast<int>(i), lattice.elements[k], dims[k][i]);
  return table.to_quotient();
}

namespace {

template <class Field>
long strand_rank(const Field& F, const std::vector<std::uint32_t>& cols,
                 const std::vector<std::uint32_t>& rows, const std::vector<int>& strand_of,
                 int strand) {
  if (cols.empty() || rows.empty()) return 0;
  std::unordered_map<std::uint32_t, int> row_index;
  row_index.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = static_cast<int>(r);

  FieldMatrix<Field> M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  M.setConstant(F.zero());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::uint32_t sigma = cols[c];
    int position = 0;
    for (int b = 0; b < 32; ++b) {
      if (!((sigma >> b) & 1u)) continue;
      const std::uint32_t tau = sigma & ~(std::uint32_t{1} << b);
      if (strand_of[tau] == strand) {
        const auto it = row_index.find(tau);
        if (it != row_index.end())
          M(it->second, static_cast<Eigen::Index>(c)) = (position % 2 == 0) ? F.one() : F.neg(F.one());
      }
      ++position;
    }
  }
  return rank_in_place(F, M);
}

template <class Field>
BettiTable taylor_impl(const Field& F, const MonomialIdeal& I, const EngineOptions& opts) {
  const int m = I.num_gens();
  const int n = I.context()->count();
  const std::size_t total = std::size_t{1} << m;

  // lcm of every generator subset, walked by lowest set bit
  std::vector<ExponentVec> lcms(total);
  lcms[0] = ExponentVec::Zero(n);
  for (std::size_t s = 1; s < total; ++s) {
    const int low = std::countr_zero(s);
    lcms[s] = lcms[s & (s - 1)].max(I.gens()[static_cast<std::size_t>(low)].exponents());
  }

  std::unordered_map<std::vector<Exponent>, int, VecHash> strand_ids;
  std::vector<int> strand_of(total);
  std::vector<ExponentVec> strand_degree;
  for (std::size_t s = 0; s < total; ++s) {
    auto key = to_key(lcms[s]);
    auto [it, inserted] = strand_ids.try_emplace(std::move(key), static_cast<int>(strand_degree.size()));
    if (inserted) strand_degree.push_back(lcms[s]);
    strand_of[s] = it->second;
  }

  // subsets per strand, grouped by cardinality
  std::vector<std::vector<std::vector<std::uint32_t>>> members(
      strand_degree.size(), std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(m) + 1));
  for (std::size_t s = 0; s < total; ++s)
    members[static_cast<std::size_t>(strand_of[s])][static_cast<std::size_t>(std::popcount(s))]
        .push_back(static_cast<std::uint32_t>(s));

  BettiTable table(TableConvention::quotient, n, opts.field);
  std::vector<std::map<int, long>> strand_dims(strand_degree.size());
  parallel_for(strand_degree.size(), thread_count(opts, strand_degree.size()), [&](std::size_t id) {
    const auto& chain = members[id];
    std::vector<long> ranks(chain.size() + 1, 0);
    for (std::size_t i = 1; i < chain.size(); ++i)
      ranks[i] = strand_rank(F, chain[i], chain[i - 1], strand_of, static_cast<int>(id));
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const long h = static_cast<long>(chain[i].size()) - ranks[i] - ranks[i + 1];
      if (h != 0) strand_dims[id][static_cast<int>(i)] = h;
    }
  });
  for (std::size_t id = 0; id < strand_degree.size(); ++id)
    for (const auto& [i, h] : strand_dims[id]) table.add(i, strand_degree[id], h);
  return table;
}

}  // namespace

BettiTable betti_taylor_strand(const MonomialIdeal& I, const EngineOptions& opts) {
  if (I.is_zero()) throw std::invalid_argument("betti_taylor_strand: zero ideal");
  if (I.is_unit()) throw std::invalid_argument("betti_taylor_strand: unit ideal is out of model");
  if (I.num_gens() > opts.taylor_generator_cap)
    throw ResourceLimitError("betti_taylor_strand: generator count " + std::to_string(I.num_gens()) +
                             " exceeds the oracle cap of " + std::to_string(opts.taylor_generator_cap));
  if (opts.field.kind == FieldSpec::Kind::prime)
    return taylor_impl(PrimeField(opts.field.p), I, opts);
  return taylor_impl(RationalField{}, I, opts);
}

HomologicalInvariants invariants(const BettiTable& table) {
  if (table.convention() != TableConvention::quotient)
    throw std::invalid_argument("invariants: table must be in the S/I convention");
  HomologicalInvariants inv;
  for (const auto& [key, count] : table.multigraded()) {
    if (count == 0) continue;
    long degree = 0;
    for (const Exponent e : key.second) degree += e;
    inv.reg = std::max(inv.reg, degree - key.first);
    inv.pd = std::max(inv.pd, static_cast<long>(key.first));
  }
  inv.depth = table.ambient_vars() - inv.pd;
  return inv;
}

std::map<BettiTable::Multidegree, long> hilbert_numerator(const MonomialIdeal& I, int generator_cap) {
  if (I.num_gens() > generator_cap)
    throw ResourceLimitError("hilbert_numerator: generator count exceeds the cap");
  const int n = I.context()->count();
  const std::size_t total = std::size_t{1} << I.num_gens();

  std::vector<ExponentVec> lcms(total);
  lcms[0] = ExponentVec::Zero(n);
  std::map<BettiTable::Multidegree, long> coeffs;
  for (std::size_t s = 0; s < total; ++s) {
    if (s) {
      const int low = std::countr_zero(s);
      lcms[s] = lcms[s & (s - 1)].max(I.gens()[static_cast<std::size_t>(low)].exponents());
    }
    coeffs[to_key(lcms[s])] += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  return coeffs;
}

}  // namespace wedge
