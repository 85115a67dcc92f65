#include "meadow/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace meadow {

// ---------------------------------------------------------------------------
// Algebras

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels, std::vector<Operation> ops)
    : labels_(std::move(labels)), ops_(std::move(ops)) {
  const std::size_t n = labels_.size();
  for (const auto& op : ops_) {
    std::size_t expect = 1;
    for (unsigned i = 0; i < op.arity; ++i) expect *= n;
    if (op.table.size() != expect) throw std::invalid_argument("operation table '" + op.name + "' has the wrong size");
    for (auto v : op.table) {
      if (v >= n) throw std::invalid_argument("operation table '" + op.name + "' leaves the carrier");
    }
  }
}

FiniteAlgebra FiniteAlgebra::from_meadow(const Meadow& m, const Interpretation& interp, const Signature& sig) {
  const auto n = m.size();
  if (n > kAlgebraCap) {
    throw CapacityError(m.descriptor() + " has " + std::to_string(n) + " elements; tables are limited to " +
                        std::to_string(kAlgebraCap));
  }
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(m.format(m.element(i)));
  std::vector<Operation> ops;
  auto unary = [&](std::string name, auto f) {
    Operation op{std::move(name), 1, {}};
    for (std::uint64_t a = 0; a < n; ++a) op.table.push_back(static_cast<std::uint32_t>(f(a)));
    ops.push_back(std::move(op));
  };
  auto binary = [&](std::string name, auto f) {
    Operation op{std::move(name), 2, {}};
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) op.table.push_back(static_cast<std::uint32_t>(f(a, b)));
    }
    ops.push_back(std::move(op));
  };
  binary("+", [&](auto a, auto b) { return m.add_index(a, b); });
  unary("-", [&](auto a) { return m.neg_index(a); });
  binary("*", [&](auto a, auto b) { return m.mul_index(a, b); });
  unary("^-1", [&](auto a) { return m.inv_index(a); });

  for (const auto& [name, fn] : interp.functions) {
    auto it = sig.functions.find(name);
    if (it == sig.functions.end()) throw std::invalid_argument("function symbol '" + name + "' is not declared");
    const unsigned arity = it->second;
    if (arity > 3) throw std::invalid_argument("operations of arity above 3 are not tabulated");
    Operation op{name, arity, {}};
    std::size_t total = 1;
    for (unsigned i = 0; i < arity; ++i) total *= n;
    std::vector<Value> args(arity);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (unsigned j = arity; j-- > 0;) {
        args[j] = m.element(rest % n);
        rest /= n;
      }
      op.table.push_back(static_cast<std::uint32_t>(m.index_of(fn(args))));
    }
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(std::move(labels), std::move(ops));
}

std::uint32_t FiniteAlgebra::apply(const Operation& op, const std::vector<std::uint32_t>& args) const {
  std::size_t idx = 0;
  for (auto a : args) idx = idx * size() + a;
  return op.table[idx];
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& labels, std::size_t* count) {
  std::map<std::uint32_t, std::uint32_t> rename;
  std::vector<std::uint32_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = rename.emplace(labels[i], static_cast<std::uint32_t>(rename.size()));
    out[i] = it->second;
  }
  *count = rename.size();
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Merges the classes of a and b; returns false if they already coincide.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Closes a union-find under every operation, starting from pending pairs.
Congruence close(const FiniteAlgebra& alg, UnionFind& uf, std::vector<std::pair<std::uint32_t, std::uint32_t>> pending) {
  const auto n = static_cast<std::uint32_t>(alg.size());
  std::vector<std::uint32_t> args;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& op : alg.ops()) {
      // Vary one argument position between x and y, all others free.
      std::size_t others = 1;
      for (unsigned i = 1; i < op.arity; ++i) others *= n;
      args.assign(op.arity, 0);
      for (unsigned pos = 0; pos < op.arity; ++pos) {
        for (std::size_t k = 0; k < others; ++k) {
          std::size_t rest = k;
          for (unsigned j = op.arity; j-- > 0;) {
            if (j == pos) continue;
            args[j] = static_cast<std::uint32_t>(rest % n);
            rest /= n;
          }
          args[pos] = x;
          const auto fx = alg.apply(op, args);
          args[pos] = y;
          const auto fy = alg.apply(op, args);
          if (uf.unite(fx, fy)) pending.emplace_back(fx, fy);
        }
      }
    }
  }
  return Congruence(uf.labels());
}

}  // namespace

Congruence::Congruence(std::vector<std::uint32_t> block_of) { block_of_ = canonical(block_of, &num_blocks_); }

Congruence Congruence::diagonal(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Congruence(std::move(v));
}

Congruence Congruence::all(std::size_t n) { return Congruence(std::vector<std::uint32_t>(n, 0)); }

std::vector<std::vector<std::uint32_t>> Congruence::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(num_blocks_);
  for (std::uint32_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  // Each block here must sit inside a single block of other.
  std::vector<std::int64_t> image(num_blocks_, -1);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    auto& slot = image[block_of_[i]];
    if (slot < 0) {
      slot = other.block_of_[i];
    } else if (slot != other.block_of_[i]) {
      return false;
    }
  }
  return true;
}

std::string Congruence::str(const std::vector<std::string>& labels) const {
  std::string out = "{";
  const auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += ",";
    out += "{";
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) out += ",";
      out += labels.at(bs[b][i]);
    }
    out += "}";
  }
  return out + "}";
}

bool operator<(const Congruence& a, const Congruence& b) {
  if (a.num_blocks_ != b.num_blocks_) return a.num_blocks_ > b.num_blocks_;
  return a.block_of_ < b.block_of_;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet of partitions of different sets");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> v(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    auto [it, _] = ids.emplace(std::make_pair(a.block(i), b.block(i)), static_cast<std::uint32_t>(ids.size()));
    v[i] = it->second;
  }
  return Congruence(std::move(v));
}

Congruence join(const FiniteAlgebra& alg, const Congruence& a, const Congruence& b) {
  UnionFind uf(alg.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;
  for (const auto* c : {&a, &b}) {
    for (const auto& blk : c->blocks()) {
      for (std::size_t i = 1; i < blk.size(); ++i) {
        if (uf.unite(blk[0], blk[i])) pending.emplace_back(blk[0], blk[i]);
      }
    }
  }
  return close(alg, uf, std::move(pending));
}

bool is_compatible(const FiniteAlgebra& alg, const Congruence& c) {
  const auto n = static_cast<std::uint32_t>(alg.size());
  std::vector<std::uint32_t> args;
  for (const auto& op : alg.ops()) {
    std::size_t others = 1;
    for (unsigned i = 1; i < op.arity; ++i) others *= n;
    args.assign(op.arity, 0);
    for (unsigned pos = 0; pos < op.arity; ++pos) {
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = x + 1; y < n; ++y) {
          if (!c.related(x, y)) continue;
          for (std::size_t k = 0; k < others; ++k) {
            std::size_t rest = k;
            for (unsigned j = op.arity; j-- > 0;) {
              if (j == pos) continue;
              args[j] = static_cast<std::uint32_t>(rest % n);
              rest /= n;
            }
            args[pos] = x;
            const auto fx = alg.apply(op, args);
            args[pos] = y;
            if (!c.related(fx, alg.apply(op, args))) return false;
          }
        }
      }
    }
  }
  return true;
}

Congruence principal_congruence(const FiniteAlgebra& alg, std::uint32_t a, std::uint32_t b) {
  if (a >= alg.size() || b >= alg.size()) throw std::out_of_range("element index outside the carrier");
  UnionFind uf(alg.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;
  if (uf.unite(a, b)) pending.emplace_back(a, b);
  return close(alg, uf, std::move(pending));
}

Congruence principal_congruence(const Meadow& m, const Value& a, const Value& b) {
  const auto alg = FiniteAlgebra::from_meadow(m);
  return principal_congruence(alg, static_cast<std::uint32_t>(m.index_of(a)), static_cast<std::uint32_t>(m.index_of(b)));
}

std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, unsigned workers, std::size_t cap) {
  const std::size_t n = alg.size();
  if (n > cap) {
    throw CapacityError("congruence lattice of a " + std::to_string(n) + "-element algebra exceeds the cap of " +
                        std::to_string(cap));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::optional<Congruence>> principals(pairs.size());
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(pairs.size())));
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < pairs.size(); i += w) principals[i] = principal_congruence(alg, pairs[i].first, pairs[i].second);
  };
  if (w <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }

  std::set<Congruence> lattice{Congruence::diagonal(n)};
  std::vector<Congruence> gens;
  for (auto& p : principals) {
    if (lattice.insert(*p).second) gens.push_back(*p);
  }
  // Every congruence of a finite algebra is a join of principal ones.
  std::vector<Congruence> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier) {
      for (const auto& g : gens) {
        if (g.refines(c)) continue;
        Congruence j = join(alg, c, g);
        if (lattice.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

bool is_simple(const FiniteAlgebra& alg, unsigned workers) {
  return alg.size() >= 2 && all_congruences(alg, workers, std::max(kCongruenceCap, alg.size())).size() == 2;
}

SubdirectIrreducibility subdirectly_irreducible(const FiniteAlgebra& alg, unsigned workers) {
  SubdirectIrreducibility out;
  if (alg.size() < 2) return out;
  const auto lattice = all_congruences(alg, workers, std::max(kCongruenceCap, alg.size()));
  std::optional<Congruence> acc;
  for (const auto& c : lattice) {
    if (c.is_diagonal()) continue;
    acc = acc ? meet(*acc, c) : c;
  }
  if (acc && !acc->is_diagonal()) {
    out.irreducible = true;
    out.monolith = acc;
  }
  return out;
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Congruence& c) {
  if (!is_compatible(alg, c)) throw std::invalid_argument("quotient by a relation that is not a congruence");
  const auto blocks = c.blocks();
  std::vector<std::string> labels;
  for (const auto& b : blocks) labels.push_back(alg.labels()[b.front()]);
  const std::size_t k = blocks.size();
  std::vector<Operation> ops;
  for (const auto& op : alg.ops()) {
    Operation q{op.name, op.arity, {}};
    std::size_t total = 1;
    for (unsigned i = 0; i < op.arity; ++i) total *= k;
    std::vector<std::uint32_t> args(op.arity);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (unsigned j = op.arity; j-- > 0;) {
        args[j] = blocks[rest % k].front();
        rest /= k;
      }
      q.table.push_back(c.block(alg.apply(op, args)));
    }
    ops.push_back(std::move(q));
  }
  return FiniteAlgebra(std::move(labels), std::move(ops));
}

SubdirectDecomposition subdirect_decompose(const FiniteAlgebra& alg, unsigned workers) {
  const std::size_t n = alg.size();
  const auto lattice = all_congruences(alg, workers, std::max(kCongruenceCap, n));

  // For each pair a != b, a congruence maximal among those separating a and
  // b; such a congruence is completely meet-irreducible, so its quotient is
  // subdirectly irreducible.
  std::vector<Congruence> chosen;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      bool covered = false;
      for (const auto& c : chosen) covered = covered || !c.related(a, b);
      if (covered) continue;
      const Congruence* best = nullptr;
      for (const auto& c : lattice) {
        if (c.related(a, b)) continue;
        if (!best || c.num_blocks() < best->num_blocks()) best = &c;
      }
      // Fewest blocks among separating congruences is maximal among them.
      if (best && std::find(chosen.begin(), chosen.end(), *best) == chosen.end()) chosen.push_back(*best);
    }
  }
  // Drop kernels the others already make redundant.
  for (std::size_t i = chosen.size(); i-- > 0;) {
    Congruence acc = Congruence::all(n);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      if (j != i) acc = meet(acc, chosen[j]);
    }
    if (chosen.size() > 1 && acc.is_diagonal()) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(chosen.begin(), chosen.end(), [](const Congruence& x, const Congruence& y) {
    if (x.num_blocks() != y.num_blocks()) return x.num_blocks() < y.num_blocks();
    return x.block_of() < y.block_of();
  });

  SubdirectDecomposition out;
  if (n < 2) {
    out.factors.push_back({Congruence::diagonal(n), alg});
    chosen.assign(1, Congruence::diagonal(n));
  } else {
    for (const auto& c : chosen) out.factors.push_back({c, quotient(alg, c)});
  }

  Congruence acc = Congruence::all(n);
  for (const auto& c : chosen) acc = meet(acc, c);
  out.kernels_meet_to_diagonal = acc.is_diagonal();

  out.embedding.assign(n, {});
  for (std::uint32_t x = 0; x < n; ++x) {
    for (const auto& f : out.factors) out.embedding[x].push_back(f.kernel.block(x));
  }
  out.injective = std::set<std::vector<std::uint32_t>>(out.embedding.begin(), out.embedding.end()).size() == n;

  out.homomorphism = true;
  for (std::size_t i = 0; i < out.factors.size() && out.homomorphism; ++i) {
    const auto& f = out.factors[i];
    for (std::size_t o = 0; o < alg.ops().size() && out.homomorphism; ++o) {
      const auto& op = alg.ops()[o];
      std::size_t total = 1;
      for (unsigned j = 0; j < op.arity; ++j) total *= n;
      std::vector<std::uint32_t> args(op.arity), images(op.arity);
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (unsigned j = op.arity; j-- > 0;) {
          args[j] = static_cast<std::uint32_t>(rest % n);
          images[j] = out.embedding[args[j]][i];
          rest /= n;
        }
        if (out.embedding[alg.apply(op, args)][i] != f.algebra.apply(f.algebra.ops()[o], images)) {
          out.homomorphism = false;
          break;
        }
      }
    }
  }

  out.projections_surjective = true;
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    std::set<std::uint32_t> hit;
    for (const auto& e : out.embedding) hit.insert(e[i]);
    out.projections_surjective = out.projections_surjective && hit.size() == out.factors[i].algebra.size();
  }

  out.factors_irreducible = n >= 2;
  for (const auto& f : out.factors) {
    out.factors_irreducible = out.factors_irreducible && subdirectly_irreducible(f.algebra, workers).irreducible;
  }
  return out;
}

}  // namespace meadow
