#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace oracle {

using poz::FusionSpec;
using poz::Integer;
using poz::Polynomial;
using poz::Rational;
using poz::Variable;

namespace {

// Dense sparse polynomial: exponent vector -> coefficient.
using Dense = std::map<std::vector<std::uint32_t>, Rational>;

Dense multiply(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

struct Layout {
  // Positions [0, offsets) are offsets, the rest are everything else.
  std::size_t offsets = 0;
  std::vector<Variable> others;
  std::map<Variable, Dense> images;
  std::size_t width() const { return offsets + others.size(); }
};

Layout layout_for(const Polynomial& p, std::span<const FusionSpec> specs) {
  Layout l;
  std::vector<Variable> inputs;
  for (const auto& spec : specs) {
    l.offsets += spec.inputs.size() - 1;
    inputs.insert(inputs.end(), spec.inputs.begin(), spec.inputs.end());
    l.others.push_back(spec.output);
  }
  for (auto v : p.registry())
    if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) l.others.push_back(v);
  std::sort(l.others.begin(), l.others.end());
  l.others.erase(std::unique(l.others.begin(), l.others.end()), l.others.end());

  auto position = [&](Variable v) {
    return l.offsets + (std::find(l.others.begin(), l.others.end(), v) - l.others.begin());
  };
  std::size_t next = 0;
  for (const auto& spec : specs) {
    std::vector<std::uint32_t> center(l.width(), 0);
    center[position(spec.output)] = 1;
    Dense last;
    last[center] = 1;
    const auto a = spec.inputs.size();
    for (std::size_t i = 0; i + 1 < a; ++i) {
      std::vector<std::uint32_t> xi(l.width(), 0);
      xi[next] = 1;
      Dense image;
      image[center] = 1;
      image[xi] = 1;
      l.images[spec.inputs[i]] = image;
      last[xi] = -Rational(spec.inputs[i].weight()) / Rational(spec.inputs.back().weight());
      ++next;
    }
    l.images[spec.inputs.back()] = last;
  }
  return l;
}

double binom(double n, double k) {
  double r = 1;
  for (double i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double estimate(const Polynomial& p, const Layout& l) {
  double total = 0;
  for (const auto& t : p.terms()) {
    double products = 1;
    for (const auto& [v, e] : t.monomial.entries()) {
      auto it = l.images.find(v);
      if (it == l.images.end()) continue;
      const double r = static_cast<double>(it->second.size());
      products *= binom(e + r - 1, r - 1) * r;
    }
    total += products;
  }
  return total;
}

std::optional<std::uint32_t> exact_lowest(const Polynomial& p, const Layout& l) {
  Dense sum;
  std::map<std::pair<Variable, std::uint32_t>, Dense> powers;
  auto power = [&](Variable v, std::uint32_t e) -> const Dense& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Dense r;
    r[std::vector<std::uint32_t>(l.width(), 0)] = 1;
    for (std::uint32_t i = 0; i < e; ++i) r = multiply(r, l.images.at(v));
    return powers.emplace(key, std::move(r)).first->second;
  };
  for (const auto& t : p.terms()) {
    Dense term;
    std::vector<std::uint32_t> base(l.width(), 0);
    for (const auto& [v, e] : t.monomial.entries()) {
      if (l.images.count(v)) continue;
      base[l.offsets + (std::find(l.others.begin(), l.others.end(), v) - l.others.begin())] = e;
    }
    term[base] = t.coeff;
    for (const auto& [v, e] : t.monomial.entries())
      if (l.images.count(v)) term = multiply(term, power(v, e));
    for (auto& [e, c] : term) {
      auto& slot = sum[e];
      slot += c;
      if (slot == 0) sum.erase(e);
    }
  }
  std::optional<std::uint32_t> best;
  for (const auto& [e, c] : sum) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < l.offsets; ++i) d += e[i];
    if (!best || d < *best) best = d;
  }
  return best;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kP = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kP) + static_cast<std::uint64_t>(x >> 61);
  return r >= kP ? r - kP : r;
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}
std::uint64_t reduce(const Integer& z) {
  Integer r = z % Integer(static_cast<unsigned long>(kP));
  if (r < 0) r += static_cast<unsigned long>(kP);
  return r.get_ui();
}
std::uint64_t reduce(const Rational& q) {
  return mulmod(reduce(q.get_num()), powmod(reduce(q.get_den()), kP - 2));
}

using Line = std::vector<std::uint64_t>;  // coefficients in lambda

Line line_product(const Line& a, const Line& b) {
  Line out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j]));
  return out;
}

std::optional<std::uint32_t> line_lowest(const Polynomial& p, std::span<const FusionSpec> specs,
                                         std::mt19937_64& rng) {
  auto draw = [&] { return rng() % (kP - 1) + 1; };
  // Each input becomes A + lambda * B.
  std::map<Variable, std::pair<std::uint64_t, std::uint64_t>> affine;
  std::map<Variable, std::uint64_t> fixed;
  for (const auto& spec : specs) {
    const std::uint64_t center = draw();
    fixed[spec.output] = center;
    std::uint64_t last = 0;
    const std::uint64_t inv = powmod(spec.inputs.back().weight() % kP, kP - 2);
    for (std::size_t i = 0; i + 1 < spec.inputs.size(); ++i) {
      const std::uint64_t dir = draw();
      affine[spec.inputs[i]] = {center, dir};
      last = addmod(last, mulmod(mulmod(spec.inputs[i].weight() % kP, inv), dir));
    }
    affine[spec.inputs.back()] = {center, last ? kP - last : 0};
  }
  Line sum(1, 0);
  std::map<std::pair<Variable, std::uint32_t>, Line> powers;
  for (const auto& t : p.terms()) {
    Line term{reduce(t.coeff)};
    for (const auto& [v, e] : t.monomial.entries()) {
      auto it = affine.find(v);
      if (it == affine.end()) {
        auto [f, inserted] = fixed.try_emplace(v, 0);
        if (inserted) f->second = draw();
        const std::uint64_t factor = powmod(f->second, e);
        for (auto& c : term) c = mulmod(c, factor);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pw = powers.find(key);
      if (pw == powers.end()) {
        Line r{1};
        const Line base{it->second.first, it->second.second};
        for (std::uint32_t i = 0; i < e; ++i) r = line_product(r, base);
        pw = powers.emplace(key, std::move(r)).first;
      }
      term = line_product(term, pw->second);
    }
    if (sum.size() < term.size()) sum.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] = addmod(sum[i], term[i]);
  }
  for (std::size_t i = 0; i < sum.size(); ++i)
    if (sum[i]) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

} // namespace

LowestDegree lowest_offset_degree(const Polynomial& p, std::span<const FusionSpec> specs,
                                  double exact_limit, std::uint64_t seed) {
  const Layout l = layout_for(p, specs);
  if (estimate(p, l) <= exact_limit) return {exact_lowest(p, l), Method::exact};
  // A random line can only overestimate the order, so keep the minimum.
  std::mt19937_64 rng(seed);
  std::optional<std::uint32_t> best;
  for (int round = 0; round < 3; ++round) {
    auto s = line_lowest(p, specs, rng);
    if (s && (!best || *s < *best)) best = s;
  }
  return {best, Method::random_line};
}

std::uint32_t min_degree_scan(const Polynomial& p, const std::vector<Variable>& vars) {
  std::uint32_t best = ~0u;
  for (const auto& t : p.terms()) {
    std::uint32_t d = 0;
    for (auto v : vars) d += t.monomial.exponent(v);
    best = std::min(best, d);
  }
  return best;
}

std::vector<std::pair<std::vector<std::uint32_t>, Integer>> laughlin_dense(std::uint32_t N, std::uint32_t m) {
  std::map<std::vector<std::uint32_t>, Integer> acc{{std::vector<std::uint32_t>(N, 0), Integer(1)}};
  for (std::uint32_t i = 0; i < N; ++i)
    for (std::uint32_t j = i + 1; j < N; ++j)
      for (std::uint32_t r = 0; r < m; ++r) {
        std::map<std::vector<std::uint32_t>, Integer> next;
        for (const auto& [e, c] : acc) {
          auto up = e;
          ++up[i];
          next[up] += c;
          auto down = e;
          ++down[j];
          next[down] -= c;
        }
        acc.clear();
        for (auto& [e, c] : next)
          if (c != 0) acc.emplace(e, std::move(c));
      }
  return {acc.begin(), acc.end()};
}

std::vector<std::pair<std::vector<std::uint32_t>, Integer>> dense_terms(const Polynomial& p, std::uint32_t N) {
  std::map<std::vector<std::uint32_t>, Integer> acc;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(N, 0);
    for (std::uint32_t i = 0; i < N; ++i) e[i] = t.monomial.exponent(poz::z(i + 1));
    acc[e] = t.coeff.get_num();
    if (t.coeff.get_den() != 1) acc[e] = 0;  // forces a mismatch
  }
  return {acc.begin(), acc.end()};
}

std::uint32_t subset_min_degree(const std::vector<std::pair<std::vector<std::uint32_t>, Integer>>& terms,
                                std::uint32_t N, std::uint32_t a) {
  std::uint32_t best = ~0u;
  std::vector<bool> mask(N, false);
  std::fill(mask.begin(), mask.begin() + a, true);
  do {
    for (const auto& [e, c] : terms) {
      std::uint32_t d = 0;
      for (std::uint32_t i = 0; i < N; ++i)
        if (mask[i]) d += e[i];
      best = std::min(best, d);
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

} // namespace oracle
