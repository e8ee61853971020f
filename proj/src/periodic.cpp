#include "dualbraid/periodic.hpp"

#include <numeric>
#include <tuple>

namespace dualbraid {

std::string to_string(PeriodicClass::Kind kind) {
  switch (kind) {
    case PeriodicClass::Kind::delta: return "delta";
    case PeriodicClass::Kind::epsilon: return "epsilon";
    case PeriodicClass::Kind::central: return "central";
    case PeriodicClass::Kind::non_periodic: return "non-periodic";
  }
  return "?";
}

std::string to_string(CharacterizationError::Claim claim) {
  using C = CharacterizationError::Claim;
  switch (claim) {
    case C::not_one_pure: return "not-1-pure";
    case C::shape: return "inf/len";
    case C::not_epsilon: return "d=1 but not epsilon";
    case C::first_block: return "claim 1";
    case C::support: return "support";
    case C::condition_product: return "condition (2)";
  }
  return "?";
}

PeriodicClass classify_periodic(const NormalForm& x) {
  const int n = x.strands();
  const long e = x.exponent_sum();
  if (e % (n - 1) == 0) {
    const long m = e / (n - 1);
    if (power(x, n) == NormalForm::delta_power(n, m * n))
      return {m % n == 0 ? PeriodicClass::Kind::central : PeriodicClass::Kind::delta, m};
  }
  if (e % n == 0) {
    const long m = e / n;
    if (power(x, n - 1) == NormalForm::delta_power(n, m * n)) {
      if (m % (n - 1) == 0) return {PeriodicClass::Kind::central, m / (n - 1) * n};
      return {PeriodicClass::Kind::epsilon, m};
    }
  }
  return {PeriodicClass::Kind::non_periodic, 0};
}

NormalForm epsilon_power(int n, long k) { return power(normalize(epsilon_word(n)), k); }

ExponentReduction reduce_exponent(long k, int n) {
  if (k == 0) throw std::invalid_argument("reduce_exponent: k must be nonzero");
  if (n < 2) throw std::invalid_argument("reduce_exponent: n must be at least 2");
  const long big = n - 1;
  // extended Euclid on (big, k): big*s + k*t = g
  long r0 = big, r1 = k, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long quot = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - quot * s1);
    std::tie(t0, t1) = std::make_tuple(t1, t0 - quot * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  const long d = r0;
  const long q_step = big / d;
  const long p_step = k / d;
  // q = t0 + j q_step, p = s0 - j p_step
  const long j0 = -t0 / q_step;
  ExponentReduction best{d, s0 - j0 * p_step, t0 + j0 * q_step};
  auto better = [](const ExponentReduction& a, const ExponentReduction& b) {
    const auto key = [](const ExponentReduction& e) {
      return std::make_tuple(std::labs(e.q), std::labs(e.p), e.q < 0);
    };
    return key(a) < key(b);
  };
  for (long j = j0 - 2; j <= j0 + 2; ++j) {
    const ExponentReduction cand{d, s0 - j * p_step, t0 + j * q_step};
    if (better(cand, best)) best = cand;
  }
  return best;
}

NormalForm transport(const NormalForm& x, long p, long q) {
  return multiply(NormalForm::delta_power(x.strands(), static_cast<long>(x.strands()) * p),
                  power(x, q));
}

std::pair<long, NormalForm> purify(const NormalForm& x) {
  const auto fixed = x.permutation().fixed_points();
  if (fixed.size() != 1)
    throw CharacterizationError(CharacterizationError::Claim::not_one_pure,
                                "induced permutation has " + std::to_string(fixed.size()) +
                                    " fixed points, expected exactly one");
  const int n = x.strands();
  // the fixed point of tau^u(x) is f + u
  const long u = ((1 - fixed.front()) % n + n) % n;
  return {u, tau_nf(x, u)};
}

Simple Decomposition::simple() const {
  Simple a = Simple::generator(d + 1, 1, n);
  for (const auto& bk : b) {
    auto next = simple_product(a, bk);
    if (!next) throw std::logic_error("decomposition does not multiply to a simple element");
    a = *next;
  }
  return a;
}

NormalForm Decomposition::element() const { return NormalForm::from_factors(n, d, {simple()}); }

namespace {

std::vector<int> range_desc(int hi, int lo) {
  std::vector<int> v;
  for (int i = hi; i >= lo; --i) v.push_back(i);
  return v;
}

void check_divisor(int n, int d, const char* who) {
  if (d < 1 || (n - 1) % d != 0 || (n - 1) / d < 2)
    throw std::invalid_argument(std::string(who) + ": need n = rd + 1 with d >= 1, r >= 2 (n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

}  // namespace

Decomposition characterize(const NormalForm& x, int d) {
  using C = CharacterizationError::Claim;
  const int n = x.strands();
  check_divisor(n, d, "characterize");
  const int r = (n - 1) / d;
  if (x.permutation().apply(1) != 1)
    throw CharacterizationError(C::not_one_pure, "element is not 1-pure");

  Decomposition dec{n, d, r, std::vector<Simple>(r, Simple::identity(n))};
  if (d == 1) {
    if (x != epsilon_power(n, 1))
      throw CharacterizationError(C::not_epsilon, "d = 1 but the element is not epsilon");
    return dec;
  }
  if (x.infimum() != d || x.canonical_length() != 1)
    throw CharacterizationError(C::shape, "expected inf " + std::to_string(d) +
                                              " and canonical length 1, got " + x.to_string());
  const Simple& a = x.factors().front();
  if (a.image(1) != d + 1)
    throw CharacterizationError(C::first_block, "the block of 1 in " + a.to_string() +
                                                    " does not end at " + std::to_string(d + 1));
  const Simple rest = left_quotient_unchecked(Simple::generator(d + 1, 1, n), a);

  std::vector<std::vector<std::vector<int>>> parts(r);
  for (const auto& block : rest.blocks()) {
    if (block.size() < 2) continue;
    const int lo = block.back(), hi = block.front();
    const int k = (lo - 2) / d;
    if (lo < 2 || hi > k * d + d + 1)
      throw CharacterizationError(C::support, "block " + Simple::subsimple(block, n).to_string() +
                                                  " is not contained in a single S_k");
    parts[k].push_back(block);
  }
  for (int k = 0; k < r; ++k) {
    std::vector<std::vector<int>> blocks = parts[k];
    std::vector<char> used(n + 1, 0);
    for (const auto& bl : blocks)
      for (int v : bl) used[v] = 1;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) blocks.push_back({v});
    dec.b[k] = Simple::from_blocks(blocks, n);
  }

  Simple chain = dec.b[0];
  for (int k = 1; k < r; ++k) {
    auto next = simple_product(chain, tau(dec.b[k], -static_cast<long>(k) * d));
    if (!next)
      throw CharacterizationError(C::condition_product,
                                  "partial product b_0 tau^-d(b_1)... is not simple at k=" +
                                      std::to_string(k));
    chain = *next;
  }
  const Simple expected = Simple::subsimple(range_desc(d + 1, 2), n);
  if (chain != expected)
    throw CharacterizationError(C::condition_product, "b_0 tau^-d(b_1)... = " + chain.to_string() +
                                                          ", expected " + expected.to_string());
  return dec;
}

Simple conjugator_from_decomposition(const Decomposition& dec) {
  const int n = dec.n;
  Simple c = Simple::identity(n);
  for (int k = 1; k < dec.r; ++k) {
    Simple tail = Simple::identity(n);
    for (int j = k; j < dec.r; ++j) {
      auto next = simple_product(tail, dec.b[j]);
      if (!next) throw std::logic_error("b_k factors do not have disjoint supports");
      tail = *next;
    }
    auto next = simple_product(c, tau(tail, -static_cast<long>(k) * dec.d));
    if (!next) throw std::logic_error("conjugator is not a simple element");
    c = *next;
  }
  if (conjugate(dec.element(), c) != epsilon_power(n, dec.d))
    throw std::logic_error("conjugator " + c.to_string() + " does not conjugate to epsilon^" +
                           std::to_string(dec.d));
  return c;
}

namespace {

CspOutcome refuse(std::string reason) { return {std::nullopt, std::move(reason)}; }

CspOutcome certify(const NormalForm& x, const NormalForm& target, const NormalForm& gamma,
                   long k, std::string kind) {
  ConjugacyCertificate cert;
  cert.n = x.strands();
  cert.k = k;
  cert.target = std::move(kind);
  cert.gamma = gamma;
  cert.verified = conjugate(x, gamma) == target;
  return {cert, {}};
}

}  // namespace

CspOutcome solve_csp(const NormalForm& x, long k) {
  const int n = x.strands();
  const NormalForm target = epsilon_power(n, k);
  const bool central = k % (n - 1) == 0;
  if (central) {
    if (x != target) return refuse("epsilon^" + std::to_string(k) + " is central and x differs from it");
    return certify(x, target, NormalForm::identity(n), k, "central");
  }
  const PeriodicClass cls = classify_periodic(x);
  if (cls.kind == PeriodicClass::Kind::non_periodic) return refuse("x is not periodic");
  if (cls.kind != PeriodicClass::Kind::epsilon || cls.m != k)
    return refuse("x is periodic of type " + to_string(cls.kind) + " " + std::to_string(cls.m) +
                  "; exponent sum " + std::to_string(x.exponent_sum()) + " differs from " +
                  std::to_string(k * n));

  const ExponentReduction red = reduce_exponent(k, n);
  const NormalForm moved = transport(x, red.p, red.q);
  auto [rep, trace] = sss_representative(moved);
  if (rep.infimum() != red.d || rep.canonical_length() != 1)
    return refuse("super summit representative " + rep.to_string() +
                  " does not have the shape of epsilon^" + std::to_string(red.d));
  try {
    const auto [u, pure] = purify(rep);
    const Decomposition dec = characterize(pure, static_cast<int>(red.d));
    const Simple c = conjugator_from_decomposition(dec);
    NormalForm gamma = multiply(trace.product, NormalForm::delta_power(n, u));
    gamma.right_multiply(c);
    return certify(x, target, gamma, k, "epsilon");
  } catch (const CharacterizationError& e) {
    return refuse(std::string("characterization failed (") + to_string(e.claim()) + "): " + e.what());
  }
}

CspOutcome solve_csp_delta(const NormalForm& x, long m) {
  const int n = x.strands();
  const NormalForm target = NormalForm::delta_power(n, m);
  const PeriodicClass cls = classify_periodic(x);
  const bool ok = (cls.kind == PeriodicClass::Kind::delta || cls.kind == PeriodicClass::Kind::central) &&
                  cls.m == m;
  if (!ok)
    return refuse("x is " + to_string(cls.kind) + (cls.kind == PeriodicClass::Kind::non_periodic
                                                       ? std::string()
                                                       : " " + std::to_string(cls.m)) +
                  ", not conjugate to delta^" + std::to_string(m));
  auto [rep, trace] = sss_representative(x);
  if (rep != target)
    return refuse("super summit representative " + rep.to_string() + " is not delta^" +
                  std::to_string(m));
  return certify(x, target, trace.product, m, m % n == 0 ? "central" : "delta");
}

NormalForm stable_map_f(const NormalForm& x, long k, long d) {
  if (d == 0 || k % d != 0) throw std::invalid_argument("stable_map_f: d must divide k");
  return power(x, k / d);
}

NormalForm stable_map_g(const NormalForm& x, int n, long p, long q) {
  if (n != x.strands()) throw std::invalid_argument("stable_map_g: strand count mismatch");
  return transport(x, p, q);
}

bool is_stable_sss(const NormalForm& x, int d) {
  const int n = x.strands();
  if (d == 0) throw std::invalid_argument("is_stable_sss: d must be nonzero");
  const PeriodicClass cls = classify_periodic(x);
  const bool conj = (cls.kind == PeriodicClass::Kind::epsilon && cls.m == d) ||
                    (cls.kind == PeriodicClass::Kind::central && d % (n - 1) == 0 &&
                     cls.m == static_cast<long>(d) / (n - 1) * n);
  if (!conj) throw std::invalid_argument("is_stable_sss: x is not conjugate to epsilon^d");
  // x^{(n-1)/g} is a power of delta^n, so powers 1..(n-1)/g cover every power.
  const int g = std::gcd(d, n - 1);
  NormalForm xm = NormalForm::identity(n);
  for (int m = 1; m <= (n - 1) / g; ++m) {
    xm = multiply(xm, x);
    const NormalForm rep = sss_representative(epsilon_power(n, static_cast<long>(d) * m)).first;
    if (xm.infimum() != rep.infimum() || xm.supremum() != rep.supremum()) return false;
  }
  return true;
}

std::vector<std::vector<int>> round_reduction_blocks(int n, int d) {
  if (d < 2 || n < 3 || (n - 1) % d != 0)
    throw std::invalid_argument("round_reduction_blocks: need d >= 2 dividing n-1");
  std::vector<std::vector<int>> out;
  for (int k = 0; k < (n - 1) / d; ++k) {
    std::vector<int> s;
    for (int i = 2; i <= d + 1; ++i) s.push_back(k * d + i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace dualbraid
