#include "dualbraid/normal_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualbraid {

NormalForm::NormalForm(int strands) : n_(strands) {
  if (strands < 1 || strands > kMaxStrands)
    throw std::invalid_argument("NormalForm: strand count out of range");
}

NormalForm NormalForm::delta_power(int n, long power) {
  NormalForm x(n);
  x.inf_ = power;
  return x;
}

NormalForm NormalForm::from_simple(const Simple& s) {
  NormalForm x(s.strands());
  x.right_multiply(s);
  return x;
}

NormalForm NormalForm::from_factors(int n, long inf, const std::vector<Simple>& factors) {
  NormalForm x = delta_power(n, inf);
  for (const auto& s : factors) x.right_multiply(s);
  return x;
}

void NormalForm::right_multiply(const Simple& s) {
  if (s.strands() != n_) throw std::invalid_argument("NormalForm: strand count mismatch");
  if (s.is_identity()) return;
  if (s.is_delta()) {
    right_multiply_delta(1);
    return;
  }
  factors_.push_back(s);
  for (std::size_t i = factors_.size() - 1; i-- > 0;) {
    const Simple t = meet(right_complement(factors_[i]), factors_[i + 1]);
    if (t.is_identity()) break;
    factors_[i] = compose_unchecked(factors_[i], t);
    factors_[i + 1] = left_quotient_unchecked(t, factors_[i + 1]);
  }
  std::size_t leading = 0;
  while (leading < factors_.size() && factors_[leading].is_delta()) ++leading;
  if (leading) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(leading));
    inf_ += static_cast<long>(leading);
  }
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalForm::right_multiply_delta(long k) {
  inf_ += k;
  if (k % n_ == 0) return;
  for (auto& f : factors_) f = tau(f, k);
}

bool NormalForm::is_valid() const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.strands() != n_ || f.is_identity() || f.is_delta()) return false;
    if (i + 1 < factors_.size() && !meet(right_complement(f), factors_[i + 1]).is_identity())
      return false;
  }
  return true;
}

long NormalForm::exponent_sum() const {
  long e = inf_ * (n_ - 1);
  for (const auto& f : factors_) e += f.exponent_sum();
  return e;
}

Permutation NormalForm::permutation() const {
  Permutation p = Permutation::delta(n_).power(inf_);
  for (const auto& f : factors_) p = p * f.permutation();
  return p;
}

BraidWord NormalForm::word() const {
  BraidWord w = delta_word(n_).power(inf_);
  for (const auto& f : factors_) w.append(f.word());
  return w;
}

std::string NormalForm::to_string() const {
  std::string out = "d^" + std::to_string(inf_);
  for (const auto& f : factors_) out += " · " + f.to_string();
  return out;
}

bool operator<(const NormalForm& x, const NormalForm& y) {
  if (x.n_ != y.n_) return x.n_ < y.n_;
  if (x.inf_ != y.inf_) return x.inf_ < y.inf_;
  return x.factors_ < y.factors_;
}

bool canonical_less(const NormalForm& x, const NormalForm& y) {
  if (x.strands() != y.strands()) return x.strands() < y.strands();
  if (x.infimum() != y.infimum()) return x.infimum() < y.infimum();
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  for (std::size_t i = 0; i < std::min(fx.size(), fy.size()); ++i) {
    if (fx[i] == fy[i]) continue;
    return fx[i].to_string() < fy[i].to_string();
  }
  return fx.size() < fy.size();
}

NormalForm normalize(const BraidWord& w) {
  NormalForm x(w.strands());
  for (const auto& g : w.letters()) {
    const Simple s = Simple::generator(g.upper, g.lower, w.strands());
    if (g.sign > 0) {
      x.right_multiply(s);
    } else {
      // s^-1 = delta^-1 tau^-1(right_complement(s))
      x.right_multiply_delta(-1);
      x.right_multiply(left_complement(s));
    }
  }
  return x;
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("multiply: strand count mismatch");
  NormalForm z = x;
  z.right_multiply_delta(y.infimum());
  for (const auto& f : y.factors()) z.right_multiply(f);
  return z;
}

NormalForm invert(const NormalForm& x) {
  NormalForm z(x.strands());
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    z.right_multiply_delta(-1);
    z.right_multiply(left_complement(*it));
  }
  z.right_multiply_delta(-x.infimum());
  return z;
}

NormalForm power(const NormalForm& x, long m) {
  NormalForm base = m < 0 ? invert(x) : x;
  unsigned long e = m < 0 ? 0UL - static_cast<unsigned long>(m) : static_cast<unsigned long>(m);
  NormalForm result(x.strands());
  while (e) {
    if (e & 1UL) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

NormalForm tau_nf(const NormalForm& x, long k) {
  std::vector<Simple> shifted;
  shifted.reserve(x.factors().size());
  for (const auto& f : x.factors()) shifted.push_back(tau(f, k));
  NormalForm z = NormalForm::delta_power(x.strands(), x.infimum());
  for (const auto& f : shifted) z.right_multiply(f);
  return z;
}

NormalForm conjugate(const NormalForm& x, const NormalForm& g) {
  return multiply(invert(g), multiply(x, g));
}

NormalForm conjugate(const NormalForm& x, const Simple& s) {
  NormalForm z = NormalForm::delta_power(x.strands(), -1);
  z.right_multiply(left_complement(s));
  z = multiply(z, x);
  z.right_multiply(s);
  return z;
}

Conjugation cycling(const NormalForm& x) {
  const int n = x.strands();
  if (x.canonical_length() == 0) return {x, NormalForm::identity(n)};
  const auto& f = x.factors();
  const Simple moved = tau(f.front(), -x.infimum());
  std::vector<Simple> rest(f.begin() + 1, f.end());
  rest.push_back(moved);
  return {NormalForm::from_factors(n, x.infimum(), rest), NormalForm::from_simple(moved)};
}

Conjugation decycling(const NormalForm& x) {
  const int n = x.strands();
  if (x.canonical_length() == 0) return {x, NormalForm::identity(n)};
  const auto& f = x.factors();
  std::vector<Simple> seq;
  seq.reserve(f.size());
  seq.push_back(tau(f.back(), x.infimum()));
  seq.insert(seq.end(), f.begin(), f.end() - 1);
  return {NormalForm::from_factors(n, x.infimum(), seq), invert(NormalForm::from_simple(f.back()))};
}

Conjugation partial_cycling(const NormalForm& x, const Simple& prefix) {
  if (x.canonical_length() == 0)
    throw std::invalid_argument("partial_cycling: canonical length is zero");
  const auto& f = x.factors();
  const auto rest = left_quotient(prefix, f.front());
  if (!rest) throw std::invalid_argument("partial_cycling: " + prefix.to_string() +
                                         " is not a prefix of " + f.front().to_string());
  const Simple moved = tau(prefix, -x.infimum());
  std::vector<Simple> seq{*rest};
  seq.insert(seq.end(), f.begin() + 1, f.end());
  seq.push_back(moved);
  return {NormalForm::from_factors(x.strands(), x.infimum(), seq), NormalForm::from_simple(moved)};
}

namespace {

// Applies `move` until the tracked bound improves (then starts over) or the
// orbit returns to an element already seen.
template <typename Move, typename Improved>
void iterate_to_extremum(NormalForm& cur, ConjugatorTrace& trace, long& steps, long cap, Move move,
                         Improved improved) {
  for (;;) {
    if (cur.canonical_length() == 0) return;
    std::set<NormalForm> seen{cur};
    const NormalForm start = cur;
    bool restart = false;
    for (;;) {
      if (++steps > cap)
        throw std::runtime_error("sss_representative: iteration cap " + std::to_string(cap) +
                                 " reached");
      Conjugation c = move(cur);
      trace.push(c.conjugator);
      cur = std::move(c.result);
      if (improved(start, cur)) {
        restart = true;
        break;
      }
      if (cur.canonical_length() == 0 || !seen.insert(cur).second) break;
    }
    if (!restart) return;
  }
}

}  // namespace

std::pair<NormalForm, ConjugatorTrace> sss_representative(const NormalForm& x, long cap) {
  NormalForm cur = x;
  ConjugatorTrace trace(x.strands());
  long steps = 0;
  iterate_to_extremum(cur, trace, steps, cap, cycling, [](const NormalForm& a, const NormalForm& b) {
    return b.infimum() > a.infimum();
  });
  iterate_to_extremum(cur, trace, steps, cap, decycling,
                      [](const NormalForm& a, const NormalForm& b) {
                        return b.supremum() < a.supremum();
                      });
  return {std::move(cur), std::move(trace)};
}

namespace {

std::vector<Simple> nontrivial_simples(int n, int bound) {
  if (n > bound)
    throw BoundExceeded("sss_brute_force: n=" + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  auto all = enumerate_simples(n, std::max(bound, n));
  std::erase_if(all, [](const Simple& s) { return s.is_identity(); });
  return all;
}

std::vector<NormalForm> sorted_output(const std::set<NormalForm>& found) {
  std::vector<NormalForm> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<NormalForm> sss_brute_force_serial(const NormalForm& x, int bound) {
  const auto simples = nontrivial_simples(x.strands(), bound);
  const NormalForm rep = sss_representative(x).first;
  std::set<NormalForm> found{rep};
  std::vector<NormalForm> frontier{rep};
  while (!frontier.empty()) {
    std::vector<NormalForm> next;
    for (const auto& y : frontier) {
      for (const auto& s : simples) {
        NormalForm z = conjugate(y, s);
        if (z.infimum() == rep.infimum() && z.supremum() == rep.supremum() &&
            found.insert(z).second)
          next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }
  return sorted_output(found);
}

std::vector<NormalForm> sss_brute_force(const NormalForm& x, int bound) {
  const auto simples = nontrivial_simples(x.strands(), bound);
  const NormalForm rep = sss_representative(x).first;
  std::set<NormalForm> found{rep};
  std::vector<NormalForm> frontier{rep};
  const long width = static_cast<long>(simples.size());
  while (!frontier.empty()) {
    std::set<NormalForm> candidates;
    const long total = static_cast<long>(frontier.size()) * width;
#pragma omp parallel
    {
      std::set<NormalForm> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long idx = 0; idx < total; ++idx) {
        NormalForm z = conjugate(frontier[idx / width], simples[idx % width]);
        if (z.infimum() == rep.infimum() && z.supremum() == rep.supremum() && !found.count(z))
          local.insert(std::move(z));
      }
#pragma omp critical(dualbraid_sss_merge)
      candidates.merge(local);
    }
    std::vector<NormalForm> next;
    for (const auto& z : candidates)
      if (found.insert(z).second) next.push_back(z);
    frontier = std::move(next);
  }
  return sorted_output(found);
}

}  // namespace dualbraid
