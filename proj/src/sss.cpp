#include "dualbraid/sss.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualbraid/periodic.hpp"

namespace dualbraid {

namespace {

void check_params(int n, int d) {
  if (d < 1 || n < 3 || (n - 1) % d != 0 || (n - 1) / d < 2)
    throw std::invalid_argument("need n = rd + 1 with d >= 1 and r >= 2 (n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
}

NormalForm build_one_pure(int n, int d, const std::vector<Simple>& comp) {
  Simple a = Simple::generator(d + 1, 1, n);
  for (std::size_t k = 0; k < comp.size(); ++k) {
    auto next = simple_product(a, tau(comp[k], static_cast<long>(k) * d));
    if (!next) throw std::logic_error("composition does not yield a simple element");
    a = *next;
  }
  return NormalForm::from_factors(n, d, {a});
}

std::vector<std::vector<Simple>> compositions_for(int n, int d) {
  std::vector<int> top;
  for (int i = d + 1; i >= 2; --i) top.push_back(i);
  return enumerate_compositions(Simple::subsimple(top, n), (n - 1) / d);
}

SssTable finish(int n, int d, std::vector<NormalForm> elements) {
  std::sort(elements.begin(), elements.end(), canonical_less);
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::logic_error("enumerate_sss: duplicate element");
  if (elements.size() != count_sss(n, d))
    throw std::logic_error("enumerate_sss: produced " + std::to_string(elements.size()) +
                           " elements, expected " + std::to_string(count_sss(n, d)));
  return {n, d, (n - 1) / d, std::move(elements)};
}

void check_bound(int n, int d, std::uint64_t bound) {
  const auto expected = count_sss(n, d);
  if (expected > bound)
    throw BoundExceeded("super summit set has " + std::to_string(expected) +
                        " elements, above the bound " + std::to_string(bound));
}

}  // namespace

std::uint64_t count_sss(int n, int d) {
  check_params(n, d);
  return static_cast<std::uint64_t>(n) * zeta(d, (n - 1) / d);
}

std::vector<NormalForm> one_pure_sss(int n, int d) {
  check_params(n, d);
  if (d == 1) return {epsilon_power(n, 1)};
  std::vector<NormalForm> out;
  for (const auto& comp : compositions_for(n, d)) out.push_back(build_one_pure(n, d, comp));
  return out;
}

SssTable enumerate_sss_serial(int n, int d, std::uint64_t bound) {
  check_params(n, d);
  check_bound(n, d, bound);
  std::vector<NormalForm> elements;
  for (const auto& x : one_pure_sss(n, d))
    for (int u = 0; u < n; ++u) elements.push_back(tau_nf(x, u));
  return finish(n, d, std::move(elements));
}

SssTable enumerate_sss(int n, int d, std::uint64_t bound) {
  check_params(n, d);
  check_bound(n, d, bound);
  if (d == 1) return enumerate_sss_serial(n, d, bound);
  const auto comps = compositions_for(n, d);
  const long count = static_cast<long>(comps.size());
  // slot c*n + u holds tau^u of the c-th 1-pure element
  std::vector<NormalForm> elements(static_cast<std::size_t>(count) * n, NormalForm(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < count; ++c) {
    const NormalForm x = build_one_pure(n, d, comps[c]);
    for (int u = 0; u < n; ++u) elements[static_cast<std::size_t>(c) * n + u] = tau_nf(x, u);
  }
  return finish(n, d, std::move(elements));
}

bool verify_membership(const NormalForm& x, int n, int d) {
  check_params(n, d);
  if (x.strands() != n) return false;
  try {
    const auto pure = purify(x).second;
    conjugator_from_decomposition(characterize(pure, d));
    return true;
  } catch (const CharacterizationError&) {
    return false;
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace dualbraid
