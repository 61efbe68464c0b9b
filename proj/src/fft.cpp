#include "tfkit/fft.hpp"

#include <cmath>
#include <numbers>

#include "tfkit/errors.hpp"

namespace tfkit {

namespace {

int smallest_prime_factor(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return static_cast<int>(p);
  }
  return static_cast<int>(n);
}

// roots[j] = exp(sign 2 pi i j / n)
std::vector<cplx> root_table(std::size_t n, int sign) {
  std::vector<cplx> roots(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    roots[j] = {std::cos(a), std::sin(a)};
  }
  if (n % 2 == 0) roots[n / 2] = {-1.0, 0.0};
  if (n % 4 == 0) {
    roots[n / 4] = {0.0, static_cast<double>(sign)};
    roots[3 * n / 4] = {0.0, -static_cast<double>(sign)};
  }
  return roots;
}

// Decimation in time by the smallest prime factor; prime lengths fall back
// to the direct sum. `roots` belongs to the top-level length `top`, and a
// sub-transform of length n uses every (top / n)-th entry.
void fft_rec(const cplx* in, std::size_t stride, cplx* out, std::size_t n, const std::vector<cplx>& roots,
             std::size_t top) {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t step = top / n;
  const auto p = static_cast<std::size_t>(smallest_prime_factor(n));
  if (p == n) {
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc{0.0, 0.0};
      for (std::size_t x = 0; x < n; ++x) acc += in[x * stride] * roots[((x * k) % n) * step];
      out[k] = acc;
    }
    return;
  }
  const std::size_t m = n / p;
  for (std::size_t r = 0; r < p; ++r) fft_rec(in + r * stride, stride * p, out + r * m, m, roots, top);
  std::vector<cplx> column(p);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < p; ++r) column[r] = out[r * m + k];
    for (std::size_t q = 0; q < p; ++q) {
      const std::size_t kk = k + m * q;
      cplx acc{0.0, 0.0};
      for (std::size_t r = 0; r < p; ++r) acc += column[r] * roots[((r * kk) % n) * step];
      out[kk] = acc;
    }
  }
}

void check_args(std::size_t len, const std::vector<int>& orders, int sign) {
  std::size_t n = 1;
  for (int o : orders) n *= static_cast<std::size_t>(o);
  if (n != len) throw DomainError("DFT input length does not match the group order");
  if (sign != 1 && sign != -1) throw DomainError("DFT sign must be +1 or -1");
}

}  // namespace

void dft_inplace(std::span<cplx> data, const std::vector<int>& orders, int sign) {
  check_args(data.size(), orders, sign);
  std::size_t inner = data.size();
  for (int order : orders) {
    const auto n = static_cast<std::size_t>(order);
    inner /= n;
    if (n == 1) continue;
    const std::size_t outer = data.size() / (inner * n);
    const auto roots = root_table(n, sign);
    std::vector<cplx> line(n), result(n);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        cplx* base = data.data() + o * n * inner + i;
        for (std::size_t k = 0; k < n; ++k) line[k] = base[k * inner];
        fft_rec(line.data(), 1, result.data(), n, roots, n);
        for (std::size_t k = 0; k < n; ++k) base[k * inner] = result[k];
      }
    }
  }
}

std::vector<cplx> dft_reference(std::span<const cplx> data, const std::vector<int>& orders, int sign) {
  check_args(data.size(), orders, sign);
  const std::vector<int> ord = orders;
  const GroupSpec g = make_group(ord);
  std::vector<cplx> out(data.size());
  for (std::size_t w = 0; w < data.size(); ++w) {
    cplx acc{0.0, 0.0};
    for (std::size_t x = 0; x < data.size(); ++x) {
      const cplx c = g.character(w, x);
      acc += data[x] * (sign > 0 ? c : std::conj(c));
    }
    out[w] = acc;
  }
  return out;
}

}  // namespace tfkit
