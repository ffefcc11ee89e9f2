// Braid-algebra HOMFLY engine.
//
// A braid is multiplied out in the Hecke algebra H_n with generators T_i,
// T_i^2 = z T_i + 1, over the basis {T_w : w in S_n}. The framed trace with
// tr(x T_{n-1} y) = v^-1 tr(xy) and tr(x) = delta tr_{n-1}(x) for x, y in
// H_{n-1}, delta = (v^-1 - v)/z, is then reduced one strand at a time, and
// P = v^(exponent sum) tr(beta).
//
// Coefficients are polynomials in z with nonnegative exponents. During the
// reduction each strand removal contributes v^-1, and removals through the
// delta branch an extra (1 - v^2) z^-1; the number m of delta branches is
// carried as a second index, so every coefficient is a block [m][d] of
// integers. Only additions and index shifts occur, so the arithmetic can be
// done modulo 2^64 or 2^128 whenever an a-priori l1 bound on the final
// integers fits; otherwise GMP integers are used.
//
// Within a block the z-degree d of every nonzero entry has a fixed parity
// (d + length(w) + m + sigma even, sigma a per-stage flag), so only slot
// d/2 is stored.

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "knotpoly/skein.hpp"

namespace knotpoly {

namespace {

using u128 = unsigned __int128;

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// Permutations of S_n indexed by Lehmer code: digit i (0-based position)
// counts later smaller entries, radix n - i, weight (n-1-i)!.
struct PermIndex {
  int n = 1;
  std::size_t count = 1;
  std::vector<std::size_t> weight;  // (n-1-i)!
  std::vector<std::uint8_t> parity;  // length mod 2

  explicit PermIndex(int strands) : n(strands), count(factorial(strands)), weight(strands), parity(count) {
    for (int i = 0; i < n; ++i) weight[i] = factorial(n - 1 - i);
    std::vector<int> digit(n, 0);
    int sum = 0;
    for (std::size_t r = 0; r < count; ++r) {
      parity[r] = static_cast<std::uint8_t>(sum & 1);
      // increment the mixed-radix counter, last digit fastest
      for (int i = n - 1; i >= 0; --i) {
        if (digit[i] + 1 < n - i) {
          ++digit[i];
          ++sum;
          break;
        }
        sum -= digit[i];
        digit[i] = 0;
      }
    }
  }
  std::size_t digit(std::size_t r, int i) const { return (r / weight[i]) % static_cast<std::size_t>(n - i); }
};

template <typename Scalar>
struct State {
  int n = 1;
  int m_count = 1;
  int slots = 1;
  int sigma = 0;
  std::vector<Scalar> data;

  Scalar* block(std::size_t r, int m) { return data.data() + (r * m_count + m) * slots; }
};

template <typename Scalar>
std::size_t scalar_bytes() {
  if constexpr (std::is_same_v<Scalar, Integer>) return sizeof(Integer) + 16;
  else return sizeof(Scalar);
}

template <typename Scalar>
void check_budget(std::size_t entries, const SkeinConfig& cfg) {
  const double bytes = static_cast<double>(entries) * static_cast<double>(scalar_bytes<Scalar>());
  if (bytes > static_cast<double>(cfg.max_state_bytes))
    throw ResourceError("braid-algebra state needs about " + std::to_string(static_cast<long long>(bytes / (1 << 20))) +
                        " MiB, over the configured budget of " + std::to_string(cfg.max_state_bytes >> 20) + " MiB");
}

// Right-multiply by T_gen (sign > 0) or T_gen^-1 = T_gen - z (sign < 0), gen 1-based.
template <typename Scalar>
void apply_letter(State<Scalar>& st, const PermIndex& idx, int gen, int sign, unsigned workers) {
  const int p = gen - 1;
  const std::size_t fp = idx.weight[p], fq = idx.weight[p + 1];
  const std::size_t rp = static_cast<std::size_t>(idx.n - p), rq = rp - 1;
  const int S = st.slots;
  const int M = st.m_count;

  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t u = lo; u < hi; ++u) {
      const std::size_t cp = (u / fp) % rp, cq = (u / fq) % rq;
      if (cp > cq) continue;  // u is not the shorter end of its pair
      const std::size_t us = u + (cq + 1) * fp + cp * fq - cp * fp - cq * fq;
      for (int m = 0; m < M; ++m) {
        const int pu = (st.sigma + idx.parity[u] + m) & 1;
        Scalar* A = st.block(u, m);
        Scalar* B = st.block(us, m);
        if (sign > 0) {
          // A' = B, B' = A + z B
          for (int j = S - 1; j >= 0; --j) {
            Scalar a = A[j];
            Scalar b = B[j];
            if (pu == 0) B[j] = j > 0 ? Scalar(a + B[j - 1]) : a;
            else B[j] = a + b;
            A[j] = b;
          }
        } else {
          // A' = B - z A, B' = A
          for (int j = S - 1; j >= 0; --j) {
            Scalar a = A[j];
            Scalar b = B[j];
            if (pu == 1) A[j] = j > 0 ? Scalar(b - A[j - 1]) : b;
            else A[j] = b - a;
            B[j] = a;
          }
        }
      }
    }
  };

  const std::size_t N = idx.count;
  if (workers <= 1 || N < 4096) {
    run(0, N);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (N + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      std::size_t lo = t * chunk, hi = std::min(N, lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  st.sigma ^= 1;
}

// Reduce from H_j to H_{j-1}.
template <typename Scalar>
State<Scalar> reduce(State<Scalar>& in, const PermIndex& idx_in, const PermIndex& idx_out, int& max_degree,
                     const SkeinConfig& cfg) {
  const int j = in.n;
  max_degree += std::max(0, j - 2);
  State<Scalar> out;
  out.n = j - 1;
  out.m_count = in.m_count + 1;
  out.slots = max_degree / 2 + 1;
  out.sigma = in.sigma ^ 1;
  const std::size_t n_out = idx_out.count;
  check_budget<Scalar>(n_out * static_cast<std::size_t>(out.m_count + in.m_count) * out.slots +
                           in.data.size(),
                       cfg);
  out.data.assign(n_out * out.m_count * out.slots, Scalar(0));

  State<Scalar> v;
  v.n = j - 1;
  v.m_count = in.m_count;
  v.slots = out.slots;

  for (int k = 1; k <= j; ++k) {
    // value j sits at position k: digit k-1 equals j-k; w' drops that digit
    const std::size_t removed = static_cast<std::size_t>(j - k);
    v.data.assign(n_out * v.m_count * v.slots, Scalar(0));
    v.sigma = in.sigma ^ ((j - k) & 1);
    for (std::size_t r2 = 0; r2 < n_out; ++r2) {
      // insert digit `removed` at position k-1 of r2's code
      std::size_t r = 0;
      for (int i = 0, i2 = 0; i < j; ++i) {
        std::size_t d = (i == k - 1) ? removed : idx_out.digit(r2, i2++);
        r += d * idx_in.weight[i];
      }
      for (int m = 0; m < in.m_count; ++m) {
        const Scalar* src = in.block(r, m);
        Scalar* dst = v.block(r2, m);
        for (int s = 0; s < in.slots; ++s) dst[s] = src[s];
      }
    }
    if (k == j) {
      for (std::size_t r2 = 0; r2 < n_out; ++r2)
        for (int m = 0; m < v.m_count; ++m) {
          const Scalar* src = v.block(r2, m);
          Scalar* dst = out.block(r2, m + 1);
          for (int s = 0; s < v.slots; ++s) dst[s] += src[s];
        }
      continue;
    }
    for (int g = j - 2; g >= k; --g) apply_letter(v, idx_out, g, 1, cfg.parallel_workers);
    for (std::size_t r2 = 0; r2 < n_out; ++r2)
      for (int m = 0; m < v.m_count; ++m) {
        const Scalar* src = v.block(r2, m);
        Scalar* dst = out.block(r2, m);
        for (int s = 0; s < v.slots; ++s) dst[s] += src[s];
      }
  }
  in.data.clear();
  in.data.shrink_to_fit();
  return out;
}

template <typename Scalar>
Integer to_integer(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return x;
  } else if constexpr (std::is_same_v<Scalar, std::uint64_t>) {
    auto s = static_cast<std::int64_t>(x);
    Integer r;
    mpz_set_si(r.get_mpz_t(), s);  // values are bounded below 2^62
    return r;
  } else {
    const bool neg = (x >> 127) != 0;
    const u128 mag = neg ? u128(0) - x : x;
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
  }
}

template <typename Scalar>
LaurentPoly2 run(const BraidWord& b, const SkeinConfig& cfg) {
  const int n = b.strands;
  int max_degree = static_cast<int>(b.letters.size());
  PermIndex idx(n);
  State<Scalar> st;
  st.n = n;
  st.slots = max_degree / 2 + 1;
  check_budget<Scalar>(idx.count * static_cast<std::size_t>(st.slots), cfg);
  st.data.assign(idx.count * st.slots, Scalar(0));
  st.data[0] = Scalar(1);  // identity permutation has rank 0
  for (int e : b.letters) apply_letter(st, idx, e > 0 ? e : -e, e > 0 ? 1 : -1, cfg.parallel_workers);

  for (int j = n; j >= 2; --j) {
    PermIndex next(j - 1);
    st = reduce(st, idx, next, max_degree, cfg);
    idx = std::move(next);
  }

  // st is now H_1: P = v^(e-(n-1)) sum c[m][d] z^(d-m) (1 - v^2)^m
  const LaurentPoly2 one_minus_v2 = LaurentPoly2(1) - LaurentPoly2::monomial(1, 2, 0);
  LaurentPoly2 result;
  const int vshift = exponent_sum(b) - (n - 1);
  for (int m = 0; m < st.m_count; ++m) {
    LaurentPoly2 row;
    const Scalar* c = st.block(0, m);
    for (int s = 0; s < st.slots; ++s) {
      Integer x = to_integer<Scalar>(c[s]);
      if (x == 0) continue;
      const int d = 2 * s + ((st.sigma + m) & 1);
      row.add_term(vshift, d - m, x);
    }
    if (!row.is_zero()) result += row * pow(one_minus_v2, m);
  }
  return result;
}

}  // namespace

LaurentPoly2 homfly_braid(const BraidWord& b, const SkeinConfig& cfg) {
  if (cfg.engine == Engine::diagram_skein) return homfly(braid_closure(b), cfg);
  if (b.strands > 12) throw ResourceError("braid-algebra engine supports at most 12 strands");
  // |coefficients| < 2^bits at every stage (each letter at most doubles the
  // l1 norm; strand removal from H_j applies at most j-2 more letters).
  const int n = b.strands;
  const long bits = static_cast<long>(b.letters.size()) + static_cast<long>(n - 1) * (n - 2) / 2;
  if (bits <= 62) return run<std::uint64_t>(b, cfg);
  if (bits <= 126) return run<u128>(b, cfg);
  return run<Integer>(b, cfg);
}

}  // namespace knotpoly
