#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsk/bounds.hpp"
#include "bsk/certificate.hpp"
#include "bsk/instance.hpp"

namespace bsk {

struct BenchRow {
  std::string family;
  std::string params;          // "d=2;m=2;n=2"
  std::string rho_min;         // integer, "none" (not found up to the scan limit) or "budget"
  std::optional<Integer> hickel_i;
  std::optional<Integer> macaulay;
  std::optional<Integer> jelonek;
  std::optional<Integer> hermann;
  std::optional<Integer> slack;  // hickel_i - rho_min
  double ms = 0;
  std::optional<long> bs_number;
};

struct BenchConfig {
  Budget budget;
  std::size_t max_nonzeros = 200000;
  bool timing = true;
  int max_resamples = 50;
};

/// z1^d, z1 zm^(d-1) - z2^d, ..., z(m-1) zm^(d-1) - 1 in C^n, phi = 1; 2 <= m <= n.
InstanceFile kollar_instance(long d, long m, long n);
/// n+1 random degree-d polynomials in C^n without common zeros in P^n, phi = 1.
InstanceFile macaulay_generic_instance(long d, long n, std::uint64_t seed, const BenchConfig& config = {});
/// z1^2 = z2^p, F = z2, phi = z1, with the origin and infinity branches.
InstanceFile cusp_instance(long p);

/// mu_0 of the cusp from the local numbers at its two singular points.
long cusp_mu_zero(long p);

BenchRow bench_kollar(long d, long m, long n, const BenchConfig& config = {});
BenchRow bench_macaulay_generic(long d, long n, std::uint64_t seed, const BenchConfig& config = {});
BenchRow bench_cusp(long p, const BenchConfig& config = {});

/// "key=a..b" or "key=v" arguments; every key maps to the listed values.
std::map<std::string, std::vector<long>> parse_ranges(const std::vector<std::string>& args);

/// Rows for every combination of the family's parameters, in lexicographic order.
std::vector<BenchRow> run_bench(const std::string& family, const std::map<std::string, std::vector<long>>& params,
                                std::uint64_t seed, const BenchConfig& config = {});

std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace bsk
