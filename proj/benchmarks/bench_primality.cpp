#include <benchmark/benchmark.h>

#include <facelim/natural.hpp>
#include <facelim/primality.hpp>
#include <facelim/sieve.hpp>

namespace {

// Known primes at representative widths keep every iteration on the
// slowest (all-rounds) path.
const facelim::Natural kPrime60 = (facelim::Natural(1) << 61) - 1;
const facelim::Natural kPrime89 = (facelim::Natural(1) << 89) - 1;
const facelim::Natural kPrime107 = (facelim::Natural(1) << 107) - 1;
const facelim::Natural kPrime127 = (facelim::Natural(1) << 127) - 1;
const facelim::Natural kPrime255 = (facelim::Natural(1) << 255) - 19;

void BM_IsPrimeU128(benchmark::State& state) {
    const facelim::uint128 n =
        facelim::u128_from_natural(state.range(0) == 61   ? kPrime60
                                   : state.range(0) == 89 ? kPrime89
                                                          : kPrime107);
    for (auto _ : state) {
        benchmark::DoNotOptimize(facelim::is_prime_u128(n));
    }
}
BENCHMARK(BM_IsPrimeU128)->Arg(61)->Arg(89)->Arg(107);

void BM_IsPrimeNatural(benchmark::State& state) {
    const facelim::Natural& n = state.range(0) == 127 ? kPrime127 : kPrime255;
    for (auto _ : state) {
        benchmark::DoNotOptimize(facelim::is_prime(n));
    }
}
BENCHMARK(BM_IsPrimeNatural)->Arg(127)->Arg(255);

void BM_SievePrimes(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(facelim::sieve_primes(std::uint64_t(state.range(0))));
    }
}
BENCHMARK(BM_SievePrimes)->Arg(1000000)->Arg(10000000);

}  // namespace

BENCHMARK_MAIN();
