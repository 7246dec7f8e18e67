// Own entry point: the packaged libbenchmark_main.a is LTO bytecode from a
// different compiler release and does not link everywhere.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
