#pragma once

#include <cstddef>
#include <string>

namespace acatlab {

/// Size limits for the exhaustive algorithms. Everything here is a scan or an
/// enumeration, so every entry point takes one of these and fails with
/// ErrorKind::CapExceeded instead of running away.
struct Caps {
    std::size_t order = 512;              // largest group accepted
    std::size_t assoc_full = 128;         // exhaustive associativity check up to this order
    std::size_t assoc_samples = 10000;    // random triples above it
    std::size_t faces = 250'000;          // simplicial face enumeration
    std::size_t homology_faces = 200'000; // complexes handed to the homology kernel
    std::size_t oracle_order = 24;        // brute-force subgroup enumeration
    int extra_dims = 3;                   // integral killing cap is max_p d_p + extra_dims
    unsigned long long seed = 0x5eed;     // sampled checks
};

/// Parse "key=value,key=value" overrides (keys: order, faces, homology,
/// oracle, dims, assoc). Throws ErrorKind::Input on unknown keys or values.
Caps parse_caps(const std::string& text, Caps base = {});

}  // namespace acatlab
