#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l1pt/model.hpp"

// Random linear-system instances: an i.i.d. standard normal m x n matrix, a
// planted vector of the requested class, and the exact right-hand side.
namespace l1pt::instance {

enum class Entry : std::uint8_t { Zero, One, Interior };

struct InstanceDims {
    std::size_t n = 0;       // ambient dimension
    std::size_t m = 0;       // equations
    std::size_t k = 0;       // binary: ones; box: interior entries
    std::size_t n_zero = 0;  // planted zeros
    std::size_t n_one = 0;   // planted ones
};

// Derive counts from (n, m, k). Box: n_zero = round(mu * (n-k)).
InstanceDims make_dims(std::size_t n, std::size_t m, std::size_t k, Model model, double mu = 1.0);

// How interior entries of a box instance are filled.
struct InteriorFill {
    bool uniform = true;   // i.i.d. uniform(0,1)
    double value = 0.5;    // used when uniform == false
};

struct ProblemInstance {
    InstanceDims dims;
    Model model = Model::Binary;
    double mu = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> a;        // column-major, m * n
    std::vector<double> x_true;   // n
    std::vector<double> y;        // m, exactly a * x_true as computed
    std::vector<Entry> pattern;   // n

    const double* col(std::size_t j) const { return a.data() + j * dims.m; }
};

// Deterministic for a fixed seed. Draw order: matrix entries column-major
// (stream 0), pattern shuffle (stream 1), interior values (stream 2); the
// pattern starts as [ones, interiors, zeros] and is Fisher-Yates shuffled.
ProblemInstance gen_instance(const InstanceDims& dims, Model model, double mu,
                             std::uint64_t seed, const InteriorFill& fill = {});

// Archival pair: <prefix>.csv holds the matrix (m rows, comma separated),
// <prefix>.json holds dims, pattern, planted vector, rhs, and seed.
void save_instance(const ProblemInstance& inst, const std::string& prefix);
ProblemInstance load_instance(const std::string& prefix);

}  // namespace l1pt::instance
