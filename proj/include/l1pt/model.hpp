#pragma once

#include <string>

namespace l1pt {

// Planted-vector class the relaxation is asked to recover.
enum class Model { Binary, Box };

// Evaluation point (alpha, beta, mu) = (m/n, k/n, fraction of off-support
// zeros). mu only plays a role for the box model; mu = 1/2 makes the box
// transition formula degenerate and is rejected.
struct ModelParams {
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 1.0;
    Model model = Model::Binary;

    // Shared sanity constraints: alpha in (0,1), beta in (0,alpha), and for
    // the box model mu in (1/2, 1]. Throws std::domain_error.
    void validate() const;
};

std::string to_string(Model m);
Model model_from_string(const std::string& s);

}  // namespace l1pt
