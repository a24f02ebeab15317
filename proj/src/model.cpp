#include "l1pt/model.hpp"

#include <cmath>
#include <stdexcept>

namespace l1pt {

void ModelParams::validate() const {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(mu)))
        throw std::domain_error("ModelParams: non-finite parameter");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ModelParams: alpha outside (0,1)");
    if (!(beta > 0.0 && beta < alpha)) throw std::domain_error("ModelParams: beta outside (0,alpha)");
    if (model == Model::Box) {
        if (!(mu >= 0.5 && mu <= 1.0)) throw std::domain_error("ModelParams: mu outside [1/2,1]");
        if (mu == 0.5) throw std::domain_error("ModelParams: mu = 1/2 is a pole of the box formulas");
    }
}

std::string to_string(Model m) { return m == Model::Binary ? "binary" : "box"; }

Model model_from_string(const std::string& s) {
    if (s == "binary" || s == "bin") return Model::Binary;
    if (s == "box") return Model::Box;
    throw std::invalid_argument("unknown model: " + s);
}

}  // namespace l1pt
