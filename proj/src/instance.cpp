#include "l1pt/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "l1pt/kernels.hpp"
#include "l1pt/rng.hpp"

namespace l1pt::instance {

InstanceDims make_dims(std::size_t n, std::size_t m, std::size_t k, Model model, double mu) {
    if (!(k <= m && m <= n) || n == 0)
        throw std::invalid_argument("make_dims: need k <= m <= n, n > 0");
    InstanceDims d;
    d.n = n;
    d.m = m;
    d.k = k;
    if (model == Model::Binary) {
        d.n_zero = n - k;
        d.n_one = k;
    } else {
        if (!(mu >= 0.5 && mu <= 1.0)) throw std::invalid_argument("make_dims: mu outside [1/2,1]");
        d.n_zero = static_cast<std::size_t>(std::llround(mu * static_cast<double>(n - k)));
        if (d.n_zero > n - k) d.n_zero = n - k;
        d.n_one = (n - k) - d.n_zero;
    }
    return d;
}

ProblemInstance gen_instance(const InstanceDims& dims, Model model, double mu,
                             std::uint64_t seed, const InteriorFill& fill) {
    if (dims.n_zero + dims.n_one + (model == Model::Box ? dims.k : 0) != dims.n)
        throw std::invalid_argument("gen_instance: inconsistent dims");

    ProblemInstance inst;
    inst.dims = dims;
    inst.model = model;
    inst.mu = model == Model::Box ? mu : 1.0;
    inst.seed = seed;

    const std::size_t n = dims.n, m = dims.m;

    rng::Stream mat(seed, 0);
    inst.a.resize(m * n);
    for (double& v : inst.a) v = mat.gaussian();

    inst.pattern.assign(n, Entry::Zero);
    std::size_t at = 0;
    for (std::size_t i = 0; i < dims.n_one; ++i) inst.pattern[at++] = Entry::One;
    if (model == Model::Box)
        for (std::size_t i = 0; i < dims.k; ++i) inst.pattern[at++] = Entry::Interior;
    rng::Stream shuf(seed, 1);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = shuf.bounded(static_cast<std::uint32_t>(i + 1));
        std::swap(inst.pattern[i], inst.pattern[j]);
    }

    rng::Stream interior(seed, 2);
    inst.x_true.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        switch (inst.pattern[j]) {
            case Entry::Zero: break;
            case Entry::One: inst.x_true[j] = 1.0; break;
            case Entry::Interior:
                inst.x_true[j] = fill.uniform ? interior.uniform() : fill.value;
                break;
        }
    }

    inst.y.assign(m, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        if (inst.x_true[j] != 0.0) kern::axpy(inst.x_true[j], inst.col(j), inst.y.data(), m);
    return inst;
}

namespace {

char entry_char(Entry e) {
    switch (e) {
        case Entry::Zero: return 'z';
        case Entry::One: return 'o';
        default: return 'i';
    }
}

Entry entry_from_char(char c) {
    if (c == 'z') return Entry::Zero;
    if (c == 'o') return Entry::One;
    if (c == 'i') return Entry::Interior;
    throw std::runtime_error("load_instance: bad pattern character");
}

}  // namespace

void save_instance(const ProblemInstance& inst, const std::string& prefix) {
    {
        std::ofstream csv(prefix + ".csv");
        if (!csv) throw std::runtime_error("save_instance: cannot open " + prefix + ".csv");
        csv.precision(17);
        for (std::size_t i = 0; i < inst.dims.m; ++i) {
            for (std::size_t j = 0; j < inst.dims.n; ++j) {
                if (j) csv << ',';
                csv << inst.a[j * inst.dims.m + i];
            }
            csv << '\n';
        }
    }
    nlohmann::json j;
    j["schema"] = "l1pt-instance/1";
    j["n"] = inst.dims.n;
    j["m"] = inst.dims.m;
    j["k"] = inst.dims.k;
    j["n_zero"] = inst.dims.n_zero;
    j["n_one"] = inst.dims.n_one;
    j["model"] = to_string(inst.model);
    j["mu"] = inst.mu;
    j["seed"] = inst.seed;
    std::string pat;
    pat.reserve(inst.pattern.size());
    for (Entry e : inst.pattern) pat.push_back(entry_char(e));
    j["pattern"] = pat;
    j["x_true"] = inst.x_true;
    j["y"] = inst.y;
    std::ofstream js(prefix + ".json");
    if (!js) throw std::runtime_error("save_instance: cannot open " + prefix + ".json");
    js << j.dump(2) << '\n';
}

ProblemInstance load_instance(const std::string& prefix) {
    std::ifstream js(prefix + ".json");
    if (!js) throw std::runtime_error("load_instance: cannot open " + prefix + ".json");
    nlohmann::json j;
    js >> j;
    if (j.value("schema", "") != "l1pt-instance/1")
        throw std::runtime_error("load_instance: unknown schema");

    ProblemInstance inst;
    inst.dims.n = j.at("n").get<std::size_t>();
    inst.dims.m = j.at("m").get<std::size_t>();
    inst.dims.k = j.at("k").get<std::size_t>();
    inst.dims.n_zero = j.at("n_zero").get<std::size_t>();
    inst.dims.n_one = j.at("n_one").get<std::size_t>();
    inst.model = model_from_string(j.at("model").get<std::string>());
    inst.mu = j.at("mu").get<double>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    const std::string pat = j.at("pattern").get<std::string>();
    if (pat.size() != inst.dims.n) throw std::runtime_error("load_instance: pattern length");
    for (char c : pat) inst.pattern.push_back(entry_from_char(c));
    inst.x_true = j.at("x_true").get<std::vector<double>>();
    inst.y = j.at("y").get<std::vector<double>>();

    std::ifstream csv(prefix + ".csv");
    if (!csv) throw std::runtime_error("load_instance: cannot open " + prefix + ".csv");
    inst.a.assign(inst.dims.m * inst.dims.n, 0.0);
    std::string line;
    for (std::size_t i = 0; i < inst.dims.m; ++i) {
        if (!std::getline(csv, line)) throw std::runtime_error("load_instance: short matrix file");
        std::stringstream ss(line);
        std::string cell;
        for (std::size_t jcol = 0; jcol < inst.dims.n; ++jcol) {
            if (!std::getline(ss, cell, ',')) throw std::runtime_error("load_instance: short row");
            inst.a[jcol * inst.dims.m + i] = std::stod(cell);
        }
    }
    return inst;
}

}  // namespace l1pt::instance
