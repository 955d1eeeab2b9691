#include "qrv/dataio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qrv {

std::string data_directory() {
    if (const char* env = std::getenv("QRV_DATA_DIR")) return env;
    return QRV_DATA_DIR;
}

CoefficientTable CoefficientTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open coefficient file " + path);
    CoefficientTable table;
    std::string line;
    std::string name;
    int degree = -1;
    size_t assigned = 0;
    std::vector<BigRational> coeffs;
    auto flush = [&]() {
        if (name.empty()) return;
        if (assigned != size_t(degree) + 1)
            throw data_error("record " + name + ": expected " + std::to_string(degree + 1) +
                             " coefficient lines, got " + std::to_string(assigned));
        table.records_.emplace(name, RationalPolynomial(std::move(coeffs)));
        name.clear();
        coeffs.clear();
        assigned = 0;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) {
            flush();
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(first[0])) && first[0] != '-') {
            flush();
            name = first;
            if (!(ls >> degree) || degree < 0)
                throw data_error("record " + name + ": bad degree line");
            coeffs.assign(degree + 1, BigRational(0));
            continue;
        }
        if (name.empty()) throw data_error("coefficient line before any record header");
        size_t k = std::stoul(first);
        std::string value;
        if (!(ls >> value)) throw data_error("record " + name + ": missing value");
        if (k >= coeffs.size()) throw data_error("record " + name + ": index out of range");
        coeffs[k] = parse_rational(value);
        ++assigned;
    }
    flush();
    return table;
}

const CoefficientTable& CoefficientTable::builtin() {
    static const CoefficientTable table = [] {
        std::string dir = data_directory();
        CoefficientTable merged;
        for (const char* file : {"certificate_polys.txt", "reduced_energy_generic.txt",
                                 "reduced_energy_n25.txt"}) {
            CoefficientTable part = load(dir + "/" + file);
            for (const auto& nm : part.names())
                merged.records_.emplace(nm, part.poly(nm));
        }
        return merged;
    }();
    return table;
}

const RationalPolynomial& CoefficientTable::poly(const std::string& name) const {
    auto it = records_.find(name);
    if (it == records_.end()) throw data_error("no coefficient record named " + name);
    return it->second;
}

BigRational CoefficientTable::scalar(const std::string& name) const {
    const auto& p = poly(name);
    if (p.degree() > 0) throw data_error("record " + name + " is not a scalar");
    return p.coeff(0);
}

std::vector<std::string> CoefficientTable::names() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& [k, v] : records_) out.push_back(k);
    return out;
}

}  // namespace qrv
