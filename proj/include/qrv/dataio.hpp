#pragma once
#include <map>
#include <string>
#include <vector>

#include "qrv/polynomial.hpp"

namespace qrv {

// coefficient record files: one polynomial per record,
// header "name degree", then "k numerator[/denominator]" lines, blank line between
class CoefficientTable {
  public:
    static CoefficientTable load(const std::string& path);
    // loads certificate_polys.txt, reduced_energy_generic.txt, reduced_energy_n25.txt
    // from the directory given by $QRV_DATA_DIR, falling back to the build-time default
    static const CoefficientTable& builtin();

    const RationalPolynomial& poly(const std::string& name) const;
    BigRational scalar(const std::string& name) const;  // degree-0 record
    bool has(const std::string& name) const { return records_.count(name) > 0; }
    std::vector<std::string> names() const;

  private:
    std::map<std::string, RationalPolynomial> records_;
};

std::string data_directory();

}  // namespace qrv
