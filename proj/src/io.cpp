#include "roofbound/io.hpp"

#include "roofbound/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace roofbound {

DensityMatrix read_density_matrix(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "dim" || n <= 0 || n > 1024)
        throw Error("density matrix file: expected header 'dim n'");
    int nq = 0;
    while ((1 << nq) < n) ++nq;
    if ((1 << nq) != n)
        throw InvalidDensityMatrix("density matrix file: dimension is not a power of two");

    DensityMatrix rho(nq, CMatrix(n));
    for (int k = 0; k < n * n; ++k) {
        int r, c;
        double re, im;
        if (!(in >> r >> c >> re >> im))
            throw Error("density matrix file: truncated entry list");
        if (r < 0 || r >= n || c < 0 || c >= n)
            throw Error("density matrix file: index out of range");
        rho.m(r, c) = cplx(re, im);
    }
    return rho;
}

void write_density_matrix(std::ostream& out, const DensityMatrix& rho) {
    const int n = rho.m.dim();
    out << "dim " << n << "\n";
    char buf[128];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", r, c,
                          rho.m(r, c).real(), rho.m(r, c).imag());
            out << buf;
        }
}

std::string csv_number(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace roofbound
