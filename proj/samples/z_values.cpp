// Z(t) by the Riemann-Siegel formula next to the high-precision reference.

#include <cstdio>

#include <rsiegel/rsiegel.hpp>

int main()
{
    std::printf("%8s %22s %22s %10s\n", "t", "Z (Riemann-Siegel)", "Z (reference)", "err_est");
    for (double t : {20.0, 50.0, 100.0, 250.0, 1000.0}) {
        const auto rs = rsiegel::z_function(t);
        const auto ref = rsiegel::oracle_z(rsiegel::real256(t));
        std::printf("%8.1f %22.15f %22.15f %10.2e\n", t, rs.z, rsiegel::to_double(ref.value), rs.error_estimate);
    }
}
