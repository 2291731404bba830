// The first zeros on the critical line and the sum of 1/(a^2 + 1/4) over them.

#include <cstdio>
#include <iostream>

#include <rsiegel/rsiegel.hpp>

int main()
{
    using namespace rsiegel;
    const auto zeros = scan_zeros(2 * pi<double>(), 100.0, ZeroMethod::oracle);
    write_zero_csv(std::cout, zeros);
    const auto sum = zero_sum_check(100.0, zeros);
    std::printf("partial %.12f + tail %.6f vs %.12f\n", sum.partial, sum.tail, to_double(sum.closed_form));
}
