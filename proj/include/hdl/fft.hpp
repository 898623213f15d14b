#ifndef HDL_FFT_HPP
#define HDL_FFT_HPP

#include <complex>
#include <vector>

namespace hdl {

// In-place radix-2 transform, a.size() must be a power of two.
// sign = +1 computes X_j = sum_n a_n e^{+2*pi*i*j*n/G} (synthesis on the
// circle grid), sign = -1 the conjugate transform.  No 1/G scaling is
// applied either way.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

} // namespace hdl

#endif
