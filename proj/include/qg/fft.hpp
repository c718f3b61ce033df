#pragma once

#include <complex>
#include <span>

namespace qg {

using Complex = std::complex<double>;

/// 2D complex-to-complex transforms on n x n row-major arrays.
///
/// Normalization: the forward transform carries 1/n^2, so its output is the
/// Fourier-series coefficient c_k of f(x) = sum_k c_k exp(i k.x). The inverse
/// transform is the plain synthesis sum. Plans are cached per size; execution
/// is safe from several threads at once.
namespace fft {

void forward(int n, std::span<const Complex> physical, std::span<Complex> spectral);
void inverse(int n, std::span<const Complex> spectral, std::span<Complex> physical);

}  // namespace fft
}  // namespace qg
