#ifndef SOLWAVE_FFT_HPP
#define SOLWAVE_FFT_HPP

// Thin FFTW3 wrapper.  forward() is the unnormalized DFT; backward() divides
// by the point count so backward(forward(f)) == f.  Plans are created per call
// with FFTW_ESTIMATE (deterministic and cheap at our sizes) under a global
// mutex, per FFTW's thread-safety rules; execution is single-threaded so
// identical inputs always produce bit-identical outputs.

#include <complex>
#include <vector>

#include "grid.hpp"

namespace solwave::spectral {

void fft_forward(const Grid& g, std::vector<std::complex<double>>& data);
void fft_backward(const Grid& g, std::vector<std::complex<double>>& data);

} // namespace solwave::spectral

#endif
