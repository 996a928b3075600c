// core/fft.h

// Copyright 2026  Farfield Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FARFIELD_CORE_FFT_H_
#define FARFIELD_CORE_FFT_H_

#include <complex>
#include <span>
#include <vector>

namespace farfield {

// Thin wrappers over FFTW (double precision). Plans are cached per size
// behind a mutex; execution is safe from multiple threads.

/// Real-to-complex forward transform: n reals -> n/2+1 bins, unnormalized.
std::vector<std::complex<double>> rfft(std::span<const double> input);

/// Complex-to-real inverse of rfft; `n` is the real length (bins = n/2+1).
/// Output is scaled by 1/n so irfft(rfft(x)) == x.
std::vector<double> irfft(std::span<const std::complex<double>> bins, size_t n);

/// In-place complex transforms, unnormalized forward, 1/n-normalized inverse.
void fft_inplace(std::span<std::complex<double>> data);
void ifft_inplace(std::span<std::complex<double>> data);

/// Smallest power of two >= n (used to size block convolutions).
size_t next_pow2(size_t n);

}  // namespace farfield

#endif  // FARFIELD_CORE_FFT_H_
