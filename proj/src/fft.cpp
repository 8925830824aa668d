#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace solwave::spectral {

namespace {

std::mutex plan_mutex;   // fftw_plan_* / fftw_destroy_plan are not thread-safe

void run(const Grid& g, std::vector<std::complex<double>>& data, int sign) {
    if (data.size() != g.size())
        fail(Errc::invalid_argument, "fft: buffer size does not match the grid");
    int dims[3] = {g.n, g.n, g.n};
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        // FFTW_ESTIMATE never touches the arrays during planning
        plan = fftw_plan_dft(g.dim, dims, buf, buf, sign, FFTW_ESTIMATE);
    }
    if (!plan) fail(Errc::internal, "fftw planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

} // namespace

void fft_forward(const Grid& g, std::vector<std::complex<double>>& data) {
    run(g, data, FFTW_FORWARD);
}

void fft_backward(const Grid& g, std::vector<std::complex<double>>& data) {
    run(g, data, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(g.size());
    for (auto& z : data) z *= scale;
}

} // namespace solwave::spectral
