#ifndef SOLWAVE_GRID_HPP
#define SOLWAVE_GRID_HPP

// Uniform periodic grids on [-L, L)^d and complex fields living on them.
// Row-major storage, axis 0 slowest (FFTW's layout).  Frequencies follow the
// DFT index convention: mode k corresponds to xi = (pi/L) * k for k < n/2 and
// (pi/L) * (k - n) above, so the spectral coordinate runs over [-n/2, n/2).

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace solwave {

struct Grid {
    int dim = 1;
    int n = 8;                 // points per axis, power of two
    double half_length = 1.0;  // L

    Grid(int dim_, int n_, double half_length_);

    std::size_t size() const;
    double spacing() const { return 2.0 * half_length / n; }
    double coord(int i) const { return -half_length + spacing() * i; }
    int signed_mode(int k) const { return k < n / 2 ? k : k - n; }
    double freq(int k) const { return M_PI / half_length * signed_mode(k); }
    double nyquist() const { return M_PI / half_length * (n / 2); }

    void unravel(std::size_t flat, std::array<int, 3>& idx) const;

    bool operator==(const Grid& o) const {
        return dim == o.dim && n == o.n && half_length == o.half_length;
    }
};

class GridField {
  public:
    explicit GridField(const Grid& g);
    GridField(const Grid& g, std::vector<std::complex<double>> values);

    static GridField sample(const Grid& g,
                            const std::function<double(const std::array<double, 3>&)>& f);
    static GridField sample_radial(const Grid& g, const std::function<double(double)>& f);

    const Grid& grid() const { return g_; }
    std::vector<std::complex<double>>& values() { return v_; }
    const std::vector<std::complex<double>>& values() const { return v_; }
    std::complex<double>& operator[](std::size_t i) { return v_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return v_[i]; }
    std::size_t size() const { return v_.size(); }

    double radius(std::size_t flat) const;          // euclidean |x| of a node
    double coord_max_abs(std::size_t flat) const;   // max_axis |x_axis|

    // sup of |value|; window > 0 restricts to nodes with max_axis |x_axis| <= window
    double sup_abs(double window = 0.0) const;
    double max_imag_abs() const;

    void write_binary(const std::string& path) const;
    static GridField read_binary(const std::string& path);
    void write_csv(const std::string& path) const;   // d = 1 only: "x,re,im"

  private:
    Grid g_;
    std::vector<std::complex<double>> v_;
};

// Write-to-temp-then-rename, so readers never observe partial files.
void atomic_write_text(const std::string& path, const std::string& text);

} // namespace solwave

#endif
