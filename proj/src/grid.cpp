#include "grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace solwave {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

constexpr char kMagic[4] = {'S', 'W', 'F', '1'};

} // namespace

Grid::Grid(int dim_, int n_, double half_length_)
    : dim(dim_), n(n_), half_length(half_length_) {
    if (dim < 1 || dim > 3) fail(Errc::invalid_argument, "grid dimension must be 1, 2 or 3");
    if (n < 8 || !power_of_two(n))
        fail(Errc::invalid_argument, "grid size must be a power of two >= 8");
    if (!(half_length > 0) || !std::isfinite(half_length))
        fail(Errc::invalid_argument, "grid half-length must be positive and finite");
}

std::size_t Grid::size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n);
    return s;
}

void Grid::unravel(std::size_t flat, std::array<int, 3>& idx) const {
    idx = {0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % n);
        flat /= n;
    }
}

GridField::GridField(const Grid& g) : g_(g), v_(g.size()) {}

GridField::GridField(const Grid& g, std::vector<std::complex<double>> values)
    : g_(g), v_(std::move(values)) {
    if (v_.size() != g_.size())
        fail(Errc::invalid_argument, "field value count does not match the grid");
}

GridField GridField::sample(const Grid& g,
                            const std::function<double(const std::array<double, 3>&)>& f) {
    GridField out(g);
    std::array<int, 3> idx;
    std::array<double, 3> x{0, 0, 0};
    for (std::size_t i = 0; i < out.v_.size(); ++i) {
        g.unravel(i, idx);
        for (int a = 0; a < g.dim; ++a) x[a] = g.coord(idx[a]);
        out.v_[i] = f(x);
    }
    return out;
}

GridField GridField::sample_radial(const Grid& g, const std::function<double(double)>& f) {
    return sample(g, [&f, &g](const std::array<double, 3>& x) {
        double r2 = 0;
        for (int a = 0; a < g.dim; ++a) r2 += x[a] * x[a];
        return f(std::sqrt(r2));
    });
}

double GridField::radius(std::size_t flat) const {
    std::array<int, 3> idx;
    g_.unravel(flat, idx);
    double r2 = 0;
    for (int a = 0; a < g_.dim; ++a) {
        double c = g_.coord(idx[a]);
        r2 += c * c;
    }
    return std::sqrt(r2);
}

double GridField::coord_max_abs(std::size_t flat) const {
    std::array<int, 3> idx;
    g_.unravel(flat, idx);
    double m = 0;
    for (int a = 0; a < g_.dim; ++a) m = std::max(m, std::abs(g_.coord(idx[a])));
    return m;
}

double GridField::sup_abs(double window) const {
    double m = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (window > 0 && coord_max_abs(i) > window) continue;
        m = std::max(m, std::abs(v_[i]));
    }
    return m;
}

double GridField::max_imag_abs() const {
    double m = 0;
    for (const auto& z : v_) m = std::max(m, std::abs(z.imag()));
    return m;
}

void GridField::write_binary(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) fail(Errc::io_error, "cannot open " + tmp + " for writing");
        os.write(kMagic, 4);
        std::int32_t dim = g_.dim, n = g_.n;
        double L = g_.half_length;
        os.write(reinterpret_cast<const char*>(&dim), 4);
        os.write(reinterpret_cast<const char*>(&n), 4);
        os.write(reinterpret_cast<const char*>(&L), 8);
        // interleaved re/im doubles, row-major (little-endian platform assumed)
        os.write(reinterpret_cast<const char*>(v_.data()),
                 static_cast<std::streamsize>(v_.size() * sizeof(std::complex<double>)));
        if (!os) fail(Errc::io_error, "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(Errc::io_error, "rename failed for " + path);
}

GridField GridField::read_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(Errc::io_error, "cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        fail(Errc::parse_error, path + " is not a field file");
    std::int32_t dim = 0, n = 0;
    double L = 0;
    is.read(reinterpret_cast<char*>(&dim), 4);
    is.read(reinterpret_cast<char*>(&n), 4);
    is.read(reinterpret_cast<char*>(&L), 8);
    if (!is) fail(Errc::parse_error, path + ": truncated header");
    Grid g(dim, n, L);   // re-validates the header fields
    std::vector<std::complex<double>> v(g.size());
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(std::complex<double>)));
    if (!is) fail(Errc::parse_error, path + ": truncated payload");
    return GridField(g, std::move(v));
}

void GridField::write_csv(const std::string& path) const {
    if (g_.dim != 1) fail(Errc::invalid_argument, "CSV export is one-dimensional only");
    std::string text = "x,re,im\n";
    char line[96];
    for (int i = 0; i < g_.n; ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", g_.coord(i),
                      v_[static_cast<std::size_t>(i)].real(), v_[static_cast<std::size_t>(i)].imag());
        text += line;
    }
    atomic_write_text(path, text);
}

void atomic_write_text(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) fail(Errc::io_error, "cannot open " + tmp + " for writing");
        os.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!os) fail(Errc::io_error, "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(Errc::io_error, "rename failed for " + path);
}

} // namespace solwave
