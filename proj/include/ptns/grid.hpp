#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ptns/errors.hpp"

namespace ptns {

/// Uniform vertex-centered rectangular grid on [0,lx] x [0,ly].
///
/// nx, ny count cells; nodes are (nx+1) x (ny+1) and include the boundary.
/// Fields are stored row-major with the x index fastest.
struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 1.0;
    double ly = 1.0;

    Grid() = default;
    Grid(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        if (nx < 4 || ny < 4)
            throw std::invalid_argument("Grid: nx and ny must be >= 4 (stencils need two interior layers)");
        if (!(lx > 0.0) || !(ly > 0.0))
            throw std::invalid_argument("Grid: domain side lengths must be positive");
    }

    double hx() const { return lx / nx; }
    double hy() const { return ly / ny; }
    int npx() const { return nx + 1; }
    int npy() const { return ny + 1; }
    std::size_t n_nodes() const { return static_cast<std::size_t>(npx()) * npy(); }

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * npx() + i; }
    double x(int i) const { return i * hx(); }
    double y(int j) const { return j * hy(); }
    bool is_boundary(int i, int j) const { return i == 0 || j == 0 || i == nx || j == ny; }

    /// Trapezoid quadrature weight of node (i,j): boundary nodes get 1/2, corners 1/4.
    double weight(int i, int j) const {
        const double cx = (i == 0 || i == nx) ? 0.5 : 1.0;
        const double cy = (j == 0 || j == ny) ? 0.5 : 1.0;
        return cx * cy * hx() * hy();
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.nx == b.nx && a.ny == b.ny && a.lx == b.lx && a.ly == b.ly;
    }
};

/// Grid-sampled real scalar field, one value per node.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0) : grid_(g), v_(g.n_nodes(), fill) {}

    static ScalarField sample(const Grid& g, const std::function<double(double, double)>& f) {
        ScalarField out(g);
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i) out(i, j) = f(g.x(i), g.y(j));
        return out;
    }

    const Grid& grid() const { return grid_; }
    double& operator()(int i, int j) { return v_[grid_.index(i, j)]; }
    double operator()(int i, int j) const { return v_[grid_.index(i, j)]; }
    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    bool is_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double min() const { return *std::min_element(v_.begin(), v_.end()); }
    double max() const { return *std::max_element(v_.begin(), v_.end()); }

    ScalarField& operator+=(const ScalarField& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    ScalarField& operator*=(double s) {
        for (double& x : v_) x *= s;
        return *this;
    }
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

  private:
    Grid grid_;
    std::vector<double> v_;
};

/// Grid-sampled 2D vector field, node-collocated components.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const Grid& g, double fx = 0.0, double fy = 0.0)
        : grid_(g), x_(g.n_nodes(), fx), y_(g.n_nodes(), fy) {}
    VectorField(ScalarField cx, ScalarField cy) : grid_(cx.grid()), x_(), y_() {
        if (!(cx.grid() == cy.grid())) throw std::invalid_argument("VectorField: component grids differ");
        x_ = std::move(cx.data());
        y_ = std::move(cy.data());
    }

    static VectorField sample(const Grid& g, const std::function<double(double, double)>& fx,
                              const std::function<double(double, double)>& fy) {
        VectorField out(g);
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i) {
                out.x(i, j) = fx(g.x(i), g.y(j));
                out.y(i, j) = fy(g.x(i), g.y(j));
            }
        return out;
    }

    const Grid& grid() const { return grid_; }
    double& x(int i, int j) { return x_[grid_.index(i, j)]; }
    double x(int i, int j) const { return x_[grid_.index(i, j)]; }
    double& y(int i, int j) { return y_[grid_.index(i, j)]; }
    double y(int i, int j) const { return y_[grid_.index(i, j)]; }
    std::vector<double>& xdata() { return x_; }
    const std::vector<double>& xdata() const { return x_; }
    std::vector<double>& ydata() { return y_; }
    const std::vector<double>& ydata() const { return y_; }

    ScalarField component(int c) const {
        ScalarField out(grid_);
        out.data() = (c == 0) ? x_ : y_;
        return out;
    }

    bool is_finite() const {
        for (double v : x_)
            if (!std::isfinite(v)) return false;
        for (double v : y_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        for (std::size_t k = 0; k < x_.size(); ++k) {
            x_[k] += o.x_[k];
            y_[k] += o.y_[k];
        }
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        for (std::size_t k = 0; k < x_.size(); ++k) {
            x_[k] -= o.x_[k];
            y_[k] -= o.y_[k];
        }
        return *this;
    }
    VectorField& operator*=(double s) {
        for (double& v : x_) v *= s;
        for (double& v : y_) v *= s;
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(double s, VectorField a) { return a *= s; }

  private:
    Grid grid_;
    std::vector<double> x_, y_;
};

/// Zero out both components on every boundary node.
inline void mask_no_slip(VectorField& v) {
    const Grid& g = v.grid();
    for (int i = 0; i <= g.nx; ++i) {
        v.x(i, 0) = v.y(i, 0) = 0.0;
        v.x(i, g.ny) = v.y(i, g.ny) = 0.0;
    }
    for (int j = 0; j <= g.ny; ++j) {
        v.x(0, j) = v.y(0, j) = 0.0;
        v.x(g.nx, j) = v.y(g.nx, j) = 0.0;
    }
}

inline bool is_no_slip(const VectorField& v) {
    const Grid& g = v.grid();
    for (int i = 0; i <= g.nx; ++i)
        if (v.x(i, 0) != 0.0 || v.y(i, 0) != 0.0 || v.x(i, g.ny) != 0.0 || v.y(i, g.ny) != 0.0) return false;
    for (int j = 0; j <= g.ny; ++j)
        if (v.x(0, j) != 0.0 || v.y(0, j) != 0.0 || v.x(g.nx, j) != 0.0 || v.y(g.nx, j) != 0.0) return false;
    return true;
}

namespace detail {

// d/dx of one value row: central inside, one-sided second order on the edges.
inline double ddx(const ScalarField& f, int i, int j, double h, int n) {
    if (i == 0) return (-3.0 * f(0, j) + 4.0 * f(1, j) - f(2, j)) / (2.0 * h);
    if (i == n) return (3.0 * f(n, j) - 4.0 * f(n - 1, j) + f(n - 2, j)) / (2.0 * h);
    return (f(i + 1, j) - f(i - 1, j)) / (2.0 * h);
}

inline double ddy(const ScalarField& f, int i, int j, double h, int n) {
    if (j == 0) return (-3.0 * f(i, 0) + 4.0 * f(i, 1) - f(i, 2)) / (2.0 * h);
    if (j == n) return (3.0 * f(i, n) - 4.0 * f(i, n - 1) + f(i, n - 2)) / (2.0 * h);
    return (f(i, j + 1) - f(i, j - 1)) / (2.0 * h);
}

}  // namespace detail

/// Discrete gradient: central differences inside, one-sided second order on the boundary.
inline VectorField grad(const ScalarField& f) {
    const Grid& g = f.grid();
    VectorField out(g);
    const double hx = g.hx(), hy = g.hy();
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            out.x(i, j) = detail::ddx(f, i, j, hx, g.nx);
            out.y(i, j) = detail::ddy(f, i, j, hy, g.ny);
        }
    return out;
}

/// Discrete divergence with the same stencil family as grad.
inline ScalarField div(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g);
    const double hx = g.hx(), hy = g.hy();
    const ScalarField vx = v.component(0), vy = v.component(1);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i)
            out(i, j) = detail::ddx(vx, i, j, hx, g.nx) + detail::ddy(vy, i, j, hy, g.ny);
    return out;
}

/// Composed Laplacian div(grad(f)); agrees with grad/div by construction.
inline ScalarField laplacian(const ScalarField& f) { return div(grad(f)); }

/// Trapezoid-weighted integral over the domain.
inline double integrate(const ScalarField& f) {
    const Grid& g = f.grid();
    double sum = 0.0;
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) sum += g.weight(i, j) * f(i, j);
    return sum;
}

/// ---- Discrete norm library ------------------------------------------------

inline double lq_norm(const ScalarField& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must satisfy q >= 1");
    const Grid& g = f.grid();
    double sum = 0.0;
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) sum += g.weight(i, j) * std::pow(std::abs(f(i, j)), q);
    return std::pow(sum, 1.0 / q);
}

inline double lq_norm(const VectorField& v, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must satisfy q >= 1");
    const Grid& g = v.grid();
    double sum = 0.0;
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i)
            sum += g.weight(i, j) * std::pow(std::hypot(v.x(i, j), v.y(i, j)), q);
    return std::pow(sum, 1.0 / q);
}

inline double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.data()) m = std::max(m, std::abs(x));
    return m;
}

inline double linf_norm(const VectorField& v) {
    double m = 0.0;
    for (std::size_t k = 0; k < v.xdata().size(); ++k)
        m = std::max(m, std::hypot(v.xdata()[k], v.ydata()[k]));
    return m;
}

namespace detail {

// All derivative fields of f up to order k (k <= 2), first entry is f itself.
// Mixed second derivatives appear once per ordering, matching the Frobenius
// convention |D^2 f|^2 = sum_ij |d_i d_j f|^2.
inline std::vector<ScalarField> derivative_stack(const ScalarField& f, int k) {
    if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
    std::vector<ScalarField> out;
    out.push_back(f);
    if (k >= 1) {
        VectorField g1 = grad(f);
        out.push_back(g1.component(0));
        out.push_back(g1.component(1));
        if (k == 2) {
            VectorField gx = grad(out[1]);
            VectorField gy = grad(out[2]);
            out.push_back(gx.component(0));
            out.push_back(gx.component(1));
            out.push_back(gy.component(0));
            out.push_back(gy.component(1));
        }
    }
    return out;
}

}  // namespace detail

/// Discrete H^k norm, k <= 2: sqrt of summed squared L^2 norms of derivatives.
inline double hk_norm(const ScalarField& f, int k) {
    double sum = 0.0;
    for (const ScalarField& d : detail::derivative_stack(f, k)) {
        const double n = lq_norm(d, 2.0);
        sum += n * n;
    }
    return std::sqrt(sum);
}

inline double hk_norm(const VectorField& v, int k) {
    const double nx = hk_norm(v.component(0), k);
    const double ny = hk_norm(v.component(1), k);
    return std::sqrt(nx * nx + ny * ny);
}

/// Discrete W^{k,q} norm, k <= 2: (sum of L^q norms^q of derivatives)^{1/q}.
inline double wkq_norm(const ScalarField& f, int k, double q) {
    double sum = 0.0;
    for (const ScalarField& d : detail::derivative_stack(f, k)) sum += std::pow(lq_norm(d, q), q);
    return std::pow(sum, 1.0 / q);
}

inline double wkq_norm(const VectorField& v, int k, double q) {
    const double a = std::pow(wkq_norm(v.component(0), k, q), q);
    const double b = std::pow(wkq_norm(v.component(1), k, q), q);
    return std::pow(a + b, 1.0 / q);
}

/// ---- Bounded mean oscillation ----------------------------------------------

/// Default radius set {2h, 4h, lx/8, lx/4} with h = max(hx, hy).
inline std::vector<double> default_bmo_radii(const Grid& g) {
    const double h = std::max(g.hx(), g.hy());
    std::vector<double> r = {2.0 * h, 4.0 * h, g.lx / 8.0, g.lx / 4.0};
    const double rmax = std::max(g.lx, g.ly);
    for (double& x : r) x = std::min(x, rmax);
    return r;
}

/// Discrete BMO seminorm: max over nodes x and supplied radii r of the
/// quadrature-weighted mean of |f - mean(f)| over nodes within distance r of x.
/// A lower bound of the continuum seminorm by construction.
inline double bmo_seminorm(const ScalarField& f, std::span<const double> radii) {
    if (radii.empty()) throw std::invalid_argument("bmo_seminorm: radii list must be nonempty");
    const Grid& g = f.grid();
    const double rmax_allowed = std::max(g.lx, g.ly);
    for (double r : radii)
        if (!(r > 0.0) || r > rmax_allowed)
            throw std::invalid_argument("bmo_seminorm: radii must lie in (0, max(lx, ly)]");

    const double hx = g.hx(), hy = g.hy();
    double best = 0.0;
    for (double r : radii) {
        const int di = static_cast<int>(std::ceil(r / hx));
        const int dj = static_cast<int>(std::ceil(r / hy));
        const double r2 = r * r;
        for (int jc = 0; jc <= g.ny; ++jc) {
            for (int ic = 0; ic <= g.nx; ++ic) {
                const int i0 = std::max(0, ic - di), i1 = std::min(g.nx, ic + di);
                const int j0 = std::max(0, jc - dj), j1 = std::min(g.ny, jc + dj);
                double wsum = 0.0, fsum = 0.0;
                for (int j = j0; j <= j1; ++j) {
                    const double dy = (j - jc) * hy;
                    for (int i = i0; i <= i1; ++i) {
                        const double dx = (i - ic) * hx;
                        if (dx * dx + dy * dy > r2) continue;
                        const double w = g.weight(i, j);
                        wsum += w;
                        fsum += w * f(i, j);
                    }
                }
                if (wsum <= 0.0) continue;
                const double mean = fsum / wsum;
                double osc = 0.0;
                for (int j = j0; j <= j1; ++j) {
                    const double dy = (j - jc) * hy;
                    for (int i = i0; i <= i1; ++i) {
                        const double dx = (i - ic) * hx;
                        if (dx * dx + dy * dy > r2) continue;
                        osc += g.weight(i, j) * std::abs(f(i, j) - mean);
                    }
                }
                best = std::max(best, osc / wsum);
            }
        }
    }
    return best;
}

inline double bmo_seminorm(const ScalarField& f) {
    const auto radii = default_bmo_radii(f.grid());
    return bmo_seminorm(f, radii);
}

/// BMO norm ||f||_BMO = ||f||_L2 + [f]_BMO.
inline double bmo_norm(const ScalarField& f, std::span<const double> radii) {
    return lq_norm(f, 2.0) + bmo_seminorm(f, radii);
}

inline double bmo_norm(const ScalarField& f) {
    const auto radii = default_bmo_radii(f.grid());
    return bmo_norm(f, radii);
}

/// ---- Interpolation ----------------------------------------------------------

namespace detail {

struct CellLocation {
    int i, j;        // lower-left node of the containing cell
    double fx, fy;   // local coordinates in [0,1]
};

inline CellLocation locate(const Grid& g, double px, double py) {
    const double hx = g.hx(), hy = g.hy();
    double sx = px / hx, sy = py / hy;
    int i = std::clamp(static_cast<int>(std::floor(sx)), 0, g.nx - 1);
    int j = std::clamp(static_cast<int>(std::floor(sy)), 0, g.ny - 1);
    double fx = std::clamp(sx - i, 0.0, 1.0);
    double fy = std::clamp(sy - j, 0.0, 1.0);
    return {i, j, fx, fy};
}

}  // namespace detail

/// Plain bilinear sample at a point (clamped into the domain rectangle).
inline double sample_bilinear(const ScalarField& f, double px, double py) {
    const auto c = detail::locate(f.grid(), px, py);
    const double f00 = f(c.i, c.j), f10 = f(c.i + 1, c.j);
    const double f01 = f(c.i, c.j + 1), f11 = f(c.i + 1, c.j + 1);
    return (1 - c.fx) * (1 - c.fy) * f00 + c.fx * (1 - c.fy) * f10 + (1 - c.fx) * c.fy * f01 +
           c.fx * c.fy * f11;
}

/// Monotone bilinear sample: result clamped to the local cell min/max, which
/// enforces positivity and a discrete maximum principle under rounding.
inline double sample_bilinear_clipped(const ScalarField& f, double px, double py) {
    const auto c = detail::locate(f.grid(), px, py);
    const double f00 = f(c.i, c.j), f10 = f(c.i + 1, c.j);
    const double f01 = f(c.i, c.j + 1), f11 = f(c.i + 1, c.j + 1);
    const double val = (1 - c.fx) * (1 - c.fy) * f00 + c.fx * (1 - c.fy) * f10 +
                       (1 - c.fx) * c.fy * f01 + c.fx * c.fy * f11;
    const double lo = std::min(std::min(f00, f10), std::min(f01, f11));
    const double hi = std::max(std::max(f00, f10), std::max(f01, f11));
    return std::clamp(val, lo, hi);
}

inline std::array<double, 2> sample_bilinear(const VectorField& v, double px, double py) {
    const auto c = detail::locate(v.grid(), px, py);
    const double w00 = (1 - c.fx) * (1 - c.fy), w10 = c.fx * (1 - c.fy);
    const double w01 = (1 - c.fx) * c.fy, w11 = c.fx * c.fy;
    return {w00 * v.x(c.i, c.j) + w10 * v.x(c.i + 1, c.j) + w01 * v.x(c.i, c.j + 1) +
                w11 * v.x(c.i + 1, c.j + 1),
            w00 * v.y(c.i, c.j) + w10 * v.y(c.i + 1, c.j) + w01 * v.y(c.i, c.j + 1) +
                w11 * v.y(c.i + 1, c.j + 1)};
}

}  // namespace ptns
