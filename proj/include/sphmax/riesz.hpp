#pragma once

// Riesz potential I g(x) = int g(z) |x-z|^{1-n} dz on the grid: discrete
// convolution with the kernel tabulated over offsets, the singular cell
// replaced by the exact cell average of the kernel. Direct summation is the
// reference; an FFTW-backed circular convolution reproduces it to 1e-8 and
// is used for large grids.

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#include "sphmax/common.hpp"
#include "sphmax/grid.hpp"

namespace sphmax {

// int_{[-1,1]^3} |y|^{-2} dy, frozen from 25-digit quadrature.
inline constexpr double cube_kernel_integral_3d = 15.348248444887464;

// Exact average of |y|^{1-n} over the cell [-h/2, h/2]^n.
inline double riesz_singular_cell_average(int n, double h) {
    require(h > 0.0, "riesz: spacing must be positive");
    switch (n) {
        case 1: return 1.0;
        case 2: return 4.0 * std::log(1.0 + std::sqrt(2.0)) / h;
        case 3: return cube_kernel_integral_3d / (2.0 * h * h);
        default: throw config_error("riesz: dimension must be 1-3");
    }
}

namespace detail {

// Kernel over the offset cube [-(m-1), m-1]^n, flattened with axis size
// 2m-1, including the cell-volume factor h^n.
inline std::vector<double> riesz_kernel_table(int n, int m, double h) {
    const int w = 2 * m - 1;
    std::size_t total = 1;
    for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(w);
    std::vector<double> K(total);
    const double vol = std::pow(h, n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        double r2 = 0.0;
        bool origin = true;
        for (int a = 0; a < n; ++a) {
            const int off = static_cast<int>(rest % w) - (m - 1);
            rest /= w;
            r2 += static_cast<double>(off) * off;
            if (off != 0) origin = false;
        }
        if (origin) {
            K[idx] = riesz_singular_cell_average(n, h) * vol;
        } else {
            K[idx] = std::pow(std::sqrt(r2) * h, 1.0 - n) * vol;
        }
    }
    return K;
}

inline int next_fft_size(int v) {
    for (;; ++v) {
        int r = v;
        for (int p : {2, 3, 5, 7, 11, 13}) {
            while (r % p == 0) r /= p;
        }
        if (r == 1) return v;
    }
}

}  // namespace detail

inline GridFunction riesz_potential_direct(const GridFunction& g) {
    const int m = g.m;
    const int w = 2 * m - 1;
    const std::vector<double> K = detail::riesz_kernel_table(g.n, m, g.h());
    GridFunction out(g.n, m, g.L);

    const auto& gv = g.values;
    if (g.n == 1) {
        for (int i = 0; i < m; ++i) {
            KahanSum s;
            for (int j = 0; j < m; ++j) s.add(gv[j] * K[static_cast<std::size_t>(i - j + m - 1)]);
            out.values[static_cast<std::size_t>(i)] = s.value();
        }
    } else if (g.n == 2) {
        for (int i0 = 0; i0 < m; ++i0) {
            for (int i1 = 0; i1 < m; ++i1) {
                KahanSum s;
                for (int j0 = 0; j0 < m; ++j0) {
                    const std::size_t krow = static_cast<std::size_t>(i0 - j0 + m - 1) * w + (i1 + m - 1);
                    const std::size_t grow = static_cast<std::size_t>(j0) * m;
                    for (int j1 = 0; j1 < m; ++j1) s.add(gv[grow + j1] * K[krow - j1]);
                }
                out.values[static_cast<std::size_t>(i0) * m + i1] = s.value();
            }
        }
    } else {
        for (int i0 = 0; i0 < m; ++i0) {
            for (int i1 = 0; i1 < m; ++i1) {
                for (int i2 = 0; i2 < m; ++i2) {
                    KahanSum s;
                    for (int j0 = 0; j0 < m; ++j0) {
                        for (int j1 = 0; j1 < m; ++j1) {
                            const std::size_t kplane =
                                ((static_cast<std::size_t>(i0 - j0 + m - 1) * w) + (i1 - j1 + m - 1)) * w +
                                (i2 + m - 1);
                            const std::size_t gplane = (static_cast<std::size_t>(j0) * m + j1) * m;
                            for (int j2 = 0; j2 < m; ++j2) s.add(gv[gplane + j2] * K[kplane - j2]);
                        }
                    }
                    out.values[(static_cast<std::size_t>(i0) * m + i1) * m + i2] = s.value();
                }
            }
        }
    }
    return out;
}

inline GridFunction riesz_potential_fft(const GridFunction& g) {
    const int n = g.n;
    const int m = g.m;
    const int w = 2 * m - 1;
    const int P = detail::next_fft_size(w);
    const std::vector<double> K = detail::riesz_kernel_table(n, m, g.h());

    int dims[3] = {P, P, P};
    std::size_t real_total = 1;
    for (int a = 0; a < n; ++a) real_total *= static_cast<std::size_t>(P);
    const int last_c = P / 2 + 1;
    std::size_t cplx_total = real_total / P * static_cast<std::size_t>(last_c);

    double* sig = fftw_alloc_real(real_total);
    double* ker = fftw_alloc_real(real_total);
    fftw_complex* sig_f = fftw_alloc_complex(cplx_total);
    fftw_complex* ker_f = fftw_alloc_complex(cplx_total);
    require(sig && ker && sig_f && ker_f, "riesz: allocation failed");

    std::memset(sig, 0, real_total * sizeof(double));
    std::memset(ker, 0, real_total * sizeof(double));

    auto pad_index = [&](const int* ijk) {
        std::size_t idx = 0;
        for (int a = 0; a < n; ++a) idx = idx * P + static_cast<std::size_t>(ijk[a]);
        return idx;
    };

    {
        int ijk[3] = {0, 0, 0};
        const std::size_t total = g.node_count();
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int a = n - 1; a >= 0; --a) {
                ijk[a] = static_cast<int>(rest % m);
                rest /= m;
            }
            sig[pad_index(ijk)] = g.values[idx];
        }
    }
    {
        std::size_t ktotal = 1;
        for (int a = 0; a < n; ++a) ktotal *= static_cast<std::size_t>(w);
        int ijk[3] = {0, 0, 0};
        for (std::size_t idx = 0; idx < ktotal; ++idx) {
            std::size_t rest = idx;
            for (int a = n - 1; a >= 0; --a) {
                const int off = static_cast<int>(rest % w) - (m - 1);
                rest /= w;
                ijk[a] = (off % P + P) % P;
            }
            ker[pad_index(ijk)] = K[idx];
        }
    }

    fftw_plan pf1 = fftw_plan_dft_r2c(n, dims, sig, sig_f, FFTW_ESTIMATE);
    fftw_plan pf2 = fftw_plan_dft_r2c(n, dims, ker, ker_f, FFTW_ESTIMATE);
    fftw_execute(pf1);
    fftw_execute(pf2);
    fftw_destroy_plan(pf1);
    fftw_destroy_plan(pf2);

    const double scale = 1.0 / static_cast<double>(real_total);
    for (std::size_t i = 0; i < cplx_total; ++i) {
        const double re = sig_f[i][0] * ker_f[i][0] - sig_f[i][1] * ker_f[i][1];
        const double im = sig_f[i][0] * ker_f[i][1] + sig_f[i][1] * ker_f[i][0];
        sig_f[i][0] = re * scale;
        sig_f[i][1] = im * scale;
    }

    fftw_plan pb = fftw_plan_dft_c2r(n, dims, sig_f, sig, FFTW_ESTIMATE);
    fftw_execute(pb);
    fftw_destroy_plan(pb);

    GridFunction out(n, m, g.L);
    {
        int ijk[3] = {0, 0, 0};
        const std::size_t total = out.node_count();
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int a = n - 1; a >= 0; --a) {
                ijk[a] = static_cast<int>(rest % m);
                rest /= m;
            }
            out.values[idx] = sig[pad_index(ijk)];
        }
    }

    fftw_free(sig);
    fftw_free(ker);
    fftw_free(sig_f);
    fftw_free(ker_f);
    return out;
}

// Reference semantics: plain direct summation.
inline GridFunction riesz_potential(const GridFunction& g) { return riesz_potential_direct(g); }

// Size-dispatched variant for experiment drivers.
inline GridFunction riesz_potential_auto(const GridFunction& g, std::size_t direct_limit = 20000) {
    return g.node_count() <= direct_limit ? riesz_potential_direct(g) : riesz_potential_fft(g);
}

}  // namespace sphmax
