#include "hkt/lattice_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <fftw3.h>

namespace hkt {

namespace {

int binomial4(int p) {
    static constexpr int table[5] = {1, 4, 6, 4, 1};
    return table[p];
}

// FFTW plans are created once per (N, channels, direction) and reused with fftw_execute_dft.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int N, int howmany, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_tuple(N, howmany, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        const int dims[4] = {N, N, N, N};
        const int V = N * N * N * N;
        std::vector<cplx> scratch(static_cast<std::size_t>(V) * howmany);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_many_dft(4, dims, howmany, buf, nullptr, 1, V, buf, nullptr, 1, V, sign,
                                            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw std::runtime_error("FFTW could not create a plan");
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void transform(std::vector<cplx>& data, int N, int sign) {
    const int V = N * N * N * N;
    const int howmany = static_cast<int>(data.size() / V);
    if (howmany == 0) return;
    fftw_plan plan = PlanCache::instance().get(N, howmany, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

}  // namespace

std::vector<Eigen::MatrixXcd> algebra_basis(int n, Algebra alg) {
    if (n < 1) throw std::invalid_argument("algebra_basis: rank must be positive");
    const cplx I(0, 1);
    const double r2 = std::sqrt(0.5);
    std::vector<Eigen::MatrixXcd> out;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
            s(j, k) = s(k, j) = I * r2;
            out.push_back(s);
            Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
            a(j, k) = r2;
            a(k, j) = -r2;
            out.push_back(a);
        }
    for (int l = 1; l < n; ++l) {
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
        const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) d(j, j) = I * c;
        d(l, l) = -I * (c * l);
        out.push_back(d);
    }
    if (alg == Algebra::u) out.push_back(Eigen::MatrixXcd::Identity(n, n) * (I / std::sqrt(static_cast<double>(n))));
    return out;
}

LatticeField::LatticeField(int N, int n, int degree, Algebra alg)
    : N_(N), n_(n), degree_(degree), alg_(alg) {
    if (N < 1 || n < 1) throw std::invalid_argument("LatticeField: grid and rank must be positive");
    if (degree < 0 || degree > 4) throw std::invalid_argument("LatticeField: degree must be in 0..4");
    comps_ = binomial4(degree);
    sites_ = N * N * N * N;
    data_.assign(static_cast<std::size_t>(comps_) * n * n * sites_, cplx(0, 0));
}

bool LatticeField::same_shape(const LatticeField& o) const {
    return N_ == o.N_ && n_ == o.n_ && degree_ == o.degree_ && alg_ == o.alg_;
}

Eigen::MatrixXcd LatticeField::at(int comp, int site) const {
    Eigen::MatrixXcd m(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(r, c) = entry(comp, r, c, site);
    return m;
}

void LatticeField::set(int comp, int site, const Eigen::MatrixXcd& m) {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("LatticeField::set: wrong matrix size");
    Eigen::MatrixXcd x = 0.5 * (m - m.adjoint());
    if (alg_ == Algebra::su) x -= (x.trace() / static_cast<double>(n_)) * Eigen::MatrixXcd::Identity(n_, n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) entry(comp, r, c, site) = x(r, c);
}

void LatticeField::fill(int comp, const Eigen::MatrixXcd& m) {
    for (int s = 0; s < sites_; ++s) set(comp, s, m);
}

LatticeField& LatticeField::operator+=(const LatticeField& o) {
    if (!same_shape(o)) throw std::invalid_argument("LatticeField: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

LatticeField& LatticeField::operator-=(const LatticeField& o) {
    if (!same_shape(o)) throw std::invalid_argument("LatticeField: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

LatticeField& LatticeField::operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
}

void LatticeField::project_values() {
    for (int comp = 0; comp < comps_; ++comp)
        for (int s = 0; s < sites_; ++s) {
            for (int r = 0; r < n_; ++r) {
                entry(comp, r, r, s) = cplx(0, entry(comp, r, r, s).imag());
                for (int c = r + 1; c < n_; ++c) {
                    const cplx v = 0.5 * (entry(comp, r, c, s) - std::conj(entry(comp, c, r, s)));
                    entry(comp, r, c, s) = v;
                    entry(comp, c, r, s) = -std::conj(v);
                }
            }
            if (alg_ == Algebra::su) {
                double tr = 0;
                for (int r = 0; r < n_; ++r) tr += entry(comp, r, r, s).imag();
                tr /= n_;
                for (int r = 0; r < n_; ++r) entry(comp, r, r, s) -= cplx(0, tr);
            }
        }
}

void LatticeField::band_limit() {
    if (N_ % 2 != 0) return;
    std::vector<cplx> spec = to_spectral(*this);
    const int nyq = N_ / 2;
    const int channels = comps_ * n_ * n_;
    for (int s = 0; s < sites_; ++s) {
        const auto j = site_coords(s);
        if (j[0] != nyq && j[1] != nyq && j[2] != nyq && j[3] != nyq) continue;
        for (int ch = 0; ch < channels; ++ch) spec[static_cast<std::size_t>(ch) * sites_ + s] = 0;
    }
    from_spectral(*this, spec);
}

bool LatticeField::is_spatially_constant(double tol) const {
    const int channels = comps_ * n_ * n_;
    for (int ch = 0; ch < channels; ++ch) {
        const cplx* base = &data_[static_cast<std::size_t>(ch) * sites_];
        for (int s = 1; s < sites_; ++s)
            if (std::abs(base[s] - base[0]) > tol) return false;
    }
    return true;
}

double LatticeField::max_abs() const {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double LatticeField::l2_norm() const {
    double sum = 0;
    for (const auto& v : data_) sum += std::norm(v);
    return std::sqrt(sum / sites_);
}

std::array<int, 4> LatticeField::site_coords(int site) const {
    std::array<int, 4> j{};
    for (int mu = 3; mu >= 0; --mu) {
        j[mu] = site % N_;
        site /= N_;
    }
    return j;
}

int LatticeField::site_index(const std::array<int, 4>& j) const {
    int s = 0;
    for (int mu = 0; mu < 4; ++mu) s = s * N_ + ((j[mu] % N_) + N_) % N_;
    return s;
}

std::array<double, 4> LatticeField::position(int site) const {
    const auto j = site_coords(site);
    return {static_cast<double>(j[0]) / N_, static_cast<double>(j[1]) / N_, static_cast<double>(j[2]) / N_,
            static_cast<double>(j[3]) / N_};
}

int band_radius(int N) { return (N - 1) / 2; }

int signed_wavenumber(int j, int N) {
    if (N % 2 == 0 && j == N / 2) return 0;
    return j <= N / 2 ? j : j - N;
}

std::vector<cplx> to_spectral(const LatticeField& f) {
    std::vector<cplx> out = f.raw();
    transform(out, f.grid(), FFTW_FORWARD);
    const double inv = 1.0 / f.sites();
    for (auto& v : out) v *= inv;
    return out;
}

void from_spectral(LatticeField& f, const std::vector<cplx>& spectrum) {
    if (spectrum.size() != f.raw().size()) throw std::invalid_argument("from_spectral: size mismatch");
    f.raw() = spectrum;
    transform(f.raw(), f.grid(), FFTW_BACKWARD);
    f.project_values();
}

std::array<LatticeField, 4> spectral_gradient(const LatticeField& f) {
    const std::vector<cplx> spec = to_spectral(f);
    const int N = f.grid();
    const int V = f.sites();
    const std::size_t channels = spec.size() / V;
    std::array<LatticeField, 4> out;
    std::vector<std::array<int, 4>> k(V);
    for (int s = 0; s < V; ++s) {
        const auto j = f.site_coords(s);
        for (int mu = 0; mu < 4; ++mu) k[s][mu] = signed_wavenumber(j[mu], N);
    }
    const cplx two_pi_i(0, 2 * std::numbers::pi);
    for (int mu = 0; mu < 4; ++mu) {
        std::vector<cplx> d(spec.size());
        for (std::size_t ch = 0; ch < channels; ++ch)
            for (int s = 0; s < V; ++s) d[ch * V + s] = spec[ch * V + s] * (two_pi_i * static_cast<double>(k[s][mu]));
        out[mu] = LatticeField(N, f.rank(), f.degree(), f.algebra());
        from_spectral(out[mu], d);
    }
    return out;
}

}  // namespace hkt
