#pragma once

// Cameras, projection centers and projective points: the geometric raw data
// of a reconstruction problem.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace critloci {

/// Point of P^k stored with its first nonzero coordinate scaled to 1, so
/// equality is plain coordinate comparison.
template <class K>
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<K> coords) : h_(std::move(coords)) {
        int lead = -1;
        for (size_t i = 0; i < h_.size(); ++i)
            if (!h_[i].is_zero()) { lead = static_cast<int>(i); break; }
        if (lead < 0) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
        K inv = h_[lead].inverse();
        for (auto& c : h_) c = c * inv;
    }

    static ProjectivePoint from_ints(const std::vector<long>& v) {
        std::vector<K> c;
        c.reserve(v.size());
        for (long x : v) c.push_back(K(x));
        return ProjectivePoint(std::move(c));
    }

    int dim() const { return static_cast<int>(h_.size()) - 1; }
    const std::vector<K>& coords() const { return h_; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.h_ == b.h_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }

    /// "(a:b:c)" with denominators cleared and primitive integer entries when
    /// the field is Q; field values verbatim otherwise.
    std::string str() const {
        std::ostringstream os;
        os << "(";
        if constexpr (!K::is_prime_field) {
            mpz_class lcm_den = 1;
            for (const auto& c : h_) lcm_den = lcm(lcm_den, c.raw().get_den());
            std::vector<mpz_class> ints;
            mpz_class g = 0;
            for (const auto& c : h_) {
                mpz_class z = c.raw().get_num() * (lcm_den / c.raw().get_den());
                g = gcd(g, z);
                ints.push_back(z);
            }
            if (g == 0) g = 1;
            for (size_t i = 0; i < ints.size(); ++i) {
                if (i) os << ":";
                os << mpz_class(ints[i] / g).get_str();
            }
        } else {
            for (size_t i = 0; i < h_.size(); ++i) {
                if (i) os << ":";
                os << h_[i].str();
            }
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<K> h_;
};

/// Kernel of a camera: spanning basis plus the linear forms cutting it out.
template <class K>
struct Center {
    std::vector<std::vector<K>> basis; // k-h vectors spanning the kernel
    std::vector<std::vector<K>> forms; // h+1 linear forms (the camera rows)

    int projective_dim() const { return static_cast<int>(basis.size()) - 1; }

    bool contains(const ProjectivePoint<K>& p) const {
        for (const auto& f : forms) {
            K v = K::zero();
            for (size_t i = 0; i < f.size(); ++i) v += f[i] * p.coords()[i];
            if (!v.is_zero()) return false;
        }
        return true;
    }
};

/// Full-rank (h+1) x (k+1) matrix inducing P^k --> P^h away from its center.
template <class K>
class Camera {
public:
    static Camera make(Mat<K> matrix) {
        Camera cam;
        cam.m_ = std::move(matrix);
        cam.h_ = cam.m_.rows() - 1;
        cam.k_ = cam.m_.cols() - 1;
        if (cam.h_ > cam.k_ - 1)
            throw std::invalid_argument("Camera: target dimension too large for a projection");
        if (rank_kernel(cam.m_).rank != cam.h_ + 1)
            throw std::invalid_argument("Camera: degenerate camera (rank below h+1)");
        return cam;
    }

    static Camera from_ints(const std::vector<std::vector<long>>& rows) {
        std::vector<std::vector<K>> conv;
        for (const auto& r : rows) {
            std::vector<K> row;
            for (long x : r) row.push_back(K(x));
            conv.push_back(std::move(row));
        }
        return make(Mat<K>::from_rows(conv));
    }

    int h() const { return h_; }
    int k() const { return k_; }
    const Mat<K>& matrix() const { return m_; }

    Center<K> center() const {
        Center<K> c;
        c.basis = rank_kernel(m_).kernel;
        for (int i = 0; i < m_.rows(); ++i) c.forms.push_back(m_.row(i));
        return c;
    }

    /// Image point, or nullopt when p lies in the center.
    std::optional<ProjectivePoint<K>> apply(const ProjectivePoint<K>& p) const {
        if (p.dim() != k_) throw std::invalid_argument("Camera::apply: dimension mismatch");
        std::vector<K> img = mat_vec(m_, p.coords());
        for (const auto& c : img)
            if (!c.is_zero()) return ProjectivePoint<K>(img);
        return std::nullopt;
    }

    /// Rows of the camera applied to ring variables: the linear forms Q(x).
    std::vector<Poly<K>> linear_forms(const RingPtr& ring, int var_offset = 0) const {
        std::vector<Poly<K>> out;
        for (int i = 0; i <= h_; ++i) {
            Poly<K> f = Poly<K>::zero(ring);
            for (int j = 0; j <= k_; ++j)
                if (!m_.at(i, j).is_zero())
                    f += Poly<K>::term(ring, Monomial::var(var_offset + j), m_.at(i, j));
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    Mat<K> m_;
    int h_ = 0, k_ = 0;
};

/// Two matched n-tuples of cameras (Q_j, P_j): P^k --> P^{h_j}.
template <class K>
struct ProjectionSetup {
    int k = 0;
    std::vector<int> hs;
    std::vector<Camera<K>> Q, P;
    std::vector<Center<K>> q_centers, p_centers;

    int n() const { return static_cast<int>(hs.size()); }
    int sum_h() const {
        int s = 0;
        for (int h : hs) s += h;
        return s;
    }
};

template <class K>
ProjectionSetup<K> make_setup(std::vector<Camera<K>> Q, std::vector<Camera<K>> P) {
    if (Q.empty() || Q.size() != P.size())
        throw std::invalid_argument("make_setup: need matching nonempty camera lists");
    ProjectionSetup<K> s;
    s.k = Q[0].k();
    for (size_t j = 0; j < Q.size(); ++j) {
        if (Q[j].k() != s.k || P[j].k() != s.k)
            throw std::invalid_argument("make_setup: cameras disagree on source dimension");
        if (Q[j].h() != P[j].h())
            throw std::invalid_argument("make_setup: Q_j and P_j disagree on target dimension");
        s.hs.push_back(Q[j].h());
        s.q_centers.push_back(Q[j].center());
        s.p_centers.push_back(P[j].center());
    }
    s.Q = std::move(Q);
    s.P = std::move(P);
    return s;
}

/// Swaps the roles of every P_j and Q_j.
template <class K>
ProjectionSetup<K> swapped(const ProjectionSetup<K>& s) {
    return make_setup(s.P, s.Q);
}

/// Restriction to a sorted subset of view indices (0-based).
template <class K>
ProjectionSetup<K> sub_setup(const ProjectionSetup<K>& s, const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("sub_setup: empty view subset");
    validate_minor_index(indices, s.n());
    std::vector<Camera<K>> Q, P;
    for (int i : indices) {
        Q.push_back(s.Q[i]);
        P.push_back(s.P[i]);
    }
    return make_setup(std::move(Q), std::move(P));
}

/// True iff all pairs of Q-centers are disjoint (stacked camera matrices of
/// any two views have full column rank).
template <class K>
bool centers_pairwise_disjoint(const ProjectionSetup<K>& s) {
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j) {
            const auto& a = s.Q[i].matrix();
            const auto& b = s.Q[j].matrix();
            Mat<K> stacked(a.rows() + b.rows(), s.k + 1);
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c <= s.k; ++c) stacked.at(r, c) = a.at(r, c);
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c <= s.k; ++c) stacked.at(a.rows() + r, c) = b.at(r, c);
            if (rank_kernel(stacked).rank < s.k + 1) return false;
        }
    return true;
}

} // namespace critloci
