#include "lamina/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lamina {

template <int D>
void sym_eigen(const Mat<D>& A, Vec<D>& eigenvalues, Mat<D>& eigenvectors) {
    Mat<D> a = sym_part(A);
    Mat<D> v = Mat<D>::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int p = 0; p < D; ++p)
            for (int q = p + 1; q < D; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < D; ++p) {
            for (int q = p + 1; q < D; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < D; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < D; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < D; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::array<int, D> order;
    for (int i = 0; i < D; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
    for (int i = 0; i < D; ++i) {
        eigenvalues[i] = a(order[i], order[i]);
        for (int k = 0; k < D; ++k) eigenvectors(k, i) = v(k, order[i]);
    }
}

template <int D>
Vec<D> solve_spd_or_pinv(const Mat<D>& G, const Vec<D>& b, bool* rank_deficient) {
    if (rank_deficient) *rank_deficient = false;
    Vec<D> eval;
    Mat<D> evec;
    sym_eigen(G, eval, evec);
    double emax = std::max(std::abs(eval[0]), std::abs(eval[D - 1]));
    double tol = emax * 1e-12;
    Vec<D> w{};
    for (int i = 0; i < D; ++i) {
        double bi = 0;
        for (int k = 0; k < D; ++k) bi += evec(k, i) * b[k];
        if (eval[i] > tol) {
            for (int k = 0; k < D; ++k) w[k] += evec(k, i) * bi / eval[i];
        } else if (rank_deficient) {
            *rank_deficient = true;
        }
    }
    return w;
}

template void sym_eigen<2>(const Mat<2>&, Vec<2>&, Mat<2>&);
template void sym_eigen<3>(const Mat<3>&, Vec<3>&, Mat<3>&);
template Vec<2> solve_spd_or_pinv<2>(const Mat<2>&, const Vec<2>&, bool*);
template Vec<3> solve_spd_or_pinv<3>(const Mat<3>&, const Vec<3>&, bool*);

}  // namespace lamina
