#ifndef FORESTKIT_FOREST_MATRIX_HPP
#define FORESTKIT_FOREST_MATRIX_HPP

#include "forestkit/graph.hpp"
#include "forestkit/matrix.hpp"

#include <stdexcept>

namespace forestkit {

/// Largest order for which exact rational mode is the default.
inline constexpr std::size_t kExactModeMaxOrder = 12;

inline ScalarMode default_mode(std::size_t order) noexcept {
    return order <= kExactModeMaxOrder ? ScalarMode::ExactRational : ScalarMode::Float64;
}

/// Total in-forest weight f, in-forest matrix F and proximity Q = F / f.
template <class T>
struct ForestMatrices {
    T f;
    DenseMatrix<T> F;
    DenseMatrix<T> Q;
    static constexpr ScalarMode mode = ScalarTraits<T>::mode;
};

/// Q = (I + L)^-1, f = det(I + L), F = f Q. I + L is always invertible, so a
/// singular pivot here means the Laplacian was built wrong.
template <class T>
ForestMatrices<T> forest_matrices(const WeightedMultiDigraph& g) {
    const auto n = g.vertex_count();
    const auto shifted = DenseMatrix<T>::identity(n) + laplacian_as<T>(g);
    ForestMatrices<T> fm;
    try {
        fm.Q = invert(shifted);
    } catch (const Error& e) {
        throw std::logic_error(std::string("I + L reported singular: ") + e.what());
    }
    fm.f = determinant(shifted);
    fm.F = fm.Q * fm.f;
    return fm;
}

template <class T>
DenseMatrix<T> proximity(const WeightedMultiDigraph& g) {
    return forest_matrices<T>(g).Q;
}

} // namespace forestkit

#endif
