#include "polydiag/quotient.hpp"

namespace polydiag {

RationalMatrix pseudoinverse(const BasisMatrix& d) {
    RationalMatrix out(d.cols(), d.rows());
    for (std::size_t k = 0; k < d.cols(); ++k) {
        Int support = 0;
        for (std::size_t i = 0; i < d.rows(); ++i) support += d(i, k) != 0;
        if (support == 0) throw InvalidArgument("basis matrix has a zero column");
        for (std::size_t i = 0; i < d.rows(); ++i) out(k, i) = Rational(d(i, k), support);
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("incompatible matrix shapes");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == Rational(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
    return out;
}

RationalMatrix to_rational(const BasisMatrix& d) {
    RationalMatrix out(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t k = 0; k < d.cols(); ++k) out(i, k) = Int{d(i, k)};
    return out;
}

RationalMatrix quotient_matrix(const IntegerMatrix& m, const ColoringVector& c) {
    if (c.size() != m.size()) throw InvalidArgument("coloring length differs from matrix size");
    if (!is_invariant(m, c)) throw InvalidArgument("coloring " + c.str() + " is not invariant under the matrix");
    BasisMatrix d = basis_of(c);
    RationalMatrix dr = to_rational(d);
    RationalMatrix md = multiply(to_rational(m), dr);
    RationalMatrix mc = multiply(pseudoinverse(d), md);
    if (!(multiply(dr, mc) == md)) throw std::logic_error("quotient matrix fails M*D == D*M_c");
    return mc;
}

IntegerMatrix clear_denominators(const RationalMatrix& r, Int* factor) {
    if (r.rows() != r.cols()) throw InvalidArgument("matrix is not square");
    Int scale = 1;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) scale = lcm(scale, r(i, j).den());
    IntegerMatrix out(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = checked_mul(r(i, j).num(), scale / r(i, j).den());
    if (factor) *factor = scale;
    return out;
}

ColoringVector lift(const ColoringVector& c, const ColoringVector& e) {
    if (e.size() != dimension(c)) throw InvalidArgument("quotient coloring length differs from subspace dimension");
    std::vector<int> labels(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        int color = c[i] > 0 ? c[i] : -c[i];
        int sign = c[i] > 0 ? 1 : -1;
        labels[i] = sign * e[static_cast<std::size_t>(color - 1)];
    }
    return canonicalize(labels);
}

std::vector<ColoringVector> nested_invariants(const IntegerMatrix& m, const ColoringVector& c, EnumerationMode mode) {
    if (dimension(c) == 0) return {};
    RationalMatrix mc = quotient_matrix(m, c);
    return enumerate_all(clear_denominators(mc), mode);
}

}  // namespace polydiag
