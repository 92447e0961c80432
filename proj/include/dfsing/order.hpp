#ifndef DFSING_ORDER_HPP
#define DFSING_ORDER_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dfsing/errors.hpp"

namespace dfsing {

// Exponent vector in N^n, stored densely.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& u) {
    return std::accumulate(u.begin(), u.end(), 0);
}

// u divides v componentwise (x^u | x^v).
inline bool divides(const ExpVec& u, const ExpVec& v) {
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

inline ExpVec vec_add(const ExpVec& u, const ExpVec& v) {
    ExpVec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
    return w;
}

// requires v <= u componentwise
inline ExpVec vec_sub(const ExpVec& u, const ExpVec& v) {
    ExpVec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
    return w;
}

inline ExpVec vec_lcm(const ExpVec& u, const ExpVec& v) {
    ExpVec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
    return w;
}

inline bool is_zero_vec(const ExpVec& u) {
    return std::all_of(u.begin(), u.end(), [](int e) { return e == 0; });
}

// Graded lexicographic with x_n (resp. d_n) highest: degree first, then the
// rightmost differing coordinate decides.
inline bool grlex_less(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_less(a, b); }
};

// The fixed graded lexicographic order on d-exponents (d_n highest).
struct MonomialOrder {
    enum class Kind { GrLex };
    Kind kind = Kind::GrLex;

    bool less(const ExpVec& a, const ExpVec& b) const { return grlex_less(a, b); }
};

// All u in N^n with |u| <= m, ascending in grlex.
std::vector<ExpVec> exponents_up_to(int nvars, int m);

inline std::string exp_to_string(const ExpVec& u) {
    std::string s = "(";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(u[i]);
    }
    return s + ")";
}

} // namespace dfsing

#endif
