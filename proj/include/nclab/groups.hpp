#pragma once
//
// groups.hpp — finite group tables with complete unitary irreducible
// representation data. Element 0 is the identity. Bundled instances: Z_N,
// Z2xZ2, S3, S4, D4, Q8; user-supplied groups load from JSON elsewhere.
//

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nclab {

struct GroupTable {
    int order = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        throw std::invalid_argument("group: element without inverse");
    }

    // identity, closure, associativity, inverses
    void validate() const {
        if (order < 1 || table.size() != static_cast<std::size_t>(order))
            throw std::invalid_argument("group: bad table shape");
        for (const auto& row : table) {
            if (row.size() != static_cast<std::size_t>(order))
                throw std::invalid_argument("group: bad table shape");
            for (int v : row)
                if (v < 0 || v >= order) throw std::invalid_argument("group: entry out of range");
        }
        for (int a = 0; a < order; ++a)
            if (mul(0, a) != a || mul(a, 0) != a)
                throw std::invalid_argument("group: element 0 is not an identity");
        for (int a = 0; a < order; ++a) inverse(a);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("group: table is not associative");
    }
};

struct Irrep {
    int dim = 1;
    std::vector<Eigen::MatrixXcd> mats;  // one unitary matrix per element
};

struct GroupData {
    std::string name;
    GroupTable table;
    std::vector<Irrep> irreps;

    // Peter-Weyl completeness: sum of squared dimensions matches the order
    void validate() const {
        table.validate();
        int s = 0;
        for (const auto& r : irreps) {
            s += r.dim * r.dim;
            if (r.mats.size() != static_cast<std::size_t>(table.order))
                throw std::invalid_argument("group: irrep matrix count mismatch");
            for (const auto& m : r.mats)
                if (m.rows() != r.dim || m.cols() != r.dim)
                    throw std::invalid_argument("group: irrep matrix shape mismatch");
        }
        if (s != table.order)
            throw std::invalid_argument("group: representation list incomplete (sum d^2 != |G|)");
    }
};

namespace groups {

namespace detail {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

inline int perm_sign(const Perm& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline GroupTable table_from_perms(const std::vector<Perm>& perms) {
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const Perm& p) {
        for (int i = 0; i < n; ++i)
            if (perms[static_cast<std::size_t>(i)] == p) return i;
        throw std::logic_error("perm not found");
    };
    GroupTable t;
    t.order = n;
    t.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index_of(compose(perms[static_cast<std::size_t>(a)], perms[static_cast<std::size_t>(b)]));
    return t;
}

// orthonormal basis of the sum-zero subspace of R^n, as columns
inline Eigen::MatrixXd sum_zero_basis(int n) {
    Eigen::MatrixXd B(n, n - 1);
    B.setZero();
    for (int j = 0; j < n - 1; ++j) {
        for (int i = 0; i <= j; ++i) B(i, j) = 1.0;
        B(j + 1, j) = -static_cast<double>(j + 1);
        B.col(j) /= B.col(j).norm();
    }
    return B;
}

inline Eigen::MatrixXcd standard_rep_matrix(const Perm& p, const Eigen::MatrixXd& B) {
    const int n = static_cast<int>(p.size());
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x < n; ++x) P(p[static_cast<std::size_t>(x)], x) = 1.0;
    Eigen::MatrixXd M = B.transpose() * P * B;
    return M.cast<std::complex<double>>();
}

}  // namespace detail

inline GroupData cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n >= 1");
    GroupData g;
    g.name = "Z" + std::to_string(n);
    g.table.order = n;
    g.table.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    for (int k = 0; k < n; ++k) {
        Irrep r;
        r.dim = 1;
        for (int a = 0; a < n; ++a) {
            Eigen::MatrixXcd m(1, 1);
            double th = 2.0 * std::numbers::pi * k * a / n;
            m(0, 0) = std::complex<double>(std::cos(th), std::sin(th));
            r.mats.push_back(m);
        }
        g.irreps.push_back(std::move(r));
    }
    return g;
}

inline GroupData klein_four() {
    GroupData g;
    g.name = "Z2xZ2";
    g.table.order = 4;
    // element = 2a+b for (a,b) in Z2 x Z2
    g.table.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            Irrep r;
            r.dim = 1;
            for (int e = 0; e < 4; ++e) {
                int a = e / 2, b = e % 2;
                Eigen::MatrixXcd m(1, 1);
                m(0, 0) = ((s * a + t * b) % 2 == 0) ? 1.0 : -1.0;
                r.mats.push_back(m);
            }
            g.irreps.push_back(std::move(r));
        }
    return g;
}

inline GroupData symmetric3() {
    using namespace detail;
    auto perms = all_perms(3);
    GroupData g;
    g.name = "S3";
    g.table = table_from_perms(perms);
    Irrep triv{1, {}}, sgn{1, {}}, std2{2, {}};
    Eigen::MatrixXd B = sum_zero_basis(3);
    for (const auto& p : perms) {
        Eigen::MatrixXcd one(1, 1), sg(1, 1);
        one(0, 0) = 1.0;
        sg(0, 0) = static_cast<double>(perm_sign(p));
        triv.mats.push_back(one);
        sgn.mats.push_back(sg);
        std2.mats.push_back(standard_rep_matrix(p, B));
    }
    g.irreps = {triv, sgn, std2};
    return g;
}

inline GroupData symmetric4() {
    using namespace detail;
    auto perms = all_perms(4);
    GroupData g;
    g.name = "S4";
    g.table = table_from_perms(perms);

    // the action on the three pair-partitions of {0,1,2,3} factors through S3
    auto s3 = symmetric3();
    auto s3perms = all_perms(3);
    const std::array<std::array<int, 4>, 3> partitions = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    auto partition_image = [&](const Perm& p, int idx) {
        const auto& pr = partitions[static_cast<std::size_t>(idx)];
        int a = p[static_cast<std::size_t>(pr[0])], b = p[static_cast<std::size_t>(pr[1])];
        // the image partition is identified by the partner of element 0
        int partner = (a == 0) ? b : (b == 0 ? a : p[static_cast<std::size_t>(pr[2])] == 0
                                                       ? p[static_cast<std::size_t>(pr[3])]
                                                       : (p[static_cast<std::size_t>(pr[3])] == 0
                                                              ? p[static_cast<std::size_t>(pr[2])]
                                                              : -1));
        return partner - 1;  // partitions are indexed by 0's partner (1,2,3)
    };
    auto quotient = [&](const Perm& p) {
        Perm q(3);
        for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(i)] = partition_image(p, i);
        return q;
    };
    auto s3_index = [&](const Perm& q) {
        for (std::size_t i = 0; i < s3perms.size(); ++i)
            if (s3perms[i] == q) return i;
        throw std::logic_error("quotient image not a permutation");
    };

    Irrep triv{1, {}}, sgn{1, {}}, two{2, {}}, std3{3, {}}, std3s{3, {}};
    Eigen::MatrixXd B = sum_zero_basis(4);
    for (const auto& p : perms) {
        Eigen::MatrixXcd one(1, 1), sg(1, 1);
        one(0, 0) = 1.0;
        double sp = static_cast<double>(perm_sign(p));
        sg(0, 0) = sp;
        triv.mats.push_back(one);
        sgn.mats.push_back(sg);
        two.mats.push_back(s3.irreps[2].mats[s3_index(quotient(p))]);
        Eigen::MatrixXcd st = standard_rep_matrix(p, B);
        std3.mats.push_back(st);
        std3s.mats.push_back(sp * st);
    }
    g.irreps = {triv, sgn, two, std3, std3s};
    return g;
}

inline GroupData dihedral4() {
    GroupData g;
    g.name = "D4";
    g.table.order = 8;
    // element = a + 4b for r^a s^b; s r = r^{-1} s
    auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
    g.table.table.assign(8, std::vector<int>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + a2*(-1)^b1} s^{b1+b2}
                    int a = a1 + (b1 ? -a2 : a2);
                    g.table.table[static_cast<std::size_t>(idx(a1, b1))]
                                 [static_cast<std::size_t>(idx(a2, b2))] = idx(a, b1 + b2);
                }
    for (int cr = 0; cr < 2; ++cr)
        for (int cs = 0; cs < 2; ++cs) {
            Irrep r1{1, {}};
            for (int e = 0; e < 8; ++e) {
                int a = e % 4, b = e / 4;
                Eigen::MatrixXcd m(1, 1);
                m(0, 0) = (cr && (a % 2) ? -1.0 : 1.0) * (cs && b ? -1.0 : 1.0);
                r1.mats.push_back(m);
            }
            g.irreps.push_back(std::move(r1));
        }
    Irrep r2{2, {}};
    Eigen::Matrix2cd R, S;
    R << 0.0, -1.0, 1.0, 0.0;
    S << 1.0, 0.0, 0.0, -1.0;
    for (int e = 0; e < 8; ++e) {
        int a = e % 4, b = e / 4;
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
        for (int i = 0; i < a; ++i) m = m * R;
        if (b) m = m * S;
        r2.mats.push_back(m);
    }
    g.irreps.push_back(std::move(r2));
    return g;
}

inline GroupData quaternion8() {
    GroupData g;
    g.name = "Q8";
    g.table.order = 8;
    // elements 1,-1,i,-i,j,-j,k,-k as indices 0..7
    const std::complex<double> I(0.0, 1.0);
    Eigen::Matrix2cd mi, mj;
    mi << I, 0.0, 0.0, -I;
    mj << 0.0, 1.0, -1.0, 0.0;
    std::vector<Eigen::Matrix2cd> reps(8);
    reps[0] = Eigen::Matrix2cd::Identity();
    reps[1] = -reps[0];
    reps[2] = mi;
    reps[3] = -mi;
    reps[4] = mj;
    reps[5] = -mj;
    reps[6] = mi * mj;
    reps[7] = -reps[6];
    auto index_of = [&](const Eigen::Matrix2cd& m) {
        for (int i = 0; i < 8; ++i)
            if ((reps[static_cast<std::size_t>(i)] - m).cwiseAbs().maxCoeff() < 1e-12) return i;
        throw std::logic_error("q8: product not in group");
    };
    g.table.table.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            g.table.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index_of(reps[static_cast<std::size_t>(a)] * reps[static_cast<std::size_t>(b)]);
    // four 1-dim irreps factor through Q8 / {+-1}
    const std::array<std::array<double, 8>, 4> chars = {{{1, 1, 1, 1, 1, 1, 1, 1},
                                                         {1, 1, 1, 1, -1, -1, -1, -1},
                                                         {1, 1, -1, -1, 1, 1, -1, -1},
                                                         {1, 1, -1, -1, -1, -1, 1, 1}}};
    for (const auto& ch : chars) {
        Irrep r{1, {}};
        for (int e = 0; e < 8; ++e) {
            Eigen::MatrixXcd m(1, 1);
            m(0, 0) = ch[static_cast<std::size_t>(e)];
            r.mats.push_back(m);
        }
        g.irreps.push_back(std::move(r));
    }
    Irrep two{2, {}};
    for (int e = 0; e < 8; ++e) two.mats.push_back(reps[static_cast<std::size_t>(e)]);
    g.irreps.push_back(std::move(two));
    return g;
}

// bundled lookup by name
inline GroupData by_name(const std::string& name) {
    if (name == "S3") return symmetric3();
    if (name == "S4") return symmetric4();
    if (name == "D4") return dihedral4();
    if (name == "Q8") return quaternion8();
    if (name == "Z2xZ2") return klein_four();
    if (name.size() > 1 && name[0] == 'Z') {
        int n = std::stoi(name.substr(1));
        return cyclic(n);
    }
    throw std::invalid_argument("unknown group: " + name);
}

}  // namespace groups
}  // namespace nclab
