#include "su11/relative_dirac.hpp"

#include <stdexcept>

namespace su11 {

namespace {

// Solves the 3-dim linear algebra for the B-orthogonal complement of span(k).
std::vector<LieElement> orthogonal_complement(const std::vector<LieElement>& k) {
    // Collect candidate basis vectors orthogonal to every generator by Gaussian
    // elimination on the 3x|k| constraint system over the exact field.
    std::vector<std::array<AlgNumber, 3>> rows;
    for (const auto& g : k) {
        std::array<AlgNumber, 3> row;
        for (int j = 0; j < 3; ++j) row[j] = killing_form(g, LieElement::basis(j + 1));
        rows.push_back(row);
    }
    // Reduce rows.
    size_t rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        AlgNumber inv = rows[rank][col].inverse();
        for (int j = 0; j < 3; ++j) rows[rank][j] = inv * rows[rank][j];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            AlgNumber f = rows[r][col];
            for (int j = 0; j < 3; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    // Free columns parameterize the null space.
    std::vector<LieElement> p;
    for (int col = 0; col < 3; ++col) {
        bool is_pivot = false;
        for (size_t r = 0; r < rank; ++r)
            if (pivot_col[r] == col) is_pivot = true;
        if (is_pivot) continue;
        LieElement v = LieElement::basis(col + 1);
        for (size_t r = 0; r < rank; ++r)
            v = v - rows[r][col] * LieElement::basis(pivot_col[r] + 1);
        p.push_back(v);
    }
    return p;
}

bool in_span(const LieElement& x, const std::vector<LieElement>& basis) {
    // Gaussian elimination over the exact field.
    std::vector<std::array<AlgNumber, 4>> rows;
    for (int i = 0; i < 3; ++i) {
        std::array<AlgNumber, 4> row{};
        for (size_t j = 0; j < basis.size(); ++j) row[j] = basis[j].coeff[i];
        row[3] = x.coeff[i];
        rows.push_back(row);
    }
    size_t cols = basis.size();
    size_t rank = 0;
    for (size_t col = 0; col < cols; ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        AlgNumber inv = rows[rank][col].inverse();
        for (size_t j = 0; j <= cols; ++j) rows[rank][j] = inv * rows[rank][j];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            AlgNumber f = rows[r][col];
            for (size_t j = 0; j <= cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][3].is_zero()) return false;
    // Rows below rank have zero coefficients; consistency of pivot rows is
    // automatic. Check all-zero rows only.
    for (size_t r = 0; r < rows.size(); ++r) {
        bool zero_coeffs = true;
        for (size_t j = 0; j < cols; ++j)
            if (!rows[r][j].is_zero()) zero_coeffs = false;
        if (zero_coeffs && !rows[r][3].is_zero()) return false;
    }
    return true;
}

}  // namespace

SubalgebraSpec::SubalgebraSpec(std::vector<LieElement> generators) : k_(std::move(generators)) {
    if (k_.empty()) throw std::domain_error("SubalgebraSpec: empty generator set");
    // Gram matrix of B on k must be non-degenerate. Only the 1-dim case is
    // exercised; reject degenerate generators in general via the Gram rank.
    if (k_.size() == 1) {
        if (killing_form(k_[0], k_[0]).is_zero())
            throw std::domain_error("SubalgebraSpec: Killing form degenerates on k");
    } else {
        // For higher dimensions check the Gram determinant (2x2 or 3x3).
        std::array<std::array<AlgNumber, 3>, 3> g{};
        size_t n = k_.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) g[i][j] = killing_form(k_[i], k_[j]);
        AlgNumber det;
        if (n == 2) det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        else
            det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                  g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                  g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        if (det.is_zero())
            throw std::domain_error("SubalgebraSpec: Killing form degenerates on k");
    }
    // Subalgebra check and [k, p] in p.
    for (const auto& a : k_)
        for (const auto& b : k_)
            if (!in_span(bracket(a, b), k_))
                throw std::domain_error("SubalgebraSpec: k is not a subalgebra");
    p_ = orthogonal_complement(k_);
    for (const auto& a : k_)
        for (const auto& b : p_)
            if (!in_span(bracket(a, b), p_))
                throw std::domain_error("SubalgebraSpec: [k,p] not contained in p");
}

ExtElement lambda_g(const LieElement& xi) {
    auto dual = dual_basis();
    ExtElement r;
    AlgNumber c = rat(-1, 4);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            AlgNumber coef =
                killing_form(xi, bracket(LieElement::basis(a + 1), LieElement::basis(b + 1)));
            if (coef.is_zero()) continue;
            r = r + (c * coef) * wedge(ExtElement::from_lie(dual[a]), ExtElement::from_lie(dual[b]));
        }
    return r;
}

namespace {

BasisMask span_mask(const std::vector<LieElement>& basis) {
    // Valid for coordinate subspaces, which is all this artifact constructs.
    BasisMask m = 0;
    for (const auto& v : basis)
        for (int i = 0; i < 3; ++i)
            if (!v.coeff[i].is_zero()) m = BasisMask(m | (1 << i));
    return m;
}

}  // namespace

LambdaSplit lambda_split(const SubalgebraSpec& k, const LieElement& xi) {
    ExtElement full = lambda_g(xi);
    BasisMask pm = span_mask(k.complement());
    LambdaSplit s;
    s.lambda_p = full.restrict_to(pm);
    s.lambda_k = full - s.lambda_p;
    return s;
}

RelativeDirac relative_dirac(const SubalgebraSpec& k) {
    if (k.generators().size() != 1)
        throw std::domain_error("relative_dirac: only 1-dimensional k is supported");
    const LieElement kgen = k.generators()[0];

    // The dual of kgen inside k w.r.t. B|k is kgen / B(kgen,kgen).
    AlgNumber bkk = killing_form(kgen, kgen);

    // Embedding j on generators: K (x) 1 -> K (x) 1 + 1 (x) q(lambda_p(K)),
    // 1 (x) K -> 1 (x) K.
    LambdaSplit split = lambda_split(k, kgen);
    EnvCliffElement j_env = EnvCliffElement::env(EnvElement::from_lie(kgen)) +
                            EnvCliffElement::cliff(quantize(split.lambda_p));
    EnvCliffElement j_cliff = EnvCliffElement::cliff(CliffElement::from_lie(kgen));

    // D_k = kdual (x) kgen in U(k) (x) Cl(k); phi_k vanishes in dimension one.
    // Its image under j multiplies the embedded factors.
    AlgNumber dual_coeff = bkk.inverse();
    EnvCliffElement j_dk = dual_coeff * (j_env * j_cliff);

    EnvCliffElement dg = cubic_dirac_abstract(Rational(1, 3));
    RelativeDirac out;
    out.dirac = dg - j_dk;

    // Comparison form: sum over the p-basis of e_a (x) dual + q(phi_p).
    // For p spanned by basis vectors the dual of e_a in p equals the global
    // dual e^a, and phi_p restricts the structure tensor to p.
    EnvCliffElement pform;
    auto dual = dual_basis();
    BasisMask pm = span_mask(k.complement());
    for (int a = 0; a < 3; ++a) {
        if (!(pm & (1 << a))) continue;
        pform = pform + EnvCliffElement::tensor(EnvElement::from_lie(dual[a]),
                                                CliffElement::generator(a + 1));
    }
    pform = pform + EnvCliffElement::cliff(quantize(structure_tensor().restrict_to(pm)));
    out.p_form = pform;

    // Square identity: D^2 = Omega_g - j(Omega_k) + Tr_g(Omega_g)/24
    //                        - Tr_k(Omega_k)/24.
    EnvElement omega_g = casimir();
    // Omega_k = kgen * kdual in U(k); j maps it through the embedded generator.
    EnvCliffElement j_omega_k = dual_coeff * (j_env * j_env);
    AlgNumber tr_g = rat(1, 24) * trace_in_adjoint(omega_g);
    // Tr_k applies the adjoint action of k on itself; abelian k gives zero.
    AlgNumber tr_k;  // ad_k(kgen) = 0 on the 1-dim k
    EnvCliffElement rhs = EnvCliffElement::env(omega_g) - j_omega_k +
                          EnvCliffElement(tr_g - tr_k);
    out.square_residual = out.dirac * out.dirac - rhs;
    out.dirac_spin = to_spin(out.dirac);
    return out;
}

}  // namespace su11
