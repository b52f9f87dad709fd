#include "hodgedr/acs.hpp"

#include <stdexcept>

#include "hodgedr/errors.hpp"

namespace hodgedr {

void check_complex_structure(const AlmostComplexStructure& acs)
{
    const Matrix& j = acs.j;
    if (j.rows() != j.cols() || j.rows() == 0 || j.rows() % 2 != 0)
        throw JNotComplexStructure("'" + acs.name + "' must be a square matrix of even size");
    if (!j.is_real())
        throw JNotComplexStructure("'" + acs.name + "' has non-rational entries");
    Matrix sq = j * j;
    sq += Matrix::identity(j.rows());
    if (!sq.is_zero())
        throw JNotComplexStructure("'" + acs.name + "' does not satisfy J^2 = -Id");
}

ComplexFrame complex_frame(const AlmostComplexStructure& acs, std::size_t dimension)
{
    check_complex_structure(acs);
    if (acs.j.rows() != dimension)
        throw JNotComplexStructure("'" + acs.name + "' has size " + std::to_string(acs.j.rows())
                                   + " but the Lie algebra has dimension " + std::to_string(dimension));
    const std::size_t n = dimension;
    const std::size_t m = n / 2;
    // Dual action on coefficient columns: (α∘J)_k = Σ_l α_l J_{lk}, i.e. J^T α.
    const Matrix jt = acs.j.transpose();

    std::vector<Vector> phis;
    EchelonBuilder eb(n);
    for (std::size_t k = 0; k < n && phis.size() < m; ++k) {
        Vector e(n);
        e[k] = Scalar(1);
        Vector phi = e - Scalar::i() * (jt * e);
        if (!eb.add(phi))
            continue;
        std::size_t lead = 0;
        while (phi[lead].is_zero())
            ++lead;
        phi = phi[lead].inverse() * phi;
        phis.push_back(std::move(phi));
    }
    if (phis.size() != m)
        throw InternalInconsistency("+i eigenspace of J has the wrong dimension");

    std::vector<Vector> cols = phis;
    for (const auto& phi : phis)
        cols.push_back(conj(phi));
    ComplexFrame f;
    f.dimension = n;
    f.coframe = Matrix::from_columns(cols, n);
    f.inverse = inverse(f.coframe);
    return f;
}

Vector orientation_form(const ComplexFrame& frame)
{
    const std::size_t n = frame.dimension;
    const std::size_t m = frame.half();
    // φ^1∧φ̄^1∧...∧φ^m∧φ̄^m in the ψ basis, then (i/2)^m, then to x via det(coframe).
    Form vol = Form::monomial(n, 0);
    for (std::size_t a = 0; a < m; ++a) {
        vol = wedge(vol, Form::monomial(n, Mask{1} << a));
        vol = wedge(vol, Form::monomial(n, Mask{1} << (a + m)));
    }
    Scalar coeff = vol[(Mask{1} << n) - 1];
    for (std::size_t a = 0; a < m; ++a)
        coeff *= Scalar(Rational(0), Rational(1, 2));
    coeff *= determinant(frame.coframe);
    if (!coeff.is_real() || coeff.is_zero())
        throw InternalInconsistency("orientation form is not a nonzero real form");
    return Vector{coeff};
}

Bidegree shift(Component c)
{
    switch (c) {
    case Component::MuBar:
        return {-1, 2};
    case Component::DelBar:
        return {0, 1};
    case Component::Del:
        return {1, 0};
    case Component::Mu:
        return {2, -1};
    }
    return {};
}

const char* component_name(Component c)
{
    switch (c) {
    case Component::MuBar:
        return "mubar";
    case Component::DelBar:
        return "delbar";
    case Component::Del:
        return "del";
    case Component::Mu:
        return "mu";
    }
    return "";
}

Bidegree BigradedComplex::bidegree(Mask m) const
{
    const Mask low = (Mask{1} << half()) - 1;
    return {static_cast<int>(popcount(m & low)), static_cast<int>(popcount(m & ~low))};
}

bool BigradedComplex::in_range(int p, int q) const
{
    const int m = static_cast<int>(half());
    return p >= 0 && q >= 0 && p <= m && q <= m;
}

const std::vector<std::size_t>& BigradedComplex::positions(int p, int q) const
{
    static const std::vector<std::size_t> none;
    if (!in_range(p, q))
        return none;
    return positions_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::size_t BigradedComplex::dim(int p, int q) const
{
    return positions(p, q).size();
}

Matrix BigradedComplex::embedding(int p, int q) const
{
    const auto& pos = positions(p, q);
    const std::size_t total = p + q >= 0 ? total_.rank_in_degree(static_cast<std::size_t>(p + q)) : 0;
    Matrix e(total, pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k)
        e(pos[k], k) = Scalar(1);
    return e;
}

Matrix BigradedComplex::component(Component c, int p, int q) const
{
    const Bidegree s = shift(c);
    const auto& src = positions(p, q);
    const auto& dst = positions(p + s.p, q + s.q);
    if (src.empty() || dst.empty())
        return Matrix(dst.size(), src.size());
    return total_.d[static_cast<std::size_t>(p + q)].submatrix(dst, src);
}

Vector BigradedComplex::conjugate(std::size_t n, const Vector& v) const
{
    const auto& map = conj_map_.at(n);
    if (v.size() != map.size())
        throw std::invalid_argument("conjugate: wrong coordinate length");
    Vector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& [pos, sign] = map[k];
        w[pos] = sign > 0 ? v[k].conj() : -v[k].conj();
    }
    return w;
}

Subspace BigradedComplex::conjugate(std::size_t n, const Subspace& s) const
{
    std::vector<Vector> vs;
    for (const auto& b : s.basis())
        vs.push_back(conjugate(n, b));
    return Subspace::span(s.ambient_dim(), vs);
}

namespace {

// Rewrites a form in generators e_k as a form in generators f_a, given
// e_k = Σ_a q(a, k) f_a.
Form substitute(const Form& form, const Matrix& q)
{
    const std::size_t n = form.generators();
    std::vector<Form> linear;
    for (std::size_t k = 0; k < n; ++k) {
        Form l(n);
        for (std::size_t a = 0; a < n; ++a)
            l[Mask{1} << a] = q(a, k);
        linear.push_back(std::move(l));
    }
    Form out(n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (form[m].is_zero())
            continue;
        Form term = Form::monomial(n, 0, form[m]);
        for (std::size_t k = 0; k < n; ++k)
            if ((m >> k) & 1U)
                term = wedge(term, linear[k]);
        out += term;
    }
    return out;
}

} // namespace

BigradedComplex split_differential(const ComplexFrame& frame, const CEComplex& ce)
{
    const std::size_t n = frame.dimension;
    if (ce.complex.generators != n)
        throw std::invalid_argument("split_differential: frame and complex dimensions differ");
    const std::size_t m = frame.half();

    BigradedComplex b;
    b.frame_ = frame;

    // dψ^b = Σ_k P_{kb} dx^k, re-expressed in ψ via x^k = Σ_a Q_{ak} ψ^a.
    std::vector<Form> images;
    for (std::size_t col = 0; col < n; ++col) {
        Form dpsi(n);
        for (std::size_t k = 0; k < n; ++k)
            if (!frame.coframe(k, col).is_zero())
                dpsi += ce.derivation.apply(Mask{1} << k) * frame.coframe(k, col);
        images.push_back(substitute(dpsi, frame.inverse));
    }
    const ExteriorDerivation dpsi(std::move(images));
    b.total_.generators = n;
    for (std::size_t deg = 0; deg <= n; ++deg)
        b.total_.d.push_back(dpsi.matrix(deg));

    b.positions_.assign(m + 1, std::vector<std::vector<std::size_t>>(m + 1));
    for (std::size_t deg = 0; deg <= n; ++deg) {
        const auto basis = monomials(n, deg);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Bidegree bd = b.bidegree(basis[k]);
            b.positions_[static_cast<std::size_t>(bd.p)][static_cast<std::size_t>(bd.q)].push_back(k);
        }
    }

    // Conjugation swaps φ^a and φ̄^a.
    for (std::size_t deg = 0; deg <= n; ++deg) {
        const auto basis = monomials(n, deg);
        std::vector<std::pair<std::size_t, int>> map;
        for (Mask mono : basis) {
            Form img = Form::monomial(n, 0);
            for (std::size_t k = 0; k < n; ++k)
                if ((mono >> k) & 1U)
                    img = wedge(img, Form::monomial(n, Mask{1} << ((k + m) % n)));
            for (std::size_t t = 0; t < basis.size(); ++t)
                if (!img[basis[t]].is_zero()) {
                    map.emplace_back(t, img[basis[t]].re().sign());
                    break;
                }
        }
        b.conj_map_.push_back(std::move(map));
    }

    // Every component of d must land in one of the four allowed bidegrees.
    for (std::size_t deg = 0; deg < n; ++deg)
        for (int p = 0; p <= static_cast<int>(m); ++p) {
            const int q = static_cast<int>(deg) - p;
            if (!b.in_range(p, q))
                continue;
            for (int tp = 0; tp <= static_cast<int>(m); ++tp) {
                const int tq = static_cast<int>(deg) + 1 - tp;
                if (!b.in_range(tp, tq))
                    continue;
                bool allowed = false;
                for (Component c : all_components) {
                    const Bidegree s = shift(c);
                    allowed = allowed || (tp == p + s.p && tq == q + s.q);
                }
                if (allowed)
                    continue;
                const Matrix stray = b.total_.d[deg].submatrix(b.positions(tp, tq), b.positions(p, q));
                if (!stray.is_zero())
                    throw InternalInconsistency("d has a component of bidegree (" + std::to_string(tp - p) + ","
                                                + std::to_string(tq - q) + ")");
            }
        }

    // d_x ∘ Λ^deg P = Λ^{deg+1} P ∘ d_ψ.
    b.reassembly_ = true;
    for (std::size_t deg = 0; deg < n; ++deg) {
        const Matrix lhs = ce.complex.d[deg] * exterior_power(frame.coframe, deg);
        const Matrix rhs = exterior_power(frame.coframe, deg + 1) * b.total_.d[deg];
        b.reassembly_ = b.reassembly_ && lhs == rhs;
    }
    if (!b.reassembly_)
        throw InternalInconsistency("bigraded components do not reassemble to the CE differential");
    return b;
}

Matrix composite(const BigradedComplex& b, Component outer, Component inner, int p, int q)
{
    const Bidegree s = shift(inner);
    return b.component(outer, p + s.p, q + s.q) * b.component(inner, p, q);
}

std::vector<D2Relation> verify_d2_relations(const BigradedComplex& b)
{
    static const char* names[] = {
        "mu^2 = 0",
        "mu del + del mu = 0",
        "mu delbar + delbar mu + del^2 = 0",
        "mu mubar + del delbar + delbar del + mubar mu = 0",
        "mubar del + del mubar + delbar^2 = 0",
        "mubar delbar + delbar mubar = 0",
        "mubar^2 = 0",
    };
    const int m = static_cast<int>(b.half());
    std::vector<D2Relation> out;
    for (int k = 0; k < 7; ++k) {
        // Total shifts (4,-2), (3,-1), ..., (-2,4).
        D2Relation rel{names[k], {4 - k, -2 + k}, true, 0};
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                if (!b.in_range(p + rel.shift.p, q + rel.shift.q) || b.dim(p, q) == 0)
                    continue;
                Matrix sum(b.dim(p + rel.shift.p, q + rel.shift.q), b.dim(p, q));
                for (Component outer : all_components)
                    for (Component inner : all_components) {
                        const Bidegree so = shift(outer), si = shift(inner);
                        if (so.p + si.p == rel.shift.p && so.q + si.q == rel.shift.q)
                            sum += composite(b, outer, inner, p, q);
                    }
                rel.nonzero_entries += sum.nonzero_count();
            }
        rel.holds = rel.nonzero_entries == 0;
        out.push_back(std::move(rel));
    }
    return out;
}

bool is_integrable(const BigradedComplex& b)
{
    const int m = static_cast<int>(b.half());
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q)
            if (!b.component(Component::MuBar, p, q).is_zero())
                return false;
    return true;
}

} // namespace hodgedr
