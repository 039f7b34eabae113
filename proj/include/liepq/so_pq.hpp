#pragma once

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "representation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liepq {

struct Signature {
	size_t p = 0, q = 0;
	size_t n() const { return p + q; }
	friend bool operator==(const Signature &, const Signature &) = default;
};

inline std::string to_string(const Signature &s)
{
	return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

// diag(I_p, -I_q)
inline Matrix ipq(size_t p, size_t q)
{
	Vector d(p + q, Rational(1));
	for (size_t i = p; i < p + q; ++i)
		d[i] = -1;
	return Matrix::diagonal(d);
}

// diag(c, I_{p,q}) for c > 0, diag(I_{p,q}, c) for c < 0.
inline Matrix ipq_c(size_t p, size_t q, const Rational &c)
{
	if (c.is_zero())
		throw ContractError("ipq_c: c must be non-zero");
	Matrix one{{c}};
	return c.sign() > 0 ? block_diagonal(one, ipq(p, q)) : block_diagonal(ipq(p, q), one);
}

// Basis of {A : A^t J + J A = 0} for a symmetric J, computed as a kernel.
inline std::vector<Matrix> orthogonal_algebra_basis(const Matrix &j)
{
	const size_t n = j.rows();
	std::vector<SparseRow> eqs;
	for (size_t a = 0; a < n; ++a)
		for (size_t b = a; b < n; ++b) {
			// (A^t J + J A)_{ab} = sum_k A_{ka} J_{kb} + sum_k J_{ak} A_{kb}
			Vector row(n * n);
			for (size_t k = 0; k < n; ++k) {
				row[k * n + a] += j(k, b);
				row[k * n + b] += j(a, k);
			}
			eqs.push_back(to_sparse(row));
		}
	std::vector<Matrix> out;
	Subspace k = kernel_of_rows(n * n, eqs);
	for (auto &v : k.basis())
		out.push_back(reshape(v, n, n));
	return out;
}

inline bool preserves_form(const Matrix &a, const Matrix &j) { return (a.transpose() * j + j * a).is_zero(); }

// Lexicographic generators for (i, j), i < j: E_ij - E_ji inside a sign
// block, E_ij + E_ji across the blocks.
inline std::vector<Matrix> so_pq_basis(size_t p, size_t q)
{
	const size_t n = p + q;
	std::vector<Matrix> basis;
	for (auto [i, j] : wedge_square_index(n)) {
		Matrix m(n, n);
		bool mixed = (i < p) != (j < p);
		m(i, j) = 1;
		m(j, i) = mixed ? 1 : -1;
		basis.push_back(std::move(m));
	}
	return basis;
}

inline LieAlgebra so_pq_algebra(size_t p, size_t q)
{
	if (p + q < 2)
		throw ContractError("so_pq_algebra: n = p + q must be at least 2");
	return LieAlgebra::from_matrices(so_pq_basis(p, q));
}

// Natural action on R^n.
inline Representation standard_rep(size_t p, size_t q)
{
	auto l = so_pq_algebra(p, q);
	return Representation(l, p + q, l.basis());
}

// Matrix of T_c : wedge^2 R^{p,q} -> so(p,q),
// T_c(u ^ v) = c <u, .> v - c <v, .> u, columns indexed by wedge_square_index
// and rows by the so_pq_basis coordinates.
inline Matrix t_c(size_t p, size_t q, const Rational &c)
{
	const size_t n = p + q;
	auto l = so_pq_algebra(p, q);
	Matrix eta = ipq(p, q);
	auto idx = wedge_square_index(n);
	Matrix t(l.dim(), idx.size());
	for (size_t col = 0; col < idx.size(); ++col) {
		auto [i, j] = idx[col];
		Vector u = unit_vector(n, i), v = unit_vector(n, j);
		// w -> c <u,w> v - c <v,w> u  as the matrix c (v u^t eta - u v^t eta)
		Matrix m = c * (Matrix::column(v) * Matrix::row(u) * eta - Matrix::column(u) * Matrix::row(v) * eta);
		auto coords = l.coordinates(m);
		if (!coords)
			throw InternalError("t_c: image not in so(p,q)");
		for (size_t r = 0; r < l.dim(); ++r)
			t(r, col) = (*coords)[r];
	}
	return t;
}

// so(p,q) + R^{p,q} with the bracket
//   [X, Y]_c = XY - YX,  [X, u]_c = X u,  [u, v]_c = T_c(u ^ v).
// Coordinates: so(p,q) basis first, then e_1..e_n.
struct DeformedAlgebra {
	Signature signature;
	Rational c;
	LieAlgebra algebra;
	std::vector<size_t> so_block, vec_block;
};

inline DeformedAlgebra deformed_algebra(size_t p, size_t q, const Rational &c)
{
	const size_t n = p + q;
	if (n < 3)
		throw ContractError("deformed_algebra: n = p + q must be at least 3");
	auto so = so_pq_algebra(p, q);
	const size_t ds = so.dim(), d = ds + n;
	StructureTensor t(d);
	for (size_t a = 0; a < ds; ++a)
		for (size_t b = 0; b < ds; ++b)
			for (auto &[k, x] : so.structure().terms(a, b))
				t.set(a, b, k, x);
	for (size_t a = 0; a < ds; ++a)
		for (size_t i = 0; i < n; ++i)
			for (size_t k = 0; k < n; ++k) {
				const Rational &x = so.basis()[a](k, i);
				if (x.is_zero())
					continue;
				t.set(a, ds + i, ds + k, x);
				t.set(ds + i, a, ds + k, -x);
			}
	Matrix tc = t_c(p, q, c);
	auto idx = wedge_square_index(n);
	for (size_t col = 0; col < idx.size(); ++col) {
		auto [i, j] = idx[col];
		for (size_t a = 0; a < ds; ++a) {
			if (tc(a, col).is_zero())
				continue;
			t.set(ds + i, ds + j, a, tc(a, col));
			t.set(ds + j, ds + i, a, -tc(a, col));
		}
	}
	DeformedAlgebra out{{p, q}, c, LieAlgebra::from_structure(std::move(t)), {}, {}};
	if (auto bad = jacobi_violation(out.algebra))
		throw InternalError("deformed_algebra: Jacobi identity fails on triple (" + std::to_string((*bad)[0]) + "," +
		                    std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
	for (size_t a = 0; a < ds; ++a)
		out.so_block.push_back(a);
	for (size_t i = 0; i < n; ++i)
		out.vec_block.push_back(ds + i);
	return out;
}

// (X, u) -> [[0, u*], [c u, X]] for c > 0 and [[X, c u], [u*, 0]] for c < 0,
// u* = -u^t I_{p,q}; images of the deformed-algebra basis in order.
struct EmbeddingIso {
	Signature signature;
	Rational c;
	Matrix target_form; // I_{p,q}(c)
	std::vector<Matrix> images;

	Matrix apply(const Vector &x) const
	{
		Matrix m(target_form.rows(), target_form.cols());
		for (size_t i = 0; i < x.size(); ++i)
			if (!x[i].is_zero())
				m.add_scaled(x[i], images[i]);
		return m;
	}
};

inline EmbeddingIso embedding_iso(size_t p, size_t q, const Rational &c)
{
	if (c.is_zero())
		throw ContractError("embedding_iso: c must be non-zero");
	const size_t n = p + q;
	auto so = so_pq_algebra(p, q);
	Matrix eta = ipq(p, q);
	const bool pos = c.sign() > 0;
	const size_t off = pos ? 1 : 0;        // where the so(p,q) block starts
	const size_t extra = pos ? 0 : n;      // the added coordinate
	EmbeddingIso e{{p, q}, c, ipq_c(p, q, c), {}};
	for (auto &x : so.basis()) {
		Matrix m(n + 1, n + 1);
		m.set_block(off, off, x);
		e.images.push_back(std::move(m));
	}
	for (size_t i = 0; i < n; ++i) {
		Matrix m(n + 1, n + 1);
		m(off + i, extra) = c;         // c u
		m(extra, off + i) = -eta(i, i); // u* = -u^t eta
		e.images.push_back(std::move(m));
	}
	return e;
}

struct EmbeddingCertificate {
	bool contained = false;  // every image preserves I_{p,q}(c)
	bool intertwines = false; // phi([a,b]_c) = [phi a, phi b] on basis pairs
	size_t image_rank = 0;
	size_t target_dim = 0;   // dim so(R^{n+1}, I_{p,q}(c))
	bool bijective() const { return image_rank == target_dim; }
	bool ok() const { return contained && intertwines && bijective(); }
};

inline EmbeddingCertificate certify_embedding(const DeformedAlgebra &d, const EmbeddingIso &e)
{
	EmbeddingCertificate cert;
	cert.contained = true;
	for (auto &m : e.images)
		cert.contained = cert.contained && preserves_form(m, e.target_form);
	cert.intertwines = true;
	const size_t dim = d.algebra.dim();
	for (size_t i = 0; i < dim && cert.intertwines; ++i)
		for (size_t j = i + 1; j < dim; ++j) {
			Matrix lhs(e.target_form.rows(), e.target_form.cols());
			for (auto &[k, x] : d.algebra.structure().terms(i, j))
				lhs.add_scaled(x, e.images[k]);
			if (lhs != commutator(e.images[i], e.images[j])) {
				cert.intertwines = false;
				break;
			}
		}
	std::vector<Vector> flat;
	for (auto &m : e.images)
		flat.push_back(m.flatten());
	cert.image_rank = rank_of_vectors(e.target_form.rows() * e.target_form.cols(), flat);
	cert.target_dim = orthogonal_algebra_basis(e.target_form).size();
	return cert;
}

// For c = +-s^2, conjugation by diag(s, 1, .., 1) (c > 0) or diag(1, .., 1, s)
// (c < 0) carries the embedding onto so(p+1,q) resp. so(p,q+1) with the
// standard forms. nullopt when |c| is not a rational square.
inline std::optional<bool> verify_sqrt_conjugation(const EmbeddingIso &e)
{
	auto s = e.c.abs().sqrt();
	if (!s)
		return std::nullopt;
	const size_t n = e.signature.n();
	const bool pos = e.c.sign() > 0;
	Vector d(n + 1, Rational(1));
	d[pos ? 0 : n] = *s;
	Matrix sm = Matrix::diagonal(d), sinv = *inverse(sm);
	Matrix target = pos ? ipq(e.signature.p + 1, e.signature.q) : ipq(e.signature.p, e.signature.q + 1);
	for (auto &m : e.images)
		if (!preserves_form(sm * m * sinv, target))
			return false;
	return true;
}

// Kronecker product.
inline Matrix kron(const Matrix &a, const Matrix &b)
{
	Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
	for (size_t i = 0; i < a.rows(); ++i)
		for (size_t j = 0; j < a.cols(); ++j) {
			if (a(i, j).is_zero())
				continue;
			for (size_t k = 0; k < b.rows(); ++k)
				for (size_t l = 0; l < b.cols(); ++l)
					m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
		}
	return m;
}

// Complex n x n matrix re + i im acting on C^n = R^{2n} (real parts first).
inline Matrix realify(const Matrix &re, const Matrix &im)
{
	const size_t n = re.rows();
	Matrix m(2 * n, 2 * n);
	m.set_block(0, 0, re);
	m.set_block(0, n, -im);
	m.set_block(n, 0, im);
	m.set_block(n, n, re);
	return m;
}

// sl(2,C) as a real Lie algebra: basis H, E, F, iH, iE, iF as realified 4x4
// matrices; its defining representation is C^2_R.
inline LieAlgebra sl2c_realified()
{
	Matrix h{{1, 0}, {0, -1}}, e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}}, z(2, 2);
	return LieAlgebra::from_matrices(
	    {realify(h, z), realify(e, z), realify(f, z), realify(z, h), realify(z, e), realify(z, f)});
}

// Multiplication by i on sl(2,C)_R in the basis above.
inline Matrix sl2c_complex_structure()
{
	Matrix j(6, 6);
	for (size_t k = 0; k < 3; ++k) {
		j(k + 3, k) = 1;
		j(k, k + 3) = -1;
	}
	return j;
}

// Compact form su(2) = span{iH, E - F, i(E + F)} in sl(2,C)_R coordinates.
inline Subspace su2_in_sl2c()
{
	return Subspace::span(6, {Vector{0, 0, 0, 1, 0, 0}, Vector{0, 1, -1, 0, 0, 0}, Vector{0, 0, 0, 0, 1, 1}});
}

inline LieAlgebra sl4r()
{
	std::vector<Matrix> basis;
	for (size_t i = 0; i < 4; ++i)
		for (size_t j = 0; j < 4; ++j)
			if (i != j)
				basis.push_back(Matrix::unit(4, 4, i, j));
	for (size_t i = 0; i + 1 < 4; ++i)
		basis.push_back(Matrix::unit(4, 4, i, i) - Matrix::unit(4, 4, i + 1, i + 1));
	return LieAlgebra::from_matrices(std::move(basis));
}

// Standard symplectic form [[0, I], [-I, 0]] on R^4.
inline Matrix symplectic_form4()
{
	Matrix w(4, 4);
	w(0, 2) = 1;
	w(1, 3) = 1;
	w(2, 0) = -1;
	w(3, 1) = -1;
	return w;
}

// sp(4,R) = {X : X^t W + W X = 0}, basis computed as a kernel.
inline LieAlgebra sp4r()
{
	Matrix w = symplectic_form4();
	std::vector<SparseRow> eqs;
	for (size_t a = 0; a < 4; ++a)
		for (size_t b = 0; b < 4; ++b) {
			Vector row(16);
			for (size_t k = 0; k < 4; ++k) {
				row[k * 4 + a] += w(k, b);
				row[k * 4 + b] += w(a, k);
			}
			eqs.push_back(to_sparse(row));
		}
	std::vector<Matrix> basis;
	Subspace k = kernel_of_rows(16, eqs);
	for (auto &v : k.basis())
		basis.push_back(reshape(v, 4, 4));
	return LieAlgebra::from_matrices(std::move(basis));
}

enum class ExceptionalName { SO31_SL2C, SO32_SP4R, SO33_SL4R };

inline std::optional<ExceptionalName> parse_exceptional_name(const std::string &s)
{
	if (s == "SO31_SL2C")
		return ExceptionalName::SO31_SL2C;
	if (s == "SO32_SP4R")
		return ExceptionalName::SO32_SP4R;
	if (s == "SO33_SL4R")
		return ExceptionalName::SO33_SL4R;
	return std::nullopt;
}

inline const char *to_string(ExceptionalName n)
{
	switch (n) {
	case ExceptionalName::SO31_SL2C:
		return "SO31_SL2C";
	case ExceptionalName::SO32_SP4R:
		return "SO32_SP4R";
	default:
		return "SO33_SL4R";
	}
}

// Isomorphism of a small classical algebra onto so(p,q), realized by its
// action on a carrier module with an invariant symmetric form.
struct ExceptionalIso {
	ExceptionalName name;
	LieAlgebra small_algebra;
	std::vector<Representation> small_modules; // C^2_R; R^4; R^4 and R^4*
	Representation carrier;
	Matrix carrier_form;    // invariant symmetric form from the solver
	size_t carrier_form_space_dim = 0;
	Inertia carrier_inertia;
	Signature target;
	Matrix change_of_basis; // M with M rho(x) M^{-1} in so(p,q) for all x
	Matrix intertwiner;     // small-algebra coordinates -> so_pq_basis coordinates
	bool rational_normalization = false;
};

namespace detail {

// Rescales a congruence so every diagonal entry is +-|d_0| and orders
// positive entries first. Returns the row transform P with
// P B P^t = |d_0| I_{p,q}, or nullopt if some ratio is not a rational square.
inline std::optional<Matrix> normalize_to_ipq(const Matrix &b)
{
	auto cg = congruence_diagonalize(b);
	const size_t n = b.rows();
	if (n == 0 || cg.diag[0].is_zero())
		return std::nullopt;
	Rational k0 = cg.diag[0].abs();
	Matrix q = cg.q;
	for (size_t i = 0; i < n; ++i) {
		if (cg.diag[i].is_zero())
			return std::nullopt;
		auto s = (cg.diag[i].abs() / k0).sqrt();
		if (!s)
			return std::nullopt;
		Rational inv = s->inverse();
		for (size_t j = 0; j < n; ++j)
			q(i, j) *= inv;
	}
	std::vector<size_t> order;
	for (size_t i = 0; i < n; ++i)
		if (cg.diag[i].sign() > 0)
			order.push_back(i);
	for (size_t i = 0; i < n; ++i)
		if (cg.diag[i].sign() < 0)
			order.push_back(i);
	Matrix p(n, n);
	for (size_t r = 0; r < n; ++r)
		for (size_t j = 0; j < n; ++j)
			p(r, j) = q(order[r], j);
	return p;
}

inline ExceptionalIso build_exceptional(ExceptionalName name, LieAlgebra small, std::vector<Representation> modules,
                                        Representation carrier, Signature target)
{
	ExceptionalIso iso{name, std::move(small), std::move(modules), std::move(carrier), {}, 0, {}, target, {}, {}, false};
	auto forms = invariant_symmetric_forms(iso.carrier);
	iso.carrier_form_space_dim = forms.size();
	if (forms.size() != 1)
		throw InternalError(std::string("exceptional_iso ") + to_string(name) +
		                    ": carrier does not have a unique invariant symmetric form");
	Matrix b = forms[0];
	Inertia in = inertia_of_diagonalizable_form(b);
	if (in.n_minus > in.n_plus) {
		b = -b;
		in = {in.n_minus, in.n_plus, in.n_zero};
	}
	iso.carrier_form = b;
	iso.carrier_inertia = in;
	auto p = normalize_to_ipq(b);
	if (!p)
		return iso;
	iso.rational_normalization = true;
	// x = P^t x', so the action in the new coordinates is P^{-t} rho P^t.
	Matrix pt = p->transpose();
	Matrix m = *inverse(pt);
	iso.change_of_basis = m;
	auto so = so_pq_algebra(target.p, target.q);
	Matrix phi(so.dim(), iso.small_algebra.dim());
	for (size_t i = 0; i < iso.small_algebra.dim(); ++i) {
		auto c = so.coordinates(m * iso.carrier.action(i) * pt);
		if (!c)
			throw InternalError(std::string("exceptional_iso ") + to_string(name) + ": image outside so(p,q)");
		for (size_t r = 0; r < so.dim(); ++r)
			phi(r, i) = (*c)[r];
	}
	iso.intertwiner = phi;
	return iso;
}

// X . H = X H + H X^dagger on 2x2 Hermitian matrices, coordinates in the
// basis I, sigma_x, sigma_y, sigma_z (all realified).
inline Representation hermitian_carrier(const LieAlgebra &sl2c)
{
	Matrix z(2, 2);
	std::vector<Matrix> herm{realify(Matrix::identity(2), z), realify(Matrix{{0, 1}, {1, 0}}, z),
	                         realify(z, Matrix{{0, -1}, {1, 0}}), realify(Matrix{{1, 0}, {0, -1}}, z)};
	std::vector<Vector> flat;
	for (auto &h : herm)
		flat.push_back(h.flatten());
	CoordinateMap cm(flat, 16);
	std::vector<Matrix> acts;
	for (auto &x : sl2c.basis()) {
		Matrix a(4, 4);
		for (size_t k = 0; k < 4; ++k) {
			auto c = cm.coordinates((x * herm[k] + herm[k] * x.transpose()).flatten());
			if (!c)
				throw InternalError("hermitian_carrier: image not Hermitian");
			for (size_t r = 0; r < 4; ++r)
				a(r, k) = (*c)[r];
		}
		acts.push_back(std::move(a));
	}
	return Representation(sl2c, 4, std::move(acts));
}

} // namespace detail

inline ExceptionalIso exceptional_iso(ExceptionalName name)
{
	switch (name) {
	case ExceptionalName::SO31_SL2C: {
		auto l = sl2c_realified();
		auto c2 = defining_rep(l);
		return detail::build_exceptional(name, l, {c2}, detail::hermitian_carrier(l), {3, 1});
	}
	case ExceptionalName::SO32_SP4R: {
		auto l = sp4r();
		auto r4 = defining_rep(l);
		auto w2 = wedge_square_rep(r4);
		// Primitive part: kernel of the contraction e_i ^ e_j -> W_ij.
		Matrix w = symplectic_form4();
		auto idx = wedge_square_index(4);
		Matrix contraction(1, idx.size());
		for (size_t k = 0; k < idx.size(); ++k)
			contraction(0, k) = w(idx[k].first, idx[k].second);
		auto prim = restrict(w2, kernel(contraction));
		return detail::build_exceptional(name, l, {r4}, prim, {3, 2});
	}
	case ExceptionalName::SO33_SL4R: {
		auto l = sl4r();
		auto r4 = defining_rep(l);
		return detail::build_exceptional(name, l, {r4, dual(r4)}, wedge_square_rep(r4), {3, 3});
	}
	}
	throw ContractError("exceptional_iso: unknown name");
}

inline ExceptionalIso exceptional_iso(const std::string &name)
{
	auto n = parse_exceptional_name(name);
	if (!n)
		throw ContractError("exceptional_iso: unknown name '" + name + "'");
	return exceptional_iso(*n);
}

struct ExceptionalCertificate {
	bool form_unique = false;         // one-dimensional invariant symmetric forms on the carrier
	bool inertia_matches = false;     // (p, q, 0)
	bool images_in_so_pq = false;
	bool bijective = false;
	bool structure_matches = false;   // tensors agree after the basis match
	bool ok() const { return form_unique && inertia_matches && images_in_so_pq && bijective && structure_matches; }
};

inline ExceptionalCertificate certify_exceptional(const ExceptionalIso &iso)
{
	ExceptionalCertificate cert;
	cert.form_unique = iso.carrier_form_space_dim == 1;
	cert.inertia_matches = iso.carrier_inertia == Inertia{iso.target.p, iso.target.q, 0};
	if (!iso.rational_normalization)
		return cert;
	auto so = so_pq_algebra(iso.target.p, iso.target.q);
	std::vector<Matrix> images;
	Matrix minv = *inverse(iso.change_of_basis);
	cert.images_in_so_pq = true;
	for (size_t i = 0; i < iso.small_algebra.dim(); ++i) {
		Matrix img = iso.change_of_basis * iso.carrier.action(i) * minv;
		cert.images_in_so_pq = cert.images_in_so_pq && preserves_form(img, ipq(iso.target.p, iso.target.q));
		images.push_back(std::move(img));
	}
	cert.bijective = rank(iso.intertwiner) == so.dim() && iso.small_algebra.dim() == so.dim();
	if (cert.bijective) {
		try {
			auto image_alg = LieAlgebra::from_matrices(images);
			cert.structure_matches = image_alg.structure() == iso.small_algebra.structure();
		} catch (const std::exception &) {
			cert.structure_matches = false;
		}
	}
	return cert;
}

// Real Clifford generators for signature (4,4) and the spinor modules of
// so(4,4): X acts by 1/4 sum_{ab} (X eta)_{ab} gamma_a gamma_b.
struct SpinModules {
	std::vector<Matrix> gammas; // 8 matrices, 16 x 16
	Matrix chirality;           // gamma_1 ... gamma_8
	Representation spinor;      // 16-dimensional
	Subspace plus_space, minus_space;
	Representation plus, minus; // C+ and C-
};

inline std::vector<Matrix> clifford_gammas_4_4()
{
	Matrix s3{{1, 0}, {0, -1}}, s1{{0, 1}, {1, 0}}, eps{{0, 1}, {-1, 0}}, id = Matrix::identity(2);
	auto chain = [&](size_t pos, const Matrix &mid) {
		Matrix m = Matrix::identity(1);
		for (size_t k = 0; k < 4; ++k)
			m = kron(m, k < pos ? s3 : (k == pos ? mid : id));
		return m;
	};
	std::vector<Matrix> g;
	for (size_t k = 0; k < 4; ++k)
		g.push_back(chain(k, s1)); // squares to +1
	for (size_t k = 0; k < 4; ++k)
		g.push_back(chain(k, eps)); // squares to -1
	return g;
}

inline SpinModules half_spin_reps(size_t p, size_t q)
{
	if (p != 4 || q != 4)
		throw UnsupportedError("half_spin_reps: only signature (4,4) is supported");
	auto so = so_pq_algebra(4, 4);
	Matrix eta = ipq(4, 4);
	SpinModules s;
	s.gammas = clifford_gammas_4_4();
	s.chirality = Matrix::identity(16);
	for (auto &g : s.gammas)
		s.chirality = s.chirality * g;
	std::vector<Matrix> acts;
	for (auto &x : so.basis()) {
		Matrix m = x * eta;
		Matrix a(16, 16);
		for (size_t i = 0; i < 8; ++i)
			for (size_t j = 0; j < 8; ++j)
				if (!m(i, j).is_zero())
					a.add_scaled(m(i, j) / Rational(4), s.gammas[i] * s.gammas[j]);
		acts.push_back(std::move(a));
	}
	s.spinor = Representation(so, 16, std::move(acts));
	s.plus_space = kernel(s.chirality - Matrix::identity(16));
	s.minus_space = kernel(s.chirality + Matrix::identity(16));
	s.plus = restrict(s.spinor, s.plus_space);
	s.minus = restrict(s.spinor, s.minus_space);
	return s;
}

struct DimensionBound {
	size_t dim_g = 0, m = 0, total = 0;
	std::string note;
};

// dim(G) = n(n-1)/2, m = m(so(p,q)), total = dim(G) + m. Known m: n for
// n >= 4 with (p,q) != (2,2); 3 for (2,2).
inline DimensionBound dimension_bound(size_t p, size_t q)
{
	if (p < 1 || q < 1)
		throw ContractError("dimension_bound: p and q must be at least 1");
	const size_t n = p + q;
	DimensionBound b;
	b.dim_g = n * (n - 1) / 2;
	if (p == 2 && q == 2) {
		b.m = 3;
		b.note = "so(2,2) = so(2,1) x so(2,1) is not simple; smallest module with invariant form is R^{2,1}";
	} else if (n >= 4) {
		b.m = n;
	} else {
		throw UnknownMError("dimension_bound: m(so(" + std::to_string(p) + "," + std::to_string(q) +
		                    ")) is not tabulated for n < 4");
	}
	b.total = b.dim_g + b.m;
	return b;
}

} // namespace liepq
