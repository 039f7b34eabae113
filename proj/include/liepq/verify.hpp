#pragma once

#include "characters.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "representation.hpp"
#include "serialize.hpp"
#include "so_pq.hpp"
#include "weyl.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace liepq {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr const char *kReportSchema = "liepq-report/1";

enum class Status { Pass, Fail, Inconclusive, Skipped };

inline const char *to_string(Status s)
{
	switch (s) {
	case Status::Pass:
		return "pass";
	case Status::Fail:
		return "fail";
	case Status::Inconclusive:
		return "inconclusive";
	default:
		return "skipped";
	}
}

struct Outcome {
	Status status = Status::Fail;
	json witness; // null when absent
	std::string reason;
};

inline Outcome pass(json witness = nullptr) { return {Status::Pass, std::move(witness), {}}; }
inline Outcome fail(std::string reason, json witness = nullptr) { return {Status::Fail, std::move(witness), std::move(reason)}; }
inline Outcome skipped(std::string reason) { return {Status::Skipped, nullptr, std::move(reason)}; }
inline Outcome inconclusive(std::string reason, json witness = nullptr)
{
	return {Status::Inconclusive, std::move(witness), std::move(reason)};
}

struct CheckTask {
	std::string name;
	json params;
	std::function<Outcome()> run;
};

struct CheckResult {
	std::string name;
	json params;
	Outcome outcome;
	double elapsed_ms = 0;

	json to_json(bool timing = true) const
	{
		json j{{"name", name}, {"params", params}, {"status", to_string(outcome.status)}};
		if (!outcome.witness.is_null())
			j["witness"] = outcome.witness;
		if (!outcome.reason.empty())
			j["reason"] = outcome.reason;
		j["elapsed_ms"] = timing ? elapsed_ms : 0.0;
		return j;
	}
};

// LIEPQ_THREADS caps the worker count; defaults to the hardware concurrency.
inline size_t thread_count()
{
	size_t hw = std::max(1u, std::thread::hardware_concurrency());
	if (const char *env = std::getenv("LIEPQ_THREADS")) {
		char *end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v >= 1)
			return static_cast<size_t>(v);
	}
	return hw;
}

inline Outcome run_guarded(const std::function<Outcome()> &f)
{
	try {
		return f();
	} catch (const std::exception &e) {
		return fail(std::string("exception: ") + e.what());
	}
}

// Results come back in task order regardless of scheduling.
inline std::vector<CheckResult> run_checks(const std::vector<CheckTask> &tasks, size_t threads = thread_count())
{
	std::vector<CheckResult> out(tasks.size());
	std::atomic<size_t> next{0};
	auto worker = [&] {
		for (size_t i; (i = next++) < tasks.size();) {
			auto t0 = std::chrono::steady_clock::now();
			Outcome o = run_guarded(tasks[i].run);
			auto t1 = std::chrono::steady_clock::now();
			out[i] = {tasks[i].name, tasks[i].params, std::move(o),
			          std::chrono::duration<double, std::milli>(t1 - t0).count()};
		}
	};
	threads = std::max<size_t>(1, std::min(threads, tasks.size()));
	std::vector<std::thread> pool;
	for (size_t i = 1; i < threads; ++i)
		pool.emplace_back(worker);
	worker();
	for (auto &t : pool)
		t.join();
	return out;
}

struct VerificationReport {
	json parameters;
	std::vector<CheckResult> checks;

	// Skipped checks are visible but do not fail the run.
	bool overall_pass() const
	{
		for (auto &c : checks)
			if (c.outcome.status == Status::Fail || c.outcome.status == Status::Inconclusive)
				return false;
		return true;
	}

	json to_json(bool timing = true) const
	{
		json cs = json::array();
		for (auto &c : checks)
			cs.push_back(c.to_json(timing));
		return {{"schema", kReportSchema},
		        {"tool_version", kToolVersion},
		        {"parameters", parameters},
		        {"checks", cs},
		        {"overall", overall_pass() ? "pass" : "fail"}};
	}
};

namespace checks {

inline json sig_params(size_t p, size_t q) { return {{"p", p}, {"q", q}}; }
inline json sig_params(size_t p, size_t q, const Rational &c) { return {{"p", p}, {"q", q}, {"c", c.fraction_string()}}; }

inline const char *kExclusionReason = "so(2,1)×so(2,1) exclusion";

// The co-Max theorem excludes so(2,2) = so(2,1) x so(2,1) as either algebra:
// (2,2) itself, and the targets so(2,2) reached from (2,1) with c < 0 and
// (1,2) with c > 0. n < 3 never reaches the theorem.
inline bool co_max_excluded(size_t p, size_t q, const Rational &c)
{
	if (p + q < 3)
		return true;
	if (p == 2 && q == 2)
		return true;
	if (p == 2 && q == 1 && c.sign() < 0)
		return true;
	if (p == 1 && q == 2 && c.sign() > 0)
		return true;
	return false;
}

inline Outcome defining_property(size_t p, size_t q)
{
	auto l = so_pq_algebra(p, q);
	Matrix eta = ipq(p, q);
	for (size_t i = 0; i < l.dim(); ++i)
		if (!preserves_form(l.basis()[i], eta))
			return fail("basis element violates A^t I + I A = 0", {{"index", i}});
	auto ref = orthogonal_algebra_basis(eta);
	if (ref.size() != l.dim())
		return fail("dimension differs from the solved orthogonal algebra");
	return pass({{"dim", l.dim()}});
}

inline Outcome jacobi(const LieAlgebra &l)
{
	if (auto bad = jacobi_violation(l))
		return fail("Jacobi identity fails", json::array({(*bad)[0], (*bad)[1], (*bad)[2]}));
	return pass();
}

inline Outcome killing_trace_proportional(size_t p, size_t q)
{
	auto l = so_pq_algebra(p, q);
	const size_t n = p + q;
	Matrix expect = Rational(static_cast<long>(n) - 2) * trace_form(l).gram;
	if (l.killing().gram != expect)
		return fail("K != (n-2) tr");
	return pass({{"factor", std::to_string(n - 2)}});
}

inline Outcome theta_automorphism(size_t p, size_t q)
{
	auto l = so_pq_algebra(p, q);
	Matrix th = theta_involution(l);
	if (th * th != Matrix::identity(l.dim()))
		return fail("theta^2 != 1");
	for (size_t i = 0; i < l.dim(); ++i)
		for (size_t j = i + 1; j < l.dim(); ++j) {
			auto lhs = mat_vec(th, l.bracket(unit_vector(l.dim(), i), unit_vector(l.dim(), j)));
			auto rhs = l.bracket(th.column_vector(i), th.column_vector(j));
			if (lhs != rhs)
				return fail("theta does not preserve the bracket", json::array({i, j}));
		}
	return pass();
}

// K([x, y], z) = -K(y, [x, z]) on basis elements.
inline Outcome beta_associative(const LieAlgebra &l)
{
	const Matrix &k = l.killing().gram;
	for (size_t i = 0; i < l.dim(); ++i) {
		Matrix a = l.ad(i);
		if (!(a.transpose() * k + k * a).is_zero())
			return fail("Killing form is not ad-invariant", {{"index", i}});
	}
	return pass();
}

inline Outcome standard_invariant_form(size_t p, size_t q)
{
	auto forms = invariant_symmetric_forms(standard_rep(p, q));
	if (forms.size() != 1)
		return fail("symmetric form space has dimension " + std::to_string(forms.size()));
	if (rank_of_vectors((p + q) * (p + q), {forms[0].flatten(), ipq(p, q).flatten()}) != 1)
		return fail("form is not proportional to I_{p,q}", to_json(forms[0]));
	return pass({{"dim", 1}});
}

inline Outcome standard_irreducible(size_t p, size_t q)
{
	auto v = is_irreducible(standard_rep(p, q));
	json w{{"verdict", to_string(v.verdict)}, {"endomorphism_dim", v.endomorphism_dim}};
	if (v.witness)
		w["submodule"] = to_json(*v.witness);
	// so(1,1) is abelian: R^{1,1} splits into the two null lines.
	Irreducibility expect = p + q >= 3 ? Irreducibility::Irreducible : Irreducibility::Reducible;
	if (v.verdict != expect)
		return v.verdict == Irreducibility::Inconclusive ? inconclusive(v.note, w) : fail("unexpected verdict", w);
	return pass(w);
}

// T_c (X . w) = [X, T_c w]: T W(X) = ad(X) T on every basis X.
inline Outcome t_c_equivariance(size_t p, size_t q, const Rational &c)
{
	auto l = so_pq_algebra(p, q);
	Matrix t = t_c(p, q, c);
	for (size_t a = 0; a < l.dim(); ++a)
		if (t * wedge_derivation(l.basis()[a]) != l.ad(a) * t)
			return fail("equivariance fails", {{"index", a}});
	return pass();
}

inline Outcome t_c_rank(size_t p, size_t q, const Rational &c)
{
	size_t r = rank(t_c(p, q, c));
	size_t expect = c.is_zero() ? 0 : (p + q) * (p + q - 1) / 2;
	if (r != expect)
		return fail("rank " + std::to_string(r) + ", expected " + std::to_string(expect));
	return pass({{"rank", r}});
}

inline size_t expected_hom_wedge2_adjoint(size_t p, size_t q)
{
	if (p + q == 4 && p >= 1 && q >= 1)
		return 2;
	return 1;
}

// dim Hom(wedge^2 R^{p,q}, so(p,q)); for (2,2) the generator-reduced system
// is double-checked by imposing the equations on every basis element.
inline Outcome hom_wedge2_adjoint(size_t p, size_t q)
{
	auto std_rep = standard_rep(p, q);
	auto w2 = wedge_square_rep(std_rep);
	auto ad = adjoint_rep(std_rep.algebra());
	auto h = hom_space(w2, ad);
	json w{{"dim", h.size()}};
	if (p == 2 && q == 2) {
		auto full = hom_space(w2, ad, HomOptions{false});
		w["brute_force_dim"] = full.size();
		if (full.size() != h.size())
			return fail("generator-reduced and full systems disagree", w);
	}
	size_t expect = expected_hom_wedge2_adjoint(p, q);
	if (h.size() != expect)
		return fail("expected dimension " + std::to_string(expect), w);
	std::vector<Vector> flat;
	for (auto &m : h)
		flat.push_back(m.flatten());
	Matrix t1 = t_c(p, q, Rational(1));
	auto span = Subspace::span(t1.rows() * t1.cols(), flat);
	if (!span.contains(t1.flatten()))
		return fail("T_1 is not in the Hom space", w);
	return pass(w);
}

inline Outcome deformed_jacobi(size_t p, size_t q, const Rational &c)
{
	auto d = deformed_algebra(p, q, c); // throws on a Jacobi violation
	const size_t n = p + q;
	if (d.algebra.dim() != n * (n + 1) / 2)
		return fail("unexpected dimension");
	return pass({{"dim", d.algebra.dim()}});
}

// c = 0: R^{p,q} is an abelian ideal and so(p,q) a subalgebra.
inline Outcome deformed_semidirect(size_t p, size_t q)
{
	auto d = deformed_algebra(p, q, Rational(0));
	const size_t dim = d.algebra.dim();
	std::vector<Vector> vs, ss;
	for (auto i : d.vec_block)
		vs.push_back(unit_vector(dim, i));
	for (auto i : d.so_block)
		ss.push_back(unit_vector(dim, i));
	auto v = Subspace::span(dim, vs), s = Subspace::span(dim, ss);
	if (!is_ideal(d.algebra, v))
		return fail("vector block is not an ideal");
	for (auto &x : vs)
		for (auto &y : vs)
			if (!is_zero(d.algebra.bracket(x, y)))
				return fail("vector block is not abelian");
	if (!is_subalgebra(d.algebra, s))
		return fail("so block is not a subalgebra");
	return pass();
}

inline Outcome embedding(size_t p, size_t q, const Rational &c)
{
	auto d = deformed_algebra(p, q, c);
	auto e = embedding_iso(p, q, c);
	auto cert = certify_embedding(d, e);
	json w{{"contained", cert.contained},
	       {"intertwines", cert.intertwines},
	       {"image_rank", cert.image_rank},
	       {"target_dim", cert.target_dim}};
	if (!cert.ok())
		return fail("embedding certificate incomplete", w);
	return pass(w);
}

inline Outcome target_inertia(size_t p, size_t q, const Rational &c)
{
	Inertia in = inertia_of_diagonalizable_form(ipq_c(p, q, c));
	Inertia expect = c.sign() > 0 ? Inertia{p + 1, q, 0} : Inertia{p, q + 1, 0};
	if (in != expect)
		return fail("inertia mismatch", to_json(in));
	return pass(to_json(in));
}

inline Outcome sqrt_c_conjugation(size_t p, size_t q, const Rational &c)
{
	auto r = verify_sqrt_conjugation(embedding_iso(p, q, c));
	if (!r)
		return skipped("|c| is not a rational square");
	return *r ? pass() : fail("conjugated image leaves the standard so(p+1,q)/so(p,q+1)");
}

struct KillingBlocks {
	bool ok = false;
	Rational a1, a2;
	std::string reason;
};

// K restricted to the so block = a1 K_so, to the vector block = a2 I_{p,q},
// zero across the blocks.
inline KillingBlocks killing_blocks(const DeformedAlgebra &d)
{
	KillingBlocks r;
	const Matrix &k = d.algebra.killing().gram;
	auto so = so_pq_algebra(d.signature.p, d.signature.q);
	const Matrix &kso = so.killing().gram;
	Matrix eta = ipq(d.signature.p, d.signature.q);
	for (auto i : d.so_block)
		for (auto j : d.vec_block)
			if (!k(i, j).is_zero()) {
				r.reason = "mixed block is nonzero";
				return r;
			}
	auto extract = [](const Matrix &got, const Matrix &ref, Rational &factor) {
		for (size_t i = 0; i < ref.rows(); ++i)
			for (size_t j = 0; j < ref.cols(); ++j)
				if (!ref(i, j).is_zero()) {
					factor = got(i, j) / ref(i, j);
					return got == factor * ref;
				}
		return false;
	};
	Matrix kss = k.block(0, 0, d.so_block.size(), d.so_block.size());
	Matrix kvv = k.block(d.vec_block.front(), d.vec_block.front(), d.vec_block.size(), d.vec_block.size());
	if (!extract(kss, kso, r.a1)) {
		r.reason = "so block is not proportional to the so(p,q) Killing form";
		return r;
	}
	if (!extract(kvv, eta, r.a2)) {
		r.reason = "vector block is not proportional to I_{p,q}";
		return r;
	}
	if (r.a1.is_zero() || r.a2.is_zero()) {
		r.reason = "vanishing proportionality constant";
		return r;
	}
	r.ok = true;
	return r;
}

inline Outcome killing_block_proportional(size_t p, size_t q, const Rational &c)
{
	auto kb = killing_blocks(deformed_algebra(p, q, c));
	json w{{"a1", kb.a1.fraction_string()}, {"a2", kb.a2.fraction_string()}};
	return kb.ok ? pass(w) : fail(kb.reason, w);
}

inline Subspace so_block_subspace(const DeformedAlgebra &d)
{
	std::vector<Vector> vs;
	for (auto i : d.so_block)
		vs.push_back(unit_vector(d.algebra.dim(), i));
	return Subspace::span(d.algebra.dim(), vs);
}

inline Outcome maximal_subalgebra(size_t p, size_t q, const Rational &c)
{
	if (co_max_excluded(p, q, c))
		return skipped(kExclusionReason);
	auto d = deformed_algebra(p, q, c);
	auto v = is_maximal_subalgebra(d.algebra, so_block_subspace(d));
	if (!v.maximal)
		return fail("intermediate subalgebra found", to_json(*v.witness));
	return pass();
}

inline Outcome centralizer_trivial(size_t p, size_t q, const Rational &c)
{
	if (co_max_excluded(p, q, c))
		return skipped(kExclusionReason);
	auto d = deformed_algebra(p, q, c);
	auto z = centralizer(d.algebra, so_block_subspace(d));
	if (!z.is_zero())
		return fail("nonzero centralizer", to_json(z));
	return pass();
}

// V = Killing-orthogonal complement of so(p,q) in the deformed algebra, as
// an so(p,q)-module.
inline Outcome co_max_complement(size_t p, size_t q, const Rational &c)
{
	if (co_max_excluded(p, q, c))
		return skipped(kExclusionReason);
	if (c.is_zero())
		return skipped("Killing form is degenerate at c = 0");
	auto d = deformed_algebra(p, q, c);
	auto h = so_block_subspace(d);
	auto v = orthogonal_complement(d.algebra.killing(), h);
	const size_t n = p + q;
	json w{{"complement_dim", v.dim()}};
	if (v.dim() != n)
		return fail("complement has the wrong dimension", w);
	auto so = so_pq_algebra(p, q);
	std::vector<Matrix> acts;
	for (auto i : d.so_block) {
		Matrix a = d.algebra.ad(i);
		Matrix m(n, n);
		for (size_t k = 0; k < n; ++k) {
			auto coords = v.coordinates(mat_vec(a, v.basis()[k]));
			if (!coords)
				return fail("complement is not invariant", w);
			for (size_t r = 0; r < n; ++r)
				m(r, k) = (*coords)[r];
		}
		acts.push_back(std::move(m));
	}
	Representation rep(so, n, std::move(acts));
	auto verdict = is_irreducible(rep);
	w["verdict"] = to_string(verdict.verdict);
	w["endomorphism_dim"] = verdict.endomorphism_dim;
	switch (verdict.verdict) {
	case Irreducibility::Irreducible:
		return pass(w);
	case Irreducibility::Reducible:
		w["submodule"] = to_json(*verdict.witness);
		return fail("complement is reducible", w);
	default:
		return inconclusive(verdict.note, w);
	}
}

// For c = +-1 the image is the standard matrix so(p+1,q) / so(p,q+1) up to
// a coordinate permutation, and must be stable under X -> -X^t.
inline Outcome theta_involution_target(size_t p, size_t q, const Rational &c)
{
	if (c.abs() != Rational(1))
		return skipped("only defined for c = +-1");
	auto e = embedding_iso(p, q, c);
	auto l = LieAlgebra::from_matrices(e.images);
	Matrix th = theta_involution(l);
	if (th * th != Matrix::identity(l.dim()))
		return fail("theta^2 != 1 on the target");
	return pass();
}

inline Outcome sl2c_adjoint_forms()
{
	auto l = sl2c_realified();
	auto ad = adjoint_rep(l);
	auto c2 = defining_rep(l);
	size_t ad_sym = invariant_symmetric_forms(ad).size();
	size_t c2_sym = invariant_symmetric_forms(c2).size();
	auto irr = is_irreducible(c2);
	json w{{"adjoint_symmetric_dim", ad_sym},
	       {"c2_symmetric_dim", c2_sym},
	       {"c2_verdict", to_string(irr.verdict)},
	       {"c2_endomorphism_dim", irr.endomorphism_dim}};
	if (ad_sym != 2 || c2_sym != 0 || irr.verdict != Irreducibility::Irreducible || irr.endomorphism_dim != 2)
		return fail("unexpected form or module data", w);
	return pass(w);
}

inline Outcome sl2c_constrained_uniqueness()
{
	auto l = sl2c_realified();
	auto r = constrained_form_uniqueness(adjoint_rep(l), su2_in_sl2c());
	json w{{"form_space_dim", r.form_space_dim},
	       {"constrained_dim", r.constrained.size()},
	       {"killing_spans", r.killing_spans},
	       {"twisted_violates", r.twisted_violates}};
	if (r.form_space_dim != 2 || r.constrained.size() != 1 || !r.killing_spans || !r.twisted_violates)
		return fail("constraint does not single out the Killing form", w);
	return pass(w);
}

inline Outcome ideal_counterexample_so22()
{
	auto l = so_pq_algebra(2, 2);
	auto v = is_irreducible(adjoint_rep(l));
	if (v.verdict != Irreducibility::Reducible || !v.witness)
		return fail(std::string("adjoint of so(2,2) not split: ") + to_string(v.verdict));
	const Subspace &ideal = *v.witness;
	json w{{"ideal", to_json(ideal)}};
	if (ideal.dim() != 3 || !is_ideal(l, ideal))
		return fail("witness is not a 3-dimensional ideal", w);
	auto m = is_maximal_subalgebra(l, ideal);
	if (m.maximal)
		return fail("ideal reported maximal", w);
	w["intermediate"] = to_json(*m.witness);
	return pass(w);
}

inline Outcome exceptional(ExceptionalName name)
{
	auto iso = exceptional_iso(name);
	auto cert = certify_exceptional(iso);
	json w{{"carrier_dim", iso.carrier.module_dim()},
	       {"form_space_dim", iso.carrier_form_space_dim},
	       {"inertia", to_json(iso.carrier_inertia)},
	       {"images_in_so_pq", cert.images_in_so_pq},
	       {"bijective", cert.bijective},
	       {"structure_matches", cert.structure_matches}};
	for (auto &m : iso.small_modules)
		if (m.homomorphism_violation())
			return fail("small module is not a representation", w);
	if (!cert.ok())
		return fail(iso.rational_normalization ? "certificate incomplete" : "no rational normalization of the form", w);
	return pass(w);
}

inline Outcome character_discrimination(const Rational &mu)
{
	auto r = character_discrimination_test(mu);
	json w{{"lambda", r.lambda.fraction_string()},
	       {"chi_adjoint", r.chi_adjoint.fraction_string()},
	       {"residual_r31", r.residual_r31.fraction_string()},
	       {"residual_c2", r.residual_c2.fraction_string()}};
	if (!r.residual_r31.is_zero())
		return fail("identity fails for R^{3,1}", w);
	if (r.residual_c2.is_zero())
		return fail("identity holds for C^2_R", w);
	if (r.chi_adjoint_sl2c != r.chi_adjoint)
		return fail("adjoint characters of so(3,1) and sl(2,C)_R disagree", w);
	return pass(w);
}

// tr wedge_action(g) = (tr(g)^2 - tr(g^2)) / 2 on seeded rational matrices
// and on the boost, and g(lambda)^2 = g(lambda^2).
inline Outcome wedge_character_identity()
{
	std::mt19937 rng(20261016);
	std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
	for (int trial = 0; trial < 8; ++trial) {
		Matrix g(4, 4);
		do {
			for (size_t i = 0; i < 4; ++i)
				for (size_t j = 0; j < 4; ++j)
					g(i, j) = Rational(num(rng), den(rng));
		} while (determinant(g).is_zero());
		if (wedge_action(g).trace() != wedge_character(g))
			return fail("trace identity fails", to_json(g));
	}
	for (auto lam : {Rational(9, 4), Rational(4), Rational(9)}) {
		auto g = boost(lam).matrix_on_V;
		if (wedge_action(g).trace() != wedge_character(g))
			return fail("trace identity fails on the boost", {{"lambda", lam.fraction_string()}});
		if (g * g != boost(lam * lam).matrix_on_V)
			return fail("g(lambda)^2 != g(lambda^2)", {{"lambda", lam.fraction_string()}});
	}
	return pass();
}

inline Outcome half_spin()
{
	auto s = half_spin_reps(4, 4);
	Matrix eta = ipq(4, 4);
	const Matrix id = Matrix::identity(16);
	for (size_t i = 0; i < 8; ++i)
		for (size_t j = 0; j < 8; ++j)
			if (s.gammas[i] * s.gammas[j] + s.gammas[j] * s.gammas[i] != Rational(2) * eta(i, j) * id)
				return fail("Clifford relation fails", json::array({i, j}));
	if (s.chirality * s.chirality != id)
		return fail("chirality does not square to 1");
	for (auto &a : s.spinor.actions())
		if (a * s.chirality != s.chirality * a)
			return fail("chirality does not commute with so(4,4)");
	json w = json::object();
	for (auto [label, rep] : {std::pair{"plus", &s.plus}, std::pair{"minus", &s.minus}}) {
		auto v = is_irreducible(*rep);
		size_t sym = invariant_symmetric_forms(*rep).size();
		size_t skew = invariant_skew_forms(*rep).size();
		w[label] = {{"dim", rep->module_dim()},
		            {"verdict", to_string(v.verdict)},
		            {"symmetric_dim", sym},
		            {"skew_dim", skew}};
		if (rep->module_dim() != 8 || v.verdict != Irreducibility::Irreducible || sym != 1 || skew != 0)
			return v.verdict == Irreducibility::Inconclusive ? inconclusive(v.note, w)
			                                                 : fail("half-spin module data mismatch", w);
	}
	return pass(w);
}

struct IrrepExpectation {
	RootKind kind;
	size_t rank, bound;
	std::vector<long> dims;
};

inline const std::vector<IrrepExpectation> &irrep_expectations()
{
	static const std::vector<IrrepExpectation> e{
	    {RootKind::B, 2, 5, {5, 4}},  {RootKind::D, 3, 6, {6, 4, 4}}, {RootKind::D, 4, 8, {8, 8, 8}},
	    {RootKind::B, 3, 7, {7}},     {RootKind::B, 4, 9, {9}},       {RootKind::D, 5, 10, {10}},
	    {RootKind::B, 4, 8, {}},
	};
	return e;
}

inline Outcome smallest_irreps()
{
	json w = json::array();
	bool ok = true;
	for (auto &e : irrep_expectations()) {
		auto rows = enumerate_up_to_dim(root_system(e.kind, e.rank), e.bound);
		std::vector<long> dims;
		for (auto &r : rows)
			dims.push_back(r.dim.to_double());
		ok = ok && dims == e.dims;
		w.push_back({{"type", std::string(to_string(e.kind)) + std::to_string(e.rank)},
		             {"bound", e.bound},
		             {"dims", dims}});
	}
	return ok ? pass(w) : fail("enumeration differs from the expected tables", w);
}

inline Outcome no_simple_algebra_dims()
{
	const std::vector<std::pair<size_t, std::vector<std::string>>> expect{
	    {18, {}}, {36, {"B4", "C4"}}, {10, {"B2"}}, {5, {}}};
	json w = json::object();
	bool ok = true;
	for (auto &[d, names] : expect) {
		auto s = no_simple_complex_algebra_of_dim(d);
		w[std::to_string(d)] = s.candidates;
		ok = ok && s.candidates == names && s.attained == !names.empty();
	}
	return ok ? pass(w) : fail("dimension scan mismatch", w);
}

inline Outcome bound_dimension(size_t p, size_t q)
{
	const size_t n = p + q;
	if (n < 4)
		return skipped("m(so(p,q)) not tabulated for n < 4");
	auto b = dimension_bound(p, q);
	json w{{"dim_g", b.dim_g}, {"m", b.m}, {"total", b.total}};
	if (!b.note.empty())
		w["note"] = b.note;
	if (p == 2 && q == 2)
		return b.m == 3 ? pass(w) : fail("m(so(2,2)) != 3", w);
	if (b.dim_g != n * (n - 1) / 2 || b.m != n || b.total != n * (n + 1) / 2)
		return fail("dimension table mismatch", w);
	return pass(w);
}

} // namespace checks

struct VerifyOptions {
	std::string suite = "all"; // appendix | section2 | all
	std::vector<std::pair<size_t, size_t>> signatures;
	std::vector<Rational> c_list;
	std::vector<Rational> mu_list;
};

inline std::vector<Rational> default_c_list()
{
	return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

inline std::vector<Rational> default_mu_list() { return {Rational(3, 2), Rational(2), Rational(3)}; }

// 1 <= p, q and 3 <= p + q <= max_n.
inline std::vector<std::pair<size_t, size_t>> signature_grid(size_t max_n = 8, size_t min_n = 3)
{
	std::vector<std::pair<size_t, size_t>> g;
	for (size_t n = min_n; n <= max_n; ++n)
		for (size_t p = n - 1; p >= 1; --p)
			g.emplace_back(p, n - p);
	return g;
}

inline void add_appendix_tasks(std::vector<CheckTask> &tasks, size_t p, size_t q, const std::vector<Rational> &cs)
{
	using namespace checks;
	const json sp = sig_params(p, q);
	tasks.push_back({"so_pq.defining_property", sp, [=] { return defining_property(p, q); }});
	tasks.push_back({"lie.jacobi", sp, [=] { return jacobi(so_pq_algebra(p, q)); }});
	tasks.push_back({"lie.killing_trace_proportional", sp, [=] { return killing_trace_proportional(p, q); }});
	tasks.push_back({"lie.theta_automorphism", sp, [=] { return theta_automorphism(p, q); }});
	tasks.push_back({"lie.beta_associative", sp, [=] { return beta_associative(so_pq_algebra(p, q)); }});
	tasks.push_back({"rep.standard_invariant_form", sp, [=] { return standard_invariant_form(p, q); }});
	tasks.push_back({"rep.standard_irreducible", sp, [=] { return standard_irreducible(p, q); }});
	tasks.push_back({"rep.hom_wedge2_adjoint", sp, [=] { return hom_wedge2_adjoint(p, q); }});
	const bool small = p + q < 3;
	for (auto &c : cs) {
		const json cp = sig_params(p, q, c);
		tasks.push_back({"so_pq.t_c_equivariance", cp, [=] { return t_c_equivariance(p, q, c); }});
		tasks.push_back({"so_pq.t_c_rank", cp, [=] { return t_c_rank(p, q, c); }});
		auto deformed = [&](const char *name, std::function<Outcome()> f) {
			if (small)
				tasks.push_back({name, cp, [] { return skipped("deformed algebra needs n = p + q >= 3"); }});
			else
				tasks.push_back({name, cp, std::move(f)});
		};
		deformed("so_pq.deformed_jacobi", [=] { return deformed_jacobi(p, q, c); });
		if (c.is_zero()) {
			deformed("so_pq.deformed_semidirect", [=] { return deformed_semidirect(p, q); });
		} else {
			deformed("so_pq.embedding_iso", [=] { return embedding(p, q, c); });
			tasks.push_back({"so_pq.target_inertia", cp, [=] { return target_inertia(p, q, c); }});
			tasks.push_back({"so_pq.sqrt_c_conjugation", cp, [=] { return sqrt_c_conjugation(p, q, c); }});
			tasks.push_back({"so_pq.theta_involution_target", cp, [=] { return theta_involution_target(p, q, c); }});
			deformed("lie.killing_block_proportional", [=] { return killing_block_proportional(p, q, c); });
		}
		// The maximality family reports the exclusion itself, including n < 3.
		tasks.push_back({"lie.maximal_subalgebra", cp, [=] { return maximal_subalgebra(p, q, c); }});
		tasks.push_back({"lie.centralizer_trivial", cp, [=] { return centralizer_trivial(p, q, c); }});
		tasks.push_back({"rep.co_max_complement_irreducible", cp, [=] { return co_max_complement(p, q, c); }});
	}
}

inline void add_section2_tasks(std::vector<CheckTask> &tasks, const std::vector<Rational> &mus)
{
	using namespace checks;
	const json none = json::object();
	tasks.push_back({"rep.sl2c_adjoint_forms", none, [] { return sl2c_adjoint_forms(); }});
	tasks.push_back({"rep.sl2c_constrained_uniqueness", none, [] { return sl2c_constrained_uniqueness(); }});
	tasks.push_back({"lie.ideal_counterexample_so22", none, [] { return ideal_counterexample_so22(); }});
	for (auto name : {ExceptionalName::SO31_SL2C, ExceptionalName::SO32_SP4R, ExceptionalName::SO33_SL4R})
		tasks.push_back({"rep.exceptional_iso", {{"name", to_string(name)}}, [=] { return exceptional(name); }});
	for (auto &mu : mus)
		tasks.push_back(
		    {"rep.character_discrimination", {{"mu", mu.fraction_string()}}, [=] { return character_discrimination(mu); }});
	tasks.push_back({"rep.wedge_character_identity", none, [] { return wedge_character_identity(); }});
	tasks.push_back({"rep.half_spin", {{"p", 4}, {"q", 4}}, [] { return half_spin(); }});
	tasks.push_back({"weyl.smallest_irreps", none, [] { return smallest_irreps(); }});
	tasks.push_back({"weyl.no_simple_algebra_dims", none, [] { return no_simple_algebra_dims(); }});
}

inline std::vector<CheckTask> build_suite(const VerifyOptions &opt)
{
	std::vector<CheckTask> tasks;
	auto sigs = opt.signatures.empty() ? signature_grid() : opt.signatures;
	auto cs = opt.c_list.empty() ? default_c_list() : opt.c_list;
	auto mus = opt.mu_list.empty() ? default_mu_list() : opt.mu_list;
	const bool appendix = opt.suite == "appendix" || opt.suite == "all";
	const bool section2 = opt.suite == "section2" || opt.suite == "all";
	if (appendix)
		for (auto [p, q] : sigs)
			add_appendix_tasks(tasks, p, q, cs);
	if (section2) {
		add_section2_tasks(tasks, mus);
		for (auto [p, q] : sigs)
			tasks.push_back({"bound.dimension", checks::sig_params(p, q), [p, q] { return checks::bound_dimension(p, q); }});
	}
	return tasks;
}

inline VerificationReport run_verify(const VerifyOptions &opt, size_t threads = thread_count())
{
	VerificationReport r;
	json sigs = json::array();
	for (auto [p, q] : opt.signatures.empty() ? signature_grid() : opt.signatures)
		sigs.push_back(json::array({p, q}));
	json cs = json::array(), mus = json::array();
	for (auto &c : opt.c_list.empty() ? default_c_list() : opt.c_list)
		cs.push_back(c.fraction_string());
	for (auto &m : opt.mu_list.empty() ? default_mu_list() : opt.mu_list)
		mus.push_back(m.fraction_string());
	r.parameters = {{"suite", opt.suite}, {"signatures", sigs}, {"c_list", cs}, {"mu_list", mus}};
	r.checks = run_checks(build_suite(opt), threads);
	return r;
}

} // namespace liepq
