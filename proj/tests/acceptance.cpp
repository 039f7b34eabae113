// Runs the ten acceptance criteria, one line each, exact arithmetic only.
// Exit status is nonzero if any criterion fails or exceeds its budget.

#include "liepq/verify.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace liepq;

namespace {

struct Verdict {
	bool ok = true;
	std::ostringstream detail;

	void require(bool cond, const std::string &what)
	{
		if (!cond) {
			if (ok)
				detail << "first failure: " << what;
			ok = false;
		}
	}
};

std::string sig(size_t p, size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string sig(size_t p, size_t q, const Rational &c) { return sig(p, q) + " c=" + c.fraction_string(); }

std::vector<Rational> nonzero_cs()
{
	std::vector<Rational> out;
	for (auto &c : default_c_list())
		if (!c.is_zero())
			out.push_back(c);
	return out;
}

bool passed(const Outcome &o) { return o.status == Status::Pass; }

void criterion_1(Verdict &v)
{
	size_t n = 0;
	for (auto [p, q] : signature_grid(8))
		for (auto &c : default_c_list()) {
			auto d = deformed_algebra(p, q, c);
			v.require(!jacobi_violation(d.algebra), "Jacobi " + sig(p, q, c));
			++n;
		}
	v.detail << n << " deformed algebras";
}

void criterion_2(Verdict &v)
{
	size_t n = 0;
	for (auto [p, q] : signature_grid(8))
		for (auto &c : nonzero_cs()) {
			auto cert = certify_embedding(deformed_algebra(p, q, c), embedding_iso(p, q, c));
			v.require(cert.ok(), "embedding " + sig(p, q, c));
			v.require(passed(checks::target_inertia(p, q, c)), "inertia " + sig(p, q, c));
			++n;
		}
	v.detail << n << " embeddings certified";
}

void criterion_3(Verdict &v)
{
	const std::vector<std::tuple<size_t, size_t, size_t>> table{
	    {2, 1, 1}, {4, 1, 1}, {3, 2, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {4, 4, 1}, {3, 1, 2}, {2, 2, 2}};
	for (auto [p, q, expect] : table) {
		auto w2 = wedge_square_rep(standard_rep(p, q));
		auto ad = adjoint_rep(so_pq_algebra(p, q));
		size_t got = hom_space(w2, ad).size();
		v.require(got == expect, "Hom dim " + sig(p, q) + " = " + std::to_string(got));
		if (p == 2 && q == 2) {
			size_t brute = hom_space(w2, ad, HomOptions{false}).size();
			v.require(brute == got, "(2,2) brute-force rank disagrees");
			v.detail << "(2,2) brute force " << brute << "; ";
		}
	}
	v.detail << table.size() << " signatures";
}

void criterion_4(Verdict &v)
{
	for (auto &e : checks::irrep_expectations()) {
		std::vector<long> dims;
		for (auto &row : enumerate_up_to_dim(root_system(e.kind, e.rank), e.bound))
			dims.push_back(static_cast<long>(row.dim.to_double()));
		v.require(dims == e.dims, std::string(to_string(e.kind)) + std::to_string(e.rank));
		v.detail << to_string(e.kind) << e.rank << "<=" << e.bound << ":{";
		for (size_t i = 0; i < dims.size(); ++i)
			v.detail << (i ? "," : "") << dims[i];
		v.detail << "} ";
	}
}

void criterion_5(Verdict &v)
{
	for (auto &mu : default_mu_list()) {
		auto r = character_discrimination_test(mu);
		v.require(r.residual_r31.is_zero(), "R^{3,1} residual at mu=" + mu.fraction_string());
		v.require(!r.residual_c2.is_zero(), "C^2_R residual at mu=" + mu.fraction_string());
		v.detail << "mu=" << mu.fraction_string() << ":(0," << r.residual_c2.fraction_string() << ") ";
	}
}

void criterion_6(Verdict &v)
{
	size_t n = 0;
	for (auto [p, q] : signature_grid(6))
		for (auto &c : nonzero_cs()) {
			if (checks::co_max_excluded(p, q, c))
				continue;
			auto d = deformed_algebra(p, q, c);
			auto h = checks::so_block_subspace(d);
			v.require(is_maximal_subalgebra(d.algebra, h).maximal, "maximal " + sig(p, q, c));
			v.require(centralizer(d.algebra, h).is_zero(), "centralizer " + sig(p, q, c));
			++n;
		}
	v.require(passed(checks::ideal_counterexample_so22()), "so(2,2) ideal counterexample");
	v.detail << n << " (p,q,c) maximal with trivial centralizer; so(2,1) ideal of so(2,2) not maximal";
}

void criterion_7(Verdict &v)
{
	for (auto [p, q] : signature_grid(8))
		v.require(passed(checks::standard_invariant_form(p, q)), "standard form " + sig(p, q));
	auto s = half_spin_reps(4, 4);
	for (auto *rep : {&s.plus, &s.minus}) {
		v.require(invariant_symmetric_forms(*rep).size() == 1, "C± symmetric form space");
		v.require(invariant_skew_forms(*rep).size() == 0, "C± skew form space");
	}
	v.require(passed(checks::sl2c_adjoint_forms()), "sl(2,C)_R adjoint forms");
	v.require(passed(checks::sl2c_constrained_uniqueness()), "su(2) constraint");
	size_t n = 0;
	for (auto [p, q] : signature_grid(8))
		for (auto &c : nonzero_cs()) {
			auto kb = checks::killing_blocks(deformed_algebra(p, q, c));
			v.require(kb.ok && !kb.a1.is_zero() && !kb.a2.is_zero(), "Killing blocks " + sig(p, q, c));
			++n;
		}
	v.detail << "forms ok; " << n << " Killing block certificates";
}

void criterion_8(Verdict &v)
{
	size_t n = 0;
	for (auto [p, q] : signature_grid(6))
		for (auto &c : nonzero_cs()) {
			if (checks::co_max_excluded(p, q, c))
				continue;
			auto o = checks::co_max_complement(p, q, c);
			v.require(passed(o), "co-Max complement " + sig(p, q, c) + ": " + o.reason);
			++n;
		}
	v.detail << n << " complements IRREDUCIBLE";
}

void criterion_9(Verdict &v)
{
	auto o = checks::half_spin();
	v.require(passed(o), "half-spin: " + o.reason);
	v.detail << "C+ and C- 8-dim, IRREDUCIBLE, one symmetric form each";
}

void criterion_10(Verdict &v)
{
	size_t n = 0;
	for (auto [p, q] : signature_grid(8, 4)) {
		if (p == 2 && q == 2)
			continue;
		auto b = dimension_bound(p, q);
		const size_t k = p + q;
		v.require(b.dim_g == k * (k - 1) / 2 && b.m == k && b.total == k * (k + 1) / 2, "bound " + sig(p, q));
		++n;
	}
	v.require(dimension_bound(4, 4).total == 36, "(4,4) total");
	v.detail << n << " signatures; (4,4) -> 36";
}

struct Criterion {
	int id;
	const char *title;
	double budget_ms;
	void (*run)(Verdict &);
};

} // namespace

int main()
{
	const Criterion criteria[] = {
	    {1, "deformed-bracket Jacobi", 60000, criterion_1},
	    {2, "isomorphism certification", 30000, criterion_2},
	    {3, "Hom-space dimensions", 60000, criterion_3},
	    {4, "smallest-module enumeration", 10000, criterion_4},
	    {5, "character discrimination", 5000, criterion_5},
	    {6, "maximality and centralizer", 120000, criterion_6},
	    {7, "invariant-form certificates", 60000, criterion_7},
	    {8, "co-Max module pipeline", 60000, criterion_8},
	    {9, "half-spin construction", 120000, criterion_9},
	    {10, "dimension table", 1000, criterion_10},
	};
	int failures = 0;
	for (auto &c : criteria) {
		Verdict v;
		auto t0 = std::chrono::steady_clock::now();
		try {
			c.run(v);
		} catch (const std::exception &e) {
			v.require(false, std::string("exception: ") + e.what());
		}
		double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
		bool in_budget = ms <= c.budget_ms;
		bool ok = v.ok && in_budget;
		failures += !ok;
		std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " (" << std::fixed
		          << std::setprecision(1) << ms << " ms, budget " << c.budget_ms << " ms"
		          << (in_budget ? "" : ", OVER BUDGET") << ") " << v.detail.str() << "\n";
	}
	std::cout << (failures ? "FAILED: " : "all criteria passed") << (failures ? std::to_string(failures) : "") << "\n";
	return failures ? 1 : 0;
}
