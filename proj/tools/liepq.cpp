#include "liepq/serialize.hpp"
#include "liepq/verify.hpp"
#include "liepq/weyl.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace liepq;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string &s)
{
	try {
		return Rational::parse(s);
	} catch (const std::exception &) {
		throw UsageError("not a rational number in p/q syntax: '" + s + "'");
	}
}

std::vector<Rational> parse_rational_list(const std::string &s)
{
	std::vector<Rational> out;
	std::stringstream ss(s);
	for (std::string tok; std::getline(ss, tok, ',');)
		out.push_back(parse_rational(tok));
	if (out.empty())
		throw UsageError("empty list");
	return out;
}

void print_report(const VerificationReport &r, const std::string &format)
{
	if (format == "json") {
		std::cout << r.to_json().dump(2) << "\n";
		return;
	}
	if (format == "tsv") {
		std::cout << "name\tparams\tstatus\telapsed_ms\treason\n";
		for (auto &c : r.checks)
			std::cout << c.name << "\t" << c.params.dump() << "\t" << to_string(c.outcome.status) << "\t"
			          << c.elapsed_ms << "\t" << c.outcome.reason << "\n";
		std::cout << "overall\t{}\t" << (r.overall_pass() ? "pass" : "fail") << "\t\t\n";
		return;
	}
	for (auto &c : r.checks) {
		std::string st = to_string(c.outcome.status);
		for (auto &ch : st)
			ch = static_cast<char>(std::toupper(ch));
		std::cout << "[" << st << "] " << c.name << " " << c.params.dump();
		if (!c.outcome.reason.empty())
			std::cout << " (" << c.outcome.reason << ")";
		std::cout << "\n";
	}
	std::cout << "overall: " << (r.overall_pass() ? "pass" : "fail") << "\n";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact rational constructions and certificates for so(p,q)"};
	app.require_subcommand(1);
	app.set_version_flag("--version", kToolVersion);

	auto *construct = app.add_subcommand("construct", "Print so(p,q) or the deformed algebra as JSON");
	long cp = -1, cq = -1;
	std::string cc;
	construct->add_option("--p", cp, "positive index")->required();
	construct->add_option("--q", cq, "negative index")->required();
	construct->add_option("--c", cc, "deformation parameter, p/q syntax");

	auto *verify = app.add_subcommand("verify", "Run a verification suite");
	std::string suite = "all", format = "json", c_list, mu_list;
	long vp = -1, vq = -1;
	verify->add_option("--suite", suite)->check(CLI::IsMember({"appendix", "section2", "all"}));
	verify->add_option("--p", vp);
	verify->add_option("--q", vq);
	verify->add_option("--c-list", c_list, "comma separated rationals");
	verify->add_option("--mu-list", mu_list, "comma separated rationals");
	verify->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "human"}));

	auto *irreps = app.add_subcommand("irreps", "Dominant weights of B_r / D_r up to a dimension");
	std::string type;
	long rank = 0, max_dim = 0;
	irreps->add_option("--type", type)->required()->check(CLI::IsMember({"B", "D"}));
	irreps->add_option("--rank", rank)->required();
	irreps->add_option("--max-dim", max_dim)->required();

	auto *bound = app.add_subcommand("bound", "dim G, m(so(p,q)) and their sum");
	long bp = -1, bq = -1;
	bound->add_option("--p", bp)->required();
	bound->add_option("--q", bq)->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? kExitPass : kExitUsage;
	}

	try {
		if (*construct) {
			if (cp < 0 || cq < 0 || cp + cq < 2)
				throw UsageError("invalid signature: need p, q >= 0 and p + q >= 2");
			json out;
			if (!cc.empty()) {
				Rational c = parse_rational(cc);
				if (cp + cq < 3)
					throw UsageError("the deformed algebra needs p + q >= 3");
				out = to_json(deformed_algebra(cp, cq, c));
			} else {
				out = to_json(so_pq_algebra(cp, cq));
				out["p"] = cp;
				out["q"] = cq;
			}
			std::cout << out.dump(2) << "\n";
			return kExitPass;
		}
		if (*verify) {
			VerifyOptions opt;
			opt.suite = suite;
			if ((vp < 0) != (vq < 0))
				throw UsageError("--p and --q must be given together");
			if (vp >= 0) {
				if (vp < 1 || vq < 1)
					throw UsageError("invalid signature: need p, q >= 1");
				opt.signatures.emplace_back(vp, vq);
			}
			if (!c_list.empty())
				opt.c_list = parse_rational_list(c_list);
			if (!mu_list.empty()) {
				opt.mu_list = parse_rational_list(mu_list);
				for (auto &mu : opt.mu_list)
					if (mu.sign() <= 0 || mu == Rational(1))
						throw UsageError("mu values must be positive and different from 1");
			}
			auto report = run_verify(opt);
			print_report(report, format);
			return report.overall_pass() ? kExitPass : kExitFail;
		}
		if (*irreps) {
			if (rank < 2)
				throw UsageError("rank must be at least 2");
			if (max_dim < 1)
				throw UsageError("max-dim must be at least 1");
			auto rs = root_system(type == "B" ? RootKind::B : RootKind::D, rank);
			if (!rs.flag.empty())
				std::cerr << "note: " << rs.flag << "\n";
			std::cout << "type\trank\tweight\tdim\n";
			for (auto &row : enumerate_up_to_dim(rs, max_dim)) {
				std::cout << type << "\t" << rank << "\t";
				for (size_t i = 0; i < row.weight.size(); ++i)
					std::cout << (i ? "," : "") << row.weight[i].fraction_string();
				std::cout << "\t" << row.dim.numerator().get_str() << "\n";
			}
			return kExitPass;
		}
		if (*bound) {
			if (bp < 1 || bq < 1)
				throw UsageError("invalid signature: need p, q >= 1");
			DimensionBound b;
			try {
				b = dimension_bound(bp, bq);
			} catch (const UnknownMError &e) {
				throw UsageError(e.what());
			}
			json out{{"p", bp}, {"q", bq}, {"dim_g", b.dim_g}, {"m", b.m}, {"total", b.total}};
			if (!b.note.empty())
				out["note"] = b.note;
			std::cout << out.dump(2) << "\n";
			return kExitPass;
		}
	} catch (const UsageError &e) {
		std::cerr << "liepq: " << e.what() << "\n";
		return kExitUsage;
	} catch (const std::exception &e) {
		std::cerr << "liepq: " << e.what() << "\n";
		return kExitFail;
	}
	return kExitUsage;
}
