#include "bettilab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

#include "bettilab/cech.hpp"
#include "bettilab/cech_model.hpp"
#include "bettilab/er_model.hpp"
#include "bettilab/homology.hpp"
#include "bettilab/oracle.hpp"
#include "bettilab/stats.hpp"

namespace bettilab {

using nlohmann::json;

json config_to_json(const ExperimentConfig& c) {
	json doc;
	doc["model"] = c.model;
	doc["battery"] = c.battery;
	doc["n"] = c.n;
	doc["p"] = c.p;
	doc["p_exact"] = c.p_exact;
	doc["r"] = c.r;
	doc["d"] = c.d;
	doc["k"] = c.k;
	doc["delta"] = c.delta;
	doc["trials"] = c.trials;
	doc["gamma"] = c.gamma;
	doc["m_override"] = c.m_override;
	doc["c_const"] = c.c_const;
	doc["master_seed"] = c.master_seed;
	doc["poissonized"] = c.poissonized;
	doc["lambda"] = c.lambda;
	doc["j"] = c.j;
	doc["h_spec"] = c.h_spec;
	doc["mu_i"] = c.mu_i;
	doc["mu_j"] = c.mu_j;
	doc["mu_r"] = c.mu_r;
	doc["mu_trials"] = c.mu_trials;
	doc["q_offsets"] = c.q_offsets;
	doc["betti"] = c.betti;
	doc["full_homology"] = c.full_homology;
	doc["nerve_check"] = c.nerve_check;
	doc["cov_max_dim"] = c.cov_max_dim;
	doc["out_csv"] = c.out_csv;
	doc["out_json"] = c.out_json;
	return doc;
}

ExperimentConfig config_from_json(const json& doc) {
	static const std::set<std::string> known = {
	    "model",       "battery",   "n",          "p",         "p_exact",     "r",
	    "d",           "k",         "delta",      "trials",    "gamma",       "m_override",
	    "c_const",     "master_seed", "poissonized", "lambda",  "j",           "h_spec",
	    "mu_i",        "mu_j",      "mu_r",       "mu_trials", "q_offsets",   "betti",
	    "full_homology", "nerve_check", "cov_max_dim", "out_csv", "out_json"};
	if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");
	for (const auto& [key, value] : doc.items()) {
		(void)value;
		if (!known.count(key)) throw std::invalid_argument("config: unknown field '" + key + "'");
	}
	ExperimentConfig c;
	auto get = [&doc](const char* key, auto& target) {
		if (doc.contains(key)) doc.at(key).get_to(target);
	};
	get("model", c.model);
	get("battery", c.battery);
	get("n", c.n);
	get("p", c.p);
	get("p_exact", c.p_exact);
	get("r", c.r);
	get("d", c.d);
	get("k", c.k);
	get("delta", c.delta);
	get("trials", c.trials);
	get("gamma", c.gamma);
	get("m_override", c.m_override);
	get("c_const", c.c_const);
	get("master_seed", c.master_seed);
	get("poissonized", c.poissonized);
	get("lambda", c.lambda);
	get("j", c.j);
	get("h_spec", c.h_spec);
	get("mu_i", c.mu_i);
	get("mu_j", c.mu_j);
	get("mu_r", c.mu_r);
	get("mu_trials", c.mu_trials);
	get("q_offsets", c.q_offsets);
	get("betti", c.betti);
	get("full_homology", c.full_homology);
	get("nerve_check", c.nerve_check);
	get("cov_max_dim", c.cov_max_dim);
	get("out_csv", c.out_csv);
	get("out_json", c.out_json);
	return c;
}

namespace {

std::string format17(double v) {
	char buf[64];
	std::snprintf(buf, sizeof(buf), "%.17g", v);
	return buf;
}

// RFC 4180: CRLF row endings; columns are trial_index, seed, then the
// statistics in lexicographic name order
std::string records_to_csv(const std::vector<TrialRecord>& records) {
	if (records.empty()) return "";
	std::string csv = "trial_index,seed";
	for (const auto& [name, value] : records[0].stats) {
		(void)value;
		csv += "," + name;
	}
	csv += "\r\n";
	for (const auto& rec : records) {
		if (rec.stats.size() != records[0].stats.size()) {
			throw std::logic_error("records_to_csv: ragged statistics");
		}
		csv += std::to_string(rec.trial_index) + "," + std::to_string(rec.seed);
		for (const auto& [name, value] : rec.stats) {
			(void)name;
			csv += "," + format17(value);
		}
		csv += "\r\n";
	}
	return csv;
}

json summary_of(const SummaryStats& s) {
	return json{{"count", s.count},
	            {"mean", s.mean},
	            {"variance", s.variance},
	            {"skewness", s.skewness},
	            {"ex_kurtosis", s.ex_kurtosis},
	            {"se_mean", s.se_mean},
	            {"se_variance", s.se_variance},
	            {"se_skewness", s.se_skewness},
	            {"se_kurtosis", s.se_kurtosis}};
}

json normality_of(const std::vector<double>& values) {
	const auto s = summarize(values);
	if (!(s.variance > 0.0)) return json{{"ks", nullptr}, {"w1", nullptr}};
	const auto z = standardize(values, s.mean, std::sqrt(s.variance));
	return json{{"ks", ks_normal(z)}, {"w1", wasserstein1_normal(z)}};
}

double fraction(const std::vector<TrialRecord>& records, const std::string& name) {
	double acc = 0.0;
	for (const auto& rec : records) acc += rec.stats.at(name);
	return acc / static_cast<double>(records.size());
}

std::int64_t at_or_zero(const std::vector<std::int64_t>& f, int i) {
	return (i >= 0 && i < static_cast<int>(f.size())) ? f[i] : 0;
}

void er_trial(const ExperimentConfig& cfg, std::uint64_t seed,
              std::map<std::string, double>& stats) {
	Rng rng(seed);
	const Graph g = sample_er_graph(cfg.n, cfg.p, rng);
	const auto f = clique_f_vector_serial(g);
	const int k = cfg.k;
	const std::int64_t tb = tilde_beta(f, k);
	std::int64_t chi = 0;
	for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
	const int sign_k = k % 2 == 0 ? 1 : -1;
	const auto [morse_lo, morse_hi] = morse_bounds(f, k);

	stats["tilde_beta_k"] = static_cast<double>(tb);
	stats["chi"] = static_cast<double>(chi);
	stats["f_k"] = static_cast<double>(at_or_zero(f, k));
	stats["f_km1"] = static_cast<double>(at_or_zero(f, k - 1));
	stats["f_kp1"] = static_cast<double>(at_or_zero(f, k + 1));
	stats["clique_number"] = static_cast<double>(f.size());
	stats["alt_ok"] = tb == sign_k * chi ? 1.0 : 0.0;
	stats["morse_lower"] = static_cast<double>(morse_lo);
	stats["morse_upper"] = static_cast<double>(morse_hi);

	if (cfg.betti || cfg.full_homology) {
		const int top = static_cast<int>(f.size()) - 1;
		const int build_dim = cfg.full_homology ? std::max(k + 1, top) : k + 1;
		const auto complex = build_clique_complex(g, build_dim);
		if (cfg.full_homology) {
			const auto betti = betti_numbers_full(complex);
			const std::int64_t beta_k = k < static_cast<int>(betti.beta.size()) ? betti.beta[k] : 0;
			std::int64_t alternating_rest = 0;
			std::int64_t chi_beta = 0;
			for (std::size_t i = 0; i < betti.beta.size(); ++i) {
				const std::int64_t term = (i % 2 == 0 ? 1 : -1) * betti.beta[i];
				chi_beta += term;
				if (static_cast<int>(i) != k) alternating_rest += term;
			}
			stats["beta_k"] = static_cast<double>(beta_k);
			stats["euler_ok"] = chi_beta == chi ? 1.0 : 0.0;
			stats["offset_ok"] = tb == beta_k + sign_k * alternating_rest ? 1.0 : 0.0;
			stats["tilde_eq_beta"] = tb == beta_k ? 1.0 : 0.0;
			stats["tilde_eq_beta_plus_sign"] = tb - beta_k == sign_k ? 1.0 : 0.0;
			stats["morse_ok"] = morse_lo <= beta_k && beta_k <= morse_hi ? 1.0 : 0.0;
		} else {
			const std::int64_t beta_k = betti_numbers(complex, k).beta[k];
			stats["beta_k"] = static_cast<double>(beta_k);
			stats["morse_ok"] = morse_lo <= beta_k && beta_k <= morse_hi ? 1.0 : 0.0;
		}
	}
}

GeomConfig geom_of(const ExperimentConfig& cfg) {
	GeomConfig g;
	g.n = cfg.n;
	g.r = cfg.r;
	g.density.d = cfg.d;
	g.k = cfg.k;
	g.delta = cfg.delta;
	g.poissonized = cfg.poissonized;
	g.seed = cfg.master_seed;
	return g;
}

void cech_trial(const ExperimentConfig& cfg, std::uint64_t seed,
                std::map<std::string, double>& stats) {
	GeomConfig geom = geom_of(cfg);
	geom.seed = seed;
	Rng rng(seed);
	const auto cloud = sample_points(geom, rng);
	const int k = cfg.k;
	const auto decomp = component_decomposition(cloud, k);
	const std::int64_t m = cfg.m_override > 0
	                           ? cfg.m_override
	                           : std::max(truncation_order(cfg.delta, cfg.d), k + 2);
	const std::int64_t trunc = truncated_beta(decomp, k, m);

	stats["s_k"] = static_cast<double>(decomp.s_k);
	stats["truncated_beta_k"] = static_cast<double>(trunc);
	stats["beta_k_components"] = static_cast<double>(decomp.beta_k_total);
	stats["n_points"] = static_cast<double>(cloud.size());
	stats["max_component"] = static_cast<double>(decomp.max_component_size);
	stats["cap_ok"] = decomp.cap_ok() ? 1.0 : 0.0;
	stats["x_digest"] = static_cast<double>(decomp.digest() & 0xffffffffULL);
	stats["h_value"] = cloud.size() == 0
	                       ? 0.0
	                       : std::pow(static_cast<double>(cfg.n) * std::pow(cfg.r, cfg.d),
	                                  -(k + 1) / 2.0) *
	                             static_cast<double>(trunc);

	// independent global route for the decomposition identity, plus the
	// vanishing degrees at and above the ambient dimension
	const int nerve_dim = cfg.nerve_check ? std::max(k + 1, cfg.d + 1) : k + 1;
	if (cloud.size() == 0) {
		stats["beta_k"] = 0.0;
		stats["decomp_ok"] = 1.0;
		if (cfg.nerve_check) stats["beta_d"] = 0.0;
		return;
	}
	const auto complex = build_cech_complex(cloud, nerve_dim);
	const auto betti = betti_numbers(complex, cfg.nerve_check ? std::max(k, cfg.d) : k);
	stats["beta_k"] = static_cast<double>(betti.beta[k]);
	stats["decomp_ok"] = betti.beta[k] == decomp.beta_k_total ? 1.0 : 0.0;
	if (cfg.nerve_check) stats["beta_d"] = static_cast<double>(betti.beta[cfg.d]);
}

json er_summary(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
	json doc;
	json statistics;
	for (const auto& [name, value] : records[0].stats) {
		(void)value;
		statistics[name] = summary_of(summarize(extract(records, name)));
	}
	doc["statistics"] = statistics;

	json normality;
	normality["tilde_beta_k"] = normality_of(extract(records, "tilde_beta_k"));
	if (records[0].stats.count("beta_k")) {
		normality["beta_k"] = normality_of(extract(records, "beta_k"));
	}
	doc["normality"] = normality;

	json formula;
	const auto exact_var = exact_var_tilde_beta(cfg.n, cfg.p, cfg.k);
	const auto sigma2 = sigma2_asymptotic(cfg.n, cfg.p, cfg.k);
	formula["exact_var_tilde_beta"] = exact_var.value;
	formula["sigma2_asymptotic"] = sigma2.value;
	formula["sigma2_asymptotic_mode"] = "asymptotic-order";
	formula["stein_rate"] = stein_rate(cfg.n, cfg.p, cfg.k, cfg.c_const);
	formula["mean_f_k"] = mean_f(cfg.n, cfg.p, cfg.k).value;
	formula["regime"] = regime_name(regime_check(cfg.n, cfg.p, cfg.k, cfg.delta));
	if (exact_var.value > 0.0) {
		formula["var_ratio_tilde_empirical_over_exact"] =
		    summarize(extract(records, "tilde_beta_k")).variance / exact_var.value;
		if (records[0].stats.count("beta_k")) {
			formula["var_ratio_beta_empirical_over_exact"] =
			    summarize(extract(records, "beta_k")).variance / exact_var.value;
		}
	}
	doc["formula"] = formula;

	json identities;
	identities["alt_ok_fraction"] = fraction(records, "alt_ok");
	if (records[0].stats.count("morse_ok")) {
		identities["morse_ok_fraction"] = fraction(records, "morse_ok");
	}
	if (records[0].stats.count("offset_ok")) {
		identities["euler_ok_fraction"] = fraction(records, "euler_ok");
		identities["offset_ok_fraction"] = fraction(records, "offset_ok");
		identities["tilde_eq_beta_fraction"] = fraction(records, "tilde_eq_beta");
		identities["tilde_eq_beta_plus_sign_fraction"] =
		    fraction(records, "tilde_eq_beta_plus_sign");
	}
	doc["identities"] = identities;
	return doc;
}

json cech_summary(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
	json doc;
	json statistics;
	for (const auto& [name, value] : records[0].stats) {
		(void)value;
		statistics[name] = summary_of(summarize(extract(records, name)));
	}
	doc["statistics"] = statistics;

	json decomposition;
	decomposition["identity_fraction"] = fraction(records, "decomp_ok");
	decomposition["cap_ok_fraction"] = fraction(records, "cap_ok");
	if (records[0].stats.count("beta_d")) {
		double worst = 0.0;
		for (const auto& rec : records) worst = std::max(worst, rec.stats.at("beta_d"));
		decomposition["beta_d_max"] = worst;
	}
	doc["decomposition"] = decomposition;

	json truncation;
	const int m = truncation_order(cfg.delta, cfg.d);
	truncation["m"] = m;
	truncation["m_used"] = cfg.m_override > 0 ? cfg.m_override
	                                          : std::max<std::int64_t>(m, cfg.k + 2);
	truncation["tail_split_order"] = tail_split_order(cfg.delta, cfg.d);
	truncation["tail_contribution_bound_first"] =
	    tail_contribution_bound(cfg.n, cfg.r, cfg.d, cfg.k + 3, cfg.k, 1.0);
	doc["truncation"] = truncation;
	return doc;
}

json mu_summary(const ExperimentConfig& cfg) {
	json doc;
	const int i = cfg.mu_i > 0 ? cfg.mu_i : cfg.k + 2;
	DensitySpec density;
	density.d = cfg.d;
	if (cfg.poissonized) {
		GeomConfig geom = geom_of(cfg);
		const auto cmp = poisson_mean_scaling(geom, cfg.trials, cfg.mu_r, cfg.mu_trials);
		doc["lhs"] = cmp.lhs;
		doc["lhs_se"] = cmp.lhs_se;
		doc["rhs"] = cmp.rhs;
		doc["rhs_se"] = cmp.rhs_se;
		doc["mean_s_k"] = cmp.mean_s_k;
		doc["trials"] = cmp.trials;
		doc["mu"] = {{"i", cmp.mu.i},       {"j", cmp.mu.j},
		             {"mu_hat", cmp.mu.mu_hat}, {"std_err", cmp.mu.std_err},
		             {"successes", cmp.mu.successes}, {"trials", cmp.mu.trials},
		             {"degenerate", cmp.mu.degenerate}, {"r_used", cmp.mu.r_used}};
	} else {
		const auto est = estimate_mu(i, cfg.mu_j, cfg.k, density, cfg.mu_r, cfg.mu_trials,
		                             cfg.master_seed);
		doc["mu"] = {{"i", est.i},       {"j", est.j},
		             {"mu_hat", est.mu_hat}, {"std_err", est.std_err},
		             {"successes", est.successes}, {"trials", est.trials},
		             {"degenerate", est.degenerate}, {"r_used", est.r_used}};
	}
	return doc;
}

json mecke_summary(const ExperimentConfig& cfg) {
	DensitySpec density;
	density.d = cfg.d;
	const auto result = mecke_selftest(cfg.lambda, cfg.j, parse_mecke_h(cfg.h_spec), density,
	                                   cfg.r, cfg.trials, cfg.master_seed);
	const double combined = std::sqrt(result.lhs_se * result.lhs_se + result.rhs_se * result.rhs_se);
	json doc;
	doc["lhs"] = result.lhs;
	doc["lhs_se"] = result.lhs_se;
	doc["rhs"] = result.rhs;
	doc["rhs_se"] = result.rhs_se;
	doc["combined_se"] = combined;
	doc["abs_diff"] = std::fabs(result.lhs - result.rhs);
	doc["within_3_se"] = combined > 0.0 ? std::fabs(result.lhs - result.rhs) <= 3.0 * combined
	                                    : result.lhs == result.rhs;
	return doc;
}

json increments_summary(const ExperimentConfig& cfg) {
	GeomConfig geom = geom_of(cfg);
	const auto stats = increment_stats(geom, cfg.gamma, cfg.q_offsets, cfg.trials);
	json doc;
	doc["q_values"] = stats.q_values;
	doc["mean_r"] = stats.mean_r;
	doc["se_r"] = stats.se_r;
	doc["mean_r2"] = stats.mean_r2;
	doc["se_r2"] = stats.se_r2;
	json pairs = json::array();
	for (std::size_t i = 0; i < stats.pairs.size(); ++i) {
		pairs.push_back(json{{"q", stats.pairs[i].first},
		                     {"q_prime", stats.pairs[i].second},
		                     {"mean_rr", stats.mean_rr[i]},
		                     {"se_rr", stats.se_rr[i]}});
	}
	doc["pairs"] = pairs;
	doc["max_r2_over_sqrt_n"] = stats.max_r2_over_sqrt_n;
	doc["mean_bound"] = stats.mean_bound;
	doc["trials"] = stats.trials;
	return doc;
}

json formula_summary(const ExperimentConfig& cfg) {
	json doc;
	const int top = cfg.cov_max_dim;
	json means = json::array(), covs = json::array();
	for (int a = 0; a <= top; ++a) means.push_back(mean_f(cfg.n, cfg.p, a).value);
	for (int a = 0; a <= top; ++a) {
		json row = json::array();
		for (int b = 0; b <= top; ++b) row.push_back(cov_f(cfg.n, cfg.p, a, b).value);
		covs.push_back(row);
	}
	doc["mean_f"] = means;
	doc["cov_f"] = covs;
	doc["exact_var_tilde_beta"] = exact_var_tilde_beta(cfg.n, cfg.p, cfg.k).value;
	doc["sigma2_asymptotic"] = sigma2_asymptotic(cfg.n, cfg.p, cfg.k).value;
	doc["stein_rate"] = stein_rate(cfg.n, cfg.p, cfg.k, cfg.c_const);
	doc["regime"] = regime_name(regime_check(cfg.n, cfg.p, cfg.k, cfg.delta));
	doc["truncation_order"] = truncation_order(cfg.delta, cfg.d);
	doc["tail_split_order"] = tail_split_order(cfg.delta, cfg.d);
	doc["tail_contribution_bound_first"] =
	    tail_contribution_bound(cfg.n, cfg.r > 0 ? cfg.r : cfg.p, cfg.d, cfg.k + 3, cfg.k, 1.0);

	if (!cfg.p_exact.empty()) {
		const Rational p = parse_rational(cfg.p_exact);
		json means_x = json::array(), covs_x = json::array();
		for (int a = 0; a <= top; ++a) means_x.push_back(rational_to_string(mean_f_exact(cfg.n, p, a)));
		for (int a = 0; a <= top; ++a) {
			json row = json::array();
			for (int b = 0; b <= top; ++b) row.push_back(rational_to_string(cov_f_exact(cfg.n, p, a, b)));
			covs_x.push_back(row);
		}
		doc["mean_f_exact"] = means_x;
		doc["cov_f_exact"] = covs_x;
		doc["exact_var_tilde_beta_exact"] =
		    rational_to_string(exact_var_tilde_beta_exact(cfg.n, p, cfg.k));
	}
	return doc;
}

json oracle_summary(const ExperimentConfig& cfg) {
	if (cfg.p_exact.empty()) {
		throw std::invalid_argument("oracle: p_exact is required (e.g. \"1/2\")");
	}
	const Rational p = parse_rational(cfg.p_exact);
	const auto result = enumerate_er(static_cast<int>(cfg.n), p, cfg.k);
	json doc;
	doc["n"] = result.n;
	doc["p"] = rational_to_string(result.p);
	doc["k"] = result.k;
	doc["names"] = result.names;
	doc["weight_sum"] = rational_to_string(result.weight_sum);
	json means = json::array();
	for (const auto& m : result.mean) means.push_back(rational_to_string(m));
	doc["mean"] = means;
	json covs = json::array();
	for (const auto& row : result.cov) {
		json r = json::array();
		for (const auto& v : row) r.push_back(rational_to_string(v));
		covs.push_back(r);
	}
	doc["cov"] = covs;

	// closed-form values on the same grid, with exact-equality verdicts
	bool all_equal = result.weight_sum == 1;
	json formula_means = json::array(), formula_covs = json::array();
	for (int a = 0; a < result.n; ++a) {
		const Rational m = mean_f_exact(cfg.n, p, a);
		formula_means.push_back(rational_to_string(m));
		all_equal = all_equal && m == result.mean_f(a);
	}
	for (int a = 0; a < result.n; ++a) {
		json row = json::array();
		for (int b = 0; b < result.n; ++b) {
			const Rational v = cov_f_exact(cfg.n, p, a, b);
			row.push_back(rational_to_string(v));
			all_equal = all_equal && v == result.cov_ff(a, b);
		}
		formula_covs.push_back(row);
	}
	const Rational var_formula = exact_var_tilde_beta_exact(cfg.n, p, cfg.k);
	all_equal = all_equal && var_formula == result.var_tilde();
	doc["formula_mean_f"] = formula_means;
	doc["formula_cov_f"] = formula_covs;
	doc["formula_var_tilde_beta"] = rational_to_string(var_formula);
	doc["formula_matches_enumeration"] = all_equal;
	return doc;
}

}  // namespace

RunArtifacts run_experiment(const ExperimentConfig& cfg) {
	RunArtifacts artifacts;
	json summary;
	summary["version"] = bettilab_version;
	summary["config"] = config_to_json(cfg);
	summary["master_seed"] = cfg.master_seed;

	if (cfg.model == "er" || (cfg.model == "cech" && cfg.battery == "sim")) {
		const auto fn = cfg.model == "er"
		                    ? TrialFn([&cfg](std::uint64_t seed, std::map<std::string, double>& s) {
			                      er_trial(cfg, seed, s);
		                      })
		                    : TrialFn([&cfg](std::uint64_t seed, std::map<std::string, double>& s) {
			                      cech_trial(cfg, seed, s);
		                      });
		const auto records = run_trials(cfg.trials, cfg.master_seed, fn);
		artifacts.csv = records_to_csv(records);
		summary.update(cfg.model == "er" ? er_summary(cfg, records) : cech_summary(cfg, records));
	} else if (cfg.model == "cech" && cfg.battery == "mu") {
		summary.update(mu_summary(cfg));
	} else if (cfg.model == "cech" && cfg.battery == "mecke") {
		summary.update(mecke_summary(cfg));
	} else if (cfg.model == "cech" && cfg.battery == "increments") {
		summary.update(increments_summary(cfg));
	} else if (cfg.model == "formula") {
		summary.update(formula_summary(cfg));
	} else if (cfg.model == "oracle") {
		summary.update(oracle_summary(cfg));
	} else {
		throw std::invalid_argument("unknown model/battery: " + cfg.model + "/" + cfg.battery);
	}
	artifacts.summary = std::move(summary);
	return artifacts;
}

int run_and_emit(const ExperimentConfig& cfg) {
	const auto artifacts = run_experiment(cfg);
	if (!cfg.out_csv.empty() && !artifacts.csv.empty()) {
		std::ofstream out(cfg.out_csv, std::ios::binary);
		if (!out) throw std::runtime_error("cannot open " + cfg.out_csv);
		out << artifacts.csv;
	}
	const std::string rendered = artifacts.summary.dump(2) + "\n";
	if (!cfg.out_json.empty()) {
		std::ofstream out(cfg.out_json, std::ios::binary);
		if (!out) throw std::runtime_error("cannot open " + cfg.out_json);
		out << rendered;
	} else {
		std::fputs(rendered.c_str(), stdout);
	}
	return 0;
}

}  // namespace bettilab
