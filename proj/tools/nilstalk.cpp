// Command-line surface for the stalk computations. All output is
// deterministic; identical invocations are byte-identical.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilstalk/decmatrix.hpp"
#include "nilstalk/gysin.hpp"
#include "nilstalk/kostka.hpp"
#include "nilstalk/partitions.hpp"
#include "nilstalk/render.hpp"
#include "nilstalk/resolutions.hpp"
#include "nilstalk/spaces.hpp"
#include "nilstalk/stalkcalc.hpp"

using namespace nilstalk;

namespace {

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad config line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

OutputFormat resolve_format(const std::string& flag_value, const std::string& config_path) {
    if (!flag_value.empty()) return parse_format(flag_value);
    if (const char* env = std::getenv("NILSTALK_FORMAT")) return parse_format(env);
    std::string path = config_path;
    if (path.empty())
        if (const char* env = std::getenv("NILSTALK_CONFIG")) path = env;
    if (!path.empty()) {
        auto kv = read_config(path);
        auto it = kv.find("format");
        if (it != kv.end()) return parse_format(it->second);
    }
    return OutputFormat::Table;
}

struct SweepRange {
    std::int64_t lo, hi;
};

SweepRange parse_sweep(const std::string& text) {
    // "p=2..13"
    if (text.rfind("p=", 0) != 0)
        throw std::invalid_argument("bad sweep spec '" + text + "' (expected p=A..B)");
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("bad sweep spec '" + text + "' (expected p=A..B)");
    try {
        std::int64_t lo = std::stoll(text.substr(2, dots - 2));
        std::int64_t hi = std::stoll(text.substr(dots + 2));
        if (lo < 2 || hi < lo) throw std::invalid_argument("empty sweep range");
        return {lo, hi};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad sweep spec '" + text + "'");
    }
}

std::string stalk_output(const StalkTable& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return render_table(t);
        case OutputFormat::Json: return to_json(t).dump() + "\n";
        case OutputFormat::Csv: return render_csv(t);
    }
    return {};
}

std::string graded_output(const GradedGroup& g, OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return render_line(g) + "\n";
        case OutputFormat::Json: return to_json(g).dump() + "\n";
        case OutputFormat::Csv: return render_csv(g);
    }
    return {};
}

std::string matrix_output(const DecompositionMatrix& d, OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return render_table(d);
        case OutputFormat::Json: return to_json(d).dump() + "\n";
        case OutputFormat::Csv: return render_csv(d);
    }
    return {};
}

std::string poly_output(const QPolynomial& p, OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return p.to_string() + "\n";
        case OutputFormat::Json: return to_json(p).dump() + "\n";
        case OutputFormat::Csv: return render_csv(p);
    }
    return {};
}

GradedGroup cohom_of(const std::string& space, const Coefficients& k) {
    GradedGroup z;
    const std::string cot = "complement-cotangent:";
    const std::string line = "complement-line:";
    if (space.rfind(cot, 0) == 0) {
        z = complement_cohomology(
            cotangent_euler_action(SpaceDescriptor::parse(space.substr(cot.size()))));
    } else if (space.rfind(line, 0) == 0) {
        auto body = space.substr(line.size());
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("complement-line needs m,multiple");
        z = complement_cohomology(line_bundle_action_on_projective(
            std::stoll(body.substr(0, comma)), std::stoll(body.substr(comma + 1))));
    } else {
        z = cohomology(SpaceDescriptor::parse(space));
    }
    if (k == Coefficients::integers()) return z;
    return change_coefficients(z, k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection cohomology stalks on nilpotent orbit closures"};
    app.require_subcommand(1);

    std::string format_flag, config_path;
    app.add_option("--config", config_path, "key=value config file");

    // orbits
    auto* orbits = app.add_subcommand("orbits", "list nilpotent orbits of sl_n");
    std::int64_t orbits_n = 0;
    orbits->add_option("--n", orbits_n, "rank")->required();
    orbits->add_option("--format", format_flag, "table|json|csv");

    // stalks
    auto* stalks = app.add_subcommand("stalks", "IC stalk table of a registered case");
    std::string stalks_case, stalks_coeff = "z", stalks_perv = "p", sweep_spec;
    std::int64_t stalks_n = 0;
    stalks->add_option("--case", stalks_case, "case name")->required();
    stalks->add_option("--n", stalks_n, "rank parameter");
    stalks->add_option("--coeff", stalks_coeff, "q|z|f<p>");
    stalks->add_option("--perversity", stalks_perv, "p|p+");
    stalks->add_option("--sweep", sweep_spec, "p=A..B: all primes in range");
    stalks->add_option("--format", format_flag, "table|json|csv");

    // cohom
    auto* cohom = app.add_subcommand("cohom", "cohomology of a space or complement");
    std::string cohom_space, cohom_coeff = "z";
    cohom->add_option("--space", cohom_space, "proj:m|grass:k,n|flag:n|lens:m,d|complement-cotangent:...|complement-line:m,c")
        ->required();
    cohom->add_option("--coeff", cohom_coeff, "q|z|f<p>");
    cohom->add_option("--format", format_flag, "table|json|csv");

    // kostka / ic0
    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
    auto* ic0 = app.add_subcommand("ic0", "characteristic-zero IC stalk polynomial");
    std::string lambda_str, mu_str;
    for (auto* cmd : {kostka_cmd, ic0}) {
        cmd->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
        cmd->add_option("--mu", mu_str, "partition")->required();
        cmd->add_option("--format", format_flag, "table|json|csv");
    }

    // decmatrix
    auto* dec = app.add_subcommand("decmatrix", "decomposition matrix of a case");
    std::string dec_case;
    std::int64_t dec_p = 0;
    bool dec_sym = false;
    dec->add_option("--case", dec_case, "sl2|sl3|sl4-22")->required();
    dec->add_option("--p", dec_p, "prime characteristic")->required();
    dec->add_flag("--symmetric-group", dec_sym, "extract the symmetric-group form");
    dec->add_option("--format", format_flag, "table|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        OutputFormat fmt = resolve_format(format_flag, config_path);

        if (*orbits) {
            auto parts = partitions_of(orbits_n);
            if (fmt == OutputFormat::Json) {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& p : parts)
                    a.push_back({{"label", p.to_string()}, {"dim", orbit_dim(p)}});
                std::cout << a.dump() << "\n";
            } else if (fmt == OutputFormat::Csv) {
                std::cout << "label,dim\n";
                for (const auto& p : parts)
                    std::cout << "\"" << p.to_string() << "\"," << orbit_dim(p) << "\n";
            } else {
                for (const auto& p : parts)
                    std::cout << p.to_string() << "\tdim " << orbit_dim(p) << "\n";
            }
        } else if (*stalks) {
            Perversity perv = parse_perversity(stalks_perv);
            CaseId id = CaseId::parse(stalks_case, stalks_n);
            if (!sweep_spec.empty()) {
                SweepRange range = parse_sweep(sweep_spec);
                std::vector<std::pair<std::int64_t, std::future<std::string>>> jobs;
                for (std::int64_t p = range.lo; p <= range.hi; ++p) {
                    if (!is_prime(p)) continue;
                    jobs.emplace_back(p, std::async(std::launch::async, [=]() {
                        try {
                            StalkTable t = ic_stalk_table(
                                id, Coefficients::prime_field(p), perv);
                            return stalk_output(t, fmt);
                        } catch (const std::domain_error& e) {
                            return std::string("# p=") + std::to_string(p) +
                                   " skipped: " + e.what() + "\n";
                        }
                    }));
                }
                for (auto& [p, fut] : jobs) std::cout << fut.get();
            } else {
                StalkTable t =
                    ic_stalk_table(id, Coefficients::parse(stalks_coeff), perv);
                std::cout << stalk_output(t, fmt);
            }
        } else if (*cohom) {
            Coefficients k = Coefficients::parse(cohom_coeff);
            std::cout << graded_output(cohom_of(cohom_space, k), fmt);
        } else if (*kostka_cmd) {
            auto p = kostka_foulkes(Partition::parse(lambda_str), Partition::parse(mu_str));
            std::cout << poly_output(p, fmt);
        } else if (*ic0) {
            auto p =
                char0_ic_stalk_poly(Partition::parse(lambda_str), Partition::parse(mu_str));
            std::cout << poly_output(p, fmt);
        } else if (*dec) {
            DecompositionMatrix d = nilpotent_decomposition_matrix(dec_case, dec_p);
            if (dec_sym) d = symmetric_group_submatrix(d, dec_p);
            std::cout << matrix_output(d, fmt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
