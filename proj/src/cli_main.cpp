#include "betacyl/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "betacyl/beta_spec.hpp"
#include "betacyl/cantor.hpp"
#include "betacyl/cylinders.hpp"
#include "betacyl/density.hpp"
#include "betacyl/errors.hpp"
#include "betacyl/expansion.hpp"
#include "betacyl/json_io.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

namespace {

void print_json(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << "\n";
}

// shared option block of the construction commands
struct CantorFlags {
    std::string delta = "1.5";
    std::string zeta = "0.1";
    long top = 10;
    long growth = 4;
    long n1 = 0;
    long generations = 1;
    unsigned long long seed = 1;
    long p = 0;
};

void add_cantor_flags(CLI::App* sub, CantorFlags& f) {
    sub->add_option("--delta", f.delta, "mass parameter, in (1,2]")->capture_default_str();
    sub->add_option("--zeta", f.zeta, "gap parameter, in (0,(2-delta)/(2*delta))")
        ->capture_default_str();
    sub->add_option("--N", f.top, "top digit, >= 3")->capture_default_str();
    sub->add_option("--growth", f.growth, "depth growth factor")->capture_default_str();
    sub->add_option("--n1", f.n1, "first-generation depth override (0 = use the schedule)")
        ->capture_default_str();
    sub->add_option("--generations", f.generations, "generation horizon")->capture_default_str();
    sub->add_option("--seed", f.seed, "seed for the free digits")->capture_default_str();
    sub->add_option("--p", f.p, "precision override in bits (0 = auto)")->capture_default_str();
}

CantorConfig make_config(const CantorFlags& f) {
    CantorConfig cfg;
    cfg.delta = parse_positive_number(f.delta);
    cfg.zeta = parse_positive_number(f.zeta);
    cfg.N = f.top;
    cfg.growth = f.growth;
    cfg.n1_override = f.n1;
    cfg.K = f.generations;
    cfg.seed = f.seed;
    cfg.validate();
    return cfg;
}

ordered_json config_to_json(const CantorConfig& cfg) {
    ordered_json j;
    j["delta"] = cfg.delta.get_str();
    j["zeta"] = cfg.zeta.get_str();
    j["N"] = cfg.N;
    j["growth"] = cfg.growth;
    j["n1_override"] = cfg.n1_override;
    j["generations"] = cfg.K;
    j["seed"] = cfg.seed;
    return j;
}

ordered_json schedule_to_json(const std::vector<GenerationParams>& sched) {
    ordered_json rows = ordered_json::array();
    for (const GenerationParams& g : sched) rows.push_back(generation_to_json(g));
    return rows;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified arithmetic for beta-expansions and parameter cylinders"};
    app.require_subcommand(1);

    // expand
    std::string ex_beta;
    std::string ex_x;
    long ex_n = 0;
    auto* expand = app.add_subcommand("expand", "digits of the expansion of 1 (or of --x)");
    expand->add_option("--beta", ex_beta, "base, e.g. 1.8, 9/5 or root:1,1")->required();
    expand->add_option("--n", ex_n, "number of digits")->required();
    expand->add_option("--x", ex_x, "expand this point of [0,1) instead of 1");
    expand->callback([&] {
        BetaSpec spec = BetaSpec::parse(ex_beta);
        ordered_json j;
        j["beta"] = spec.describe();
        DigitsResult res;
        if (ex_x.empty()) {
            res = digits_of_one(spec, ex_n);
        } else {
            mpq_class x = parse_positive_number(ex_x);
            j["x"] = x.get_str();
            res = digits_of_x(spec, x, ex_n);
        }
        j["n"] = ex_n;
        j["digits"] = res.digits;
        j["precision"] = res.precision;
        print_json(out, j);
    });

    // selfadm
    std::string sa_word;
    auto* selfadm = app.add_subcommand("selfadm", "test a word against its own shifts");
    selfadm->add_option("--word", sa_word, "comma separated digits")->required();
    selfadm->callback([&] {
        DigitWord w = parse_word(sa_word);
        ordered_json j;
        j["word"] = word_to_string(w);
        j["self_admissible"] = is_self_admissible(w);
        print_json(out, j);
    });

    // tau
    std::string tau_word;
    auto* tau = app.add_subcommand("tau", "recurrence time of a self-admissible word");
    tau->add_option("--word", tau_word, "comma separated digits")->required();
    tau->callback([&] {
        RecurrenceInfo info = recurrence_time(parse_word(tau_word));
        ordered_json j;
        j["word"] = word_to_string(parse_word(tau_word));
        j["tau"] = info.tau;
        j["t"] = info.t;
        j["non_recurrent"] = info.non_recurrent;
        print_json(out, j);
    });

    // successor
    std::string succ_word;
    auto* succ = app.add_subcommand("successor", "next self-admissible word of the same length");
    succ->add_option("--word", succ_word, "comma separated digits")->required();
    succ->callback([&] {
        DigitWord w = parse_word(succ_word);
        ordered_json j;
        j["word"] = word_to_string(w);
        j["successor"] = word_to_string(successor(w));
        print_json(out, j);
    });

    // enumerate
    long en_n = 0;
    long en_max_first = 0;
    std::string en_format = "json";
    auto* enumerate = app.add_subcommand("enumerate", "self-admissible words in order");
    enumerate->add_option("--n", en_n, "word length")->required();
    enumerate->add_option("--max-first", en_max_first, "largest first digit to visit")->required();
    enumerate->add_option("--format", en_format, "json or csv")->capture_default_str();
    enumerate->callback([&] {
        if (en_format != "json" && en_format != "csv")
            throw ParseError("format must be json or csv");
        std::vector<std::string> words;
        enumerate_self_admissible(static_cast<int>(en_n), static_cast<int>(en_max_first),
                                  [&](const DigitWord& w) {
                                      words.push_back(word_to_string(w));
                                      return true;
                                  });
        if (en_format == "csv") {
            for (const std::string& s : words) out << s << "\n";
            return;
        }
        ordered_json j;
        j["n"] = en_n;
        j["max_first"] = en_max_first;
        j["count"] = words.size();
        j["words"] = words;
        print_json(out, j);
    });

    // count
    std::string cnt_beta;
    long cnt_n = 0;
    auto* count = app.add_subcommand("count", "number of admissible words of a length");
    count->add_option("--beta", cnt_beta, "base")->required();
    count->add_option("--n", cnt_n, "word length")->required();
    count->callback([&] {
        BetaSpec spec = BetaSpec::parse(cnt_beta);
        InfiniteExpansionResult exp = infinite_expansion_of_one(spec, cnt_n);
        EventuallyPeriodicSequence eps;
        if (exp.periodic) {
            eps = exp.sequence;
        } else {
            // only the first cnt_n digits are read below, the padding digit
            // never enters the count
            eps.preperiod = exp.prefix;
            eps.period = DigitWord{0};
        }
        ordered_json j;
        j["beta"] = spec.describe();
        j["n"] = cnt_n;
        j["count"] = count_admissible(cnt_n, eps).get_str();
        j["expansion_periodic"] = exp.periodic;
        j["precision"] = exp.precision;
        print_json(out, j);
    });

    // cylinder
    std::string cyl_word;
    std::string cyl_beta;
    long cyl_n = 0;
    long cyl_p = 128;
    auto* cylinder = app.add_subcommand("cylinder", "parameter interval of a digit prefix");
    cylinder->add_option("--word", cyl_word, "the prefix itself");
    cylinder->add_option("--beta", cyl_beta, "base whose expansion provides the prefix");
    cylinder->add_option("--n", cyl_n, "prefix depth (with --beta)");
    cylinder->add_option("--p", cyl_p, "endpoint precision in bits")->capture_default_str();
    cylinder->callback([&] {
        ordered_json j;
        ParameterCylinder c;
        if (!cyl_word.empty()) {
            c = cylinder_endpoints(parse_word(cyl_word), cyl_p);
        } else if (!cyl_beta.empty() && cyl_n > 0) {
            BetaSpec spec = BetaSpec::parse(cyl_beta);
            j["beta"] = spec.describe();
            j["n"] = cyl_n;
            c = cylinder_of_beta(spec, cyl_n, cyl_p);
        } else {
            throw ParseError("cylinder needs --word, or --beta together with --n");
        }
        j.update(cylinder_to_json(c));
        print_json(out, j);
    });

    // partition-check
    long part_n = 0;
    std::string part_lo;
    std::string part_hi;
    long part_p = 80;
    auto* partition = app.add_subcommand("partition-check",
                                         "verify that depth-n cylinders tile a base range");
    partition->add_option("--n", part_n, "cylinder depth")->required();
    partition->add_option("--beta-lo", part_lo, "left end of the range (open)")->required();
    partition->add_option("--beta-hi", part_hi, "right end of the range (closed)")->required();
    partition->add_option("--p", part_p, "endpoint precision in bits")->capture_default_str();
    partition->callback([&] {
        BetaSpec lo = BetaSpec::parse(part_lo);
        BetaSpec hi = BetaSpec::parse(part_hi);
        PartitionReport rep = verify_partition(part_n, lo, hi, part_p);
        ordered_json j;
        j["n"] = part_n;
        j["beta_lo"] = lo.describe();
        j["beta_hi"] = hi.describe();
        j["p"] = part_p;
        j.update(partition_to_json(rep));
        print_json(out, j);
    });

    // density
    std::string den_beta;
    long den_n_max = 0;
    long den_p = 0;
    std::string den_format = "csv";
    auto* density = app.add_subcommand("density", "certified local density table along a base");
    density->add_option("--beta", den_beta, "base")->required();
    density->add_option("--n-max", den_n_max, "largest depth")->required();
    density->add_option("--p", den_p, "precision in bits (0 = auto)")->capture_default_str();
    density->add_option("--format", den_format, "csv or json")->capture_default_str();
    density->callback([&] {
        if (den_format != "json" && den_format != "csv")
            throw ParseError("format must be json or csv");
        BetaSpec spec = BetaSpec::parse(den_beta);
        DensityProfile prof = density_profile(spec, den_n_max, den_p);
        if (den_format == "csv") {
            out << density_to_csv(prof);
            return;
        }
        ordered_json j;
        j["beta"] = spec.describe();
        j.update(density_to_json(prof));
        print_json(out, j);
    });

    // cantor
    CantorFlags cf;
    auto* cantor = app.add_subcommand("cantor", "build the nested construction and report it");
    add_cantor_flags(cantor, cf);
    cantor->callback([&] {
        CantorConfig cfg = make_config(cf);
        std::vector<GenerationParams> sched = generation_schedule(cfg, cfg.K);
        DigitWord w = sample_word(cfg, cfg.K);
        RecurrenceInfo info = recurrence_time(w);
        LocalDimensionReport rep = local_dimension_sequence(cfg, cfg.K, cf.p);
        BoxDimensionEstimate box = box_dimension_estimate(cfg, cfg.K, cf.p);
        ordered_json j;
        j["config"] = config_to_json(cfg);
        j["generations"] = schedule_to_json(sched);
        ordered_json wj;
        wj["length"] = w.size();
        size_t head = std::min<size_t>(w.size(), 48);
        wj["head"] = word_to_string(DigitWord(w.begin(), w.begin() + head));
        wj["tau"] = info.tau;
        wj["t"] = info.t;
        j["word"] = wj;
        j["local_dimension"] = local_dimension_to_json(rep);
        j["box_estimate"] = box_estimate_to_json(box);
        print_json(out, j);
    });

    // dim-estimate
    CantorFlags df;
    auto* dim = app.add_subcommand("dim-estimate", "box-count estimate for the construction");
    add_cantor_flags(dim, df);
    dim->callback([&] {
        CantorConfig cfg = make_config(df);
        ordered_json j;
        j["config"] = config_to_json(cfg);
        j["generations"] = schedule_to_json(generation_schedule(cfg, cfg.K));
        j["estimate"] = box_estimate_to_json(box_dimension_estimate(cfg, cfg.K, df.p));
        print_json(out, j);
    });

    // ball-check
    CantorFlags bf;
    long bc_samples = 20;
    auto* ball = app.add_subcommand("ball-check",
                                    "sample balls and count sibling cylinders they meet");
    add_cantor_flags(ball, bf);
    ball->add_option("--samples", bc_samples, "number of sampled depths")->capture_default_str();
    ball->callback([&] {
        CantorConfig cfg = make_config(bf);
        BallCheckReport rep = ball_mass_bound_check(cfg, bc_samples, bf.p);
        ordered_json j;
        j["config"] = config_to_json(cfg);
        j.update(ball_report_to_json(rep));
        print_json(out, j);
    });

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("betacyl");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const PrecisionExhaustedError& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace betacyl
