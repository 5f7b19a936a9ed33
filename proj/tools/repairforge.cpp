#include "repairforge/canonical.hpp"
#include "repairforge/conflict_graph.hpp"
#include "repairforge/constraints.hpp"
#include "repairforge/core_model.hpp"
#include "repairforge/disjunctive.hpp"
#include "repairforge/errors.hpp"
#include "repairforge/families.hpp"
#include "repairforge/repairs.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace repairforge;

bool logEnabled() {
    const char* level = std::getenv("REPAIRFORGE_LOG");
    return level != nullptr && *level != '\0';
}

void logLine(const std::string& msg) {
    if (logEnabled()) std::cerr << "[repairforge] " << msg << "\n";
}

struct CommonInputs {
    std::string factsPath;
    std::string constraintsPath;
    std::string format = "text";

    Database db;
    std::vector<DenialConstraint> constraints;

    void load() {
        std::ifstream facts(factsPath);
        if (!facts) throw Error("cannot open facts file '" + factsPath + "'");
        db = parseFacts(facts);
        std::ifstream dcs(constraintsPath);
        if (!dcs) throw Error("cannot open constraints file '" + constraintsPath + "'");
        constraints = parseConstraints(dcs, &db.schema());
        logLine("loaded " + std::to_string(db.size()) + " facts, " +
                std::to_string(constraints.size()) + " constraints");
    }

    void addTo(CLI::App* cmd, bool withFormat = true) {
        cmd->add_option("-f,--facts", factsPath, "facts file")->required();
        cmd->add_option("-c,--constraints", constraintsPath, "denial constraints file")->required();
        if (withFormat) {
            cmd->add_option("--format", format, "output format")
                    ->check(CLI::IsMember({"text", "json"}));
        }
    }
};

BuildOptions makeBuildOptions(const std::string& mode, std::size_t maxDisjunctions,
                              std::size_t maxWidth) {
    BuildOptions opts;
    opts.mode = mode == "eager" ? BuildMode::EagerSubsumption : BuildMode::Faithful;
    opts.maxDisjunctions = maxDisjunctions;
    opts.maxDisjunctionWidth = maxWidth;
    return opts;
}

DisjunctiveDatabase buildCanonical(const CommonInputs& in, const BuildOptions& opts,
                                   const std::string& fastPath, BuildStats* stats) {
    ConstraintClass cls;
    bool single = in.constraints.size() == 1;
    if (single) cls = classify(in.constraints.front(), in.db.schema());

    if (fastPath == "force-key") {
        if (!single || cls.tag != ConstraintClass::Tag::Key) {
            throw Error("--fast-path force-key: constraint set is not a single key");
        }
        return canonicalOneKey(in.db, cls);
    }
    if (fastPath == "force-fd") {
        if (!single || cls.tag != ConstraintClass::Tag::FunctionalDependency) {
            throw Error("--fast-path force-fd: constraint set is not a single FD");
        }
        return canonicalOneFd(in.db, cls, opts.maxDisjunctions);
    }
    if (fastPath == "auto" && single) {
        if (cls.tag == ConstraintClass::Tag::Key) {
            logLine("fast path: single key");
            return canonicalOneKey(in.db, cls);
        }
        if (cls.tag == ConstraintClass::Tag::FunctionalDependency) {
            logLine("fast path: single FD");
            return canonicalOneFd(in.db, cls, opts.maxDisjunctions);
        }
    }
    return algorithm1(in.db, in.constraints, opts, stats);
}

FamilySpec parseFamily(const std::string& name, std::size_t n,
                       const std::vector<std::size_t>& sizes) {
    FamilySpec spec;
    spec.n = n;
    spec.cliqueSizes = sizes;
    if (name == "dn") {
        spec.family = FamilySpec::Family::DnTwoKeys;
    } else if (name == "onefd") {
        spec.family = FamilySpec::Family::OneFdExponential;
    } else if (name == "cliques") {
        spec.family = FamilySpec::Family::OneKeyCliques;
        if (sizes.empty()) throw Error("--family cliques requires --sizes");
    } else {
        throw Error("unknown family '" + name + "'");
    }
    return spec;
}

int runMain(int argc, char** argv) {
    CLI::App app{"canonical disjunctive databases for repairs of inconsistent databases"};
    app.require_subcommand(1);

    // build
    CommonInputs buildIn;
    std::string buildMode = "faithful";
    std::string fastPath = "auto";
    std::size_t maxDisjunctions = 1'000'000;
    std::size_t maxWidth = 0;
    bool buildStatsFlag = false;
    auto* build = app.add_subcommand("build", "compute the canonical disjunctive database");
    buildIn.addTo(build);
    build->add_option("--mode", buildMode)->check(CLI::IsMember({"faithful", "eager"}));
    build->add_option("--fast-path", fastPath)
            ->check(CLI::IsMember({"off", "auto", "force-key", "force-fd"}));
    build->add_option("--max-disjunctions", maxDisjunctions);
    build->add_option("--max-width", maxWidth);
    build->add_flag("--stats", buildStatsFlag, "also print build statistics to stderr");

    // repairs
    CommonInputs repairsIn;
    std::string semantics = "s";
    std::string fromDisjdb;
    std::size_t maxFacts = 24;
    std::size_t maxWorlds = 1'000'000;
    auto* repairsCmd = app.add_subcommand("repairs", "enumerate repairs");
    repairsCmd->add_option("-f,--facts", repairsIn.factsPath, "facts file");
    repairsCmd->add_option("-c,--constraints", repairsIn.constraintsPath, "constraints file");
    repairsCmd->add_option("--semantics", semantics)->check(CLI::IsMember({"s", "c"}));
    repairsCmd->add_option("--from-disjdb", fromDisjdb,
                           "enumerate the minimal models of a saved disjunctive database");
    repairsCmd->add_option("--format", repairsIn.format)->check(CLI::IsMember({"text", "json"}));
    repairsCmd->add_option("--max-facts", maxFacts);
    repairsCmd->add_option("--max-worlds", maxWorlds);

    // check
    CommonInputs checkIn;
    std::string checkSemantics = "s";
    auto* check = app.add_subcommand("check", "verify against the brute-force oracle");
    checkIn.addTo(check);
    check->add_option("--semantics", checkSemantics)->check(CLI::IsMember({"s", "c"}));

    // gen
    std::string familyName;
    std::size_t familyN = 1;
    std::vector<std::size_t> cliqueSizes;
    std::string outPrefix;
    auto* gen = app.add_subcommand("gen", "generate an instance family");
    gen->add_option("--family", familyName)->required();
    gen->add_option("--n", familyN);
    gen->add_option("--sizes", cliqueSizes)->delimiter(',');
    gen->add_option("-o,--output", outPrefix, "output file prefix")->required();

    // expect
    std::string expectFamily;
    std::size_t expectN = 1;
    std::vector<std::size_t> expectSizes;
    std::string expectSemantics = "s";
    auto* expect = app.add_subcommand("expect", "closed-form canonical database size");
    expect->add_option("--family", expectFamily)->required();
    expect->add_option("--n", expectN);
    expect->add_option("--sizes", expectSizes)->delimiter(',');
    expect->add_option("--semantics", expectSemantics)->check(CLI::IsMember({"s", "c"}));

    // dump-hypergraph
    CommonInputs dumpIn;
    auto* dump = app.add_subcommand("dump-hypergraph", "emit the conflict hypergraph as JSON");
    dumpIn.addTo(dump, false);

    // stats
    CommonInputs statsIn;
    std::string statsMode = "faithful";
    auto* statsCmd = app.add_subcommand("stats", "build statistics as JSON");
    statsIn.addTo(statsCmd, false);
    statsCmd->add_option("--mode", statsMode)->check(CLI::IsMember({"faithful", "eager"}));

    CLI11_PARSE(app, argc, argv);

    if (build->parsed()) {
        buildIn.load();
        BuildStats stats;
        auto dd = buildCanonical(buildIn, makeBuildOptions(buildMode, maxDisjunctions, maxWidth),
                                 fastPath, &stats);
        if (buildIn.format == "json") {
            std::cout << toJson(dd) << "\n";
        } else {
            writeText(dd, std::cout);
        }
        if (buildStatsFlag) std::cerr << stats.toJson() << "\n";
        return 0;
    }

    if (repairsCmd->parsed()) {
        RepairKind kind = semantics == "c" ? RepairKind::CRepair : RepairKind::SRepair;
        RepairSet result;
        if (!fromDisjdb.empty()) {
            std::ifstream in(fromDisjdb);
            if (!in) throw Error("cannot open disjunctive database '" + fromDisjdb + "'");
            auto dd = parseDisjunctiveDatabase(in);
            EnumerationLimits limits{maxFacts, maxWorlds};
            auto worlds = minimalModels(dd, limits);
            std::sort(worlds.begin(), worlds.end(), [](const FactSet& a, const FactSet& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
            result = RepairSet{kind, std::move(worlds)};
        } else {
            if (repairsIn.factsPath.empty() || repairsIn.constraintsPath.empty()) {
                throw Error("repairs: need -f and -c, or --from-disjdb");
            }
            repairsIn.load();
            RepairLimits limits{maxFacts, maxWorlds};
            result = kind == RepairKind::CRepair ? cRepairs(repairsIn.db, repairsIn.constraints, limits)
                                                 : sRepairs(repairsIn.db, repairsIn.constraints, limits);
        }
        if (repairsIn.format == "json") {
            std::cout << toJson(result) << "\n";
        } else {
            writeText(result, std::cout);
        }
        return 0;
    }

    if (check->parsed()) {
        checkIn.load();
        RepairKind kind = checkSemantics == "c" ? RepairKind::CRepair : RepairKind::SRepair;
        RepairSet oracle = bruteForceRepairs(checkIn.db, checkIn.constraints, kind);
        RepairSet enumerated = kind == RepairKind::CRepair
                                       ? cRepairs(checkIn.db, checkIn.constraints)
                                       : sRepairs(checkIn.db, checkIn.constraints);
        DisjunctiveDatabase viaOracle = canonicalFromWorlds(oracle.worlds);
        DisjunctiveDatabase viaMain =
                kind == RepairKind::CRepair
                        ? canonicalFromWorlds(enumerated.worlds)
                        : algorithm1(checkIn.db, checkIn.constraints);
        bool ok = oracle.worlds == enumerated.worlds && viaOracle == viaMain;
        std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
        return ok ? 0 : 2;
    }

    if (gen->parsed()) {
        FamilySpec spec = parseFamily(familyName, familyN, cliqueSizes);
        FamilyInstance instance = generate(spec);
        std::ofstream facts(outPrefix + ".facts");
        if (!facts) throw Error("cannot write '" + outPrefix + ".facts'");
        serialize(instance.db, facts);
        std::ofstream dcs(outPrefix + ".dc");
        if (!dcs) throw Error("cannot write '" + outPrefix + ".dc'");
        for (const auto& c : instance.constraints) dcs << c.toString() << "\n";
        return 0;
    }

    if (expect->parsed()) {
        FamilySpec spec = parseFamily(expectFamily, expectN, expectSizes);
        RepairKind kind = expectSemantics == "c" ? RepairKind::CRepair : RepairKind::SRepair;
        std::cout << expectedSize(spec, kind) << "\n";
        return 0;
    }

    if (dump->parsed()) {
        dumpIn.load();
        ConflictHypergraph graph = buildConflictHypergraph(dumpIn.db, dumpIn.constraints);
        nlohmann::json vertices = nlohmann::json::array();
        for (const Fact& f : graph.vertices()) vertices.push_back(f.toString());
        nlohmann::json edges = nlohmann::json::array();
        for (const FactSet& e : graph.edges()) {
            nlohmann::json one = nlohmann::json::array();
            for (const Fact& f : e) one.push_back(f.toString());
            edges.push_back(std::move(one));
        }
        std::cout << nlohmann::json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}
                             .dump()
                  << "\n";
        return 0;
    }

    if (statsCmd->parsed()) {
        statsIn.load();
        BuildStats stats;
        algorithm1(statsIn.db, statsIn.constraints,
                   makeBuildOptions(statsMode, 1'000'000, 0), &stats);
        std::cout << stats.toJson() << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::string format = "text";
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--format" && i + 1 < argc) format = argv[i + 1];
    }
    try {
        return runMain(argc, argv);
    } catch (const repairforge::Error& e) {
        if (format == "json") {
            std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
