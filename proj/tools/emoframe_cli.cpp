#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emoframe/detector.hpp"
#include "emoframe/errors.hpp"
#include "emoframe/evaluation.hpp"
#include "emoframe/multimodal.hpp"
#include "emoframe/ontology.hpp"
#include "emoframe/query.hpp"
#include "emoframe/triggers.hpp"
#include "emoframe/turtle.hpp"
#include "emoframe/vocab.hpp"

namespace {

using namespace emoframe;

Term emotion_term(const std::string& name) {
    return Term::iri(ns::be + name);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cli/io", "cannot write " + out_path);
    out << text;
}

std::string table_json(const ResultTable& table, const PrefixMap& prefixes) {
    auto shorten = [&](const Term& t) {
        if (t.is_iri())
            if (auto s = prefixes.shorten(t.value)) return *s;
        return t.value;
    };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = shorten(row[i]);
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

Graph build_trigger_kg(const std::string& assets) {
    Graph closure = infer_closures(load_bundled_ontology(assets, OntologyModule::All));
    static const char* names[] = {"anger", "disgust", "enjoyment", "fear", "sadness", "surprise"};
    static const Term emotions[] = {vocab::be_anger, vocab::be_disgust, vocab::be_enjoyment,
                                    vocab::be_fear,  vocab::be_sadness, vocab::be_surprise};
    Graph kg;
    for (std::size_t i = 0; i < 6; ++i) {
        auto slm = starting_lexical_material(closure, emotions[i]);
        kg = merge(kg, materialize(expand(slm, load_snapshot(assets, names[i]))));
    }
    return kg;
}

int run(int argc, char** argv) {
    CLI::App app{"emoframe: emotion-frame knowledge-graph engine"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string assets = "assets";
    app.add_option("--assets", assets, "asset root directory")->envname("EMOFRAME_ASSETS");

    std::string format = "tsv";

    // load
    auto* load = app.add_subcommand("load", "parse a Turtle file and re-serialize it");
    std::string load_in, load_out, load_format = "turtle";
    load->add_option("--in", load_in, "input Turtle file")->required();
    load->add_option("--out", load_out, "output file (stdout when omitted)");
    load->add_option("--serialization", load_format, "turtle or ntriples");

    // query
    auto* query = app.add_subcommand("query", "run a query file against a Turtle file");
    std::string query_in, query_file;
    query->add_option("--in", query_in, "input Turtle file")->required();
    query->add_option("--query", query_file, "query file")->required();
    query->add_option("--format", format, "tsv or json");

    // infer
    auto* infer = app.add_subcommand("infer", "emit the rule closure of a graph");
    std::string infer_in, infer_out;
    infer->add_option("--in", infer_in, "input Turtle file (bundled ontology when omitted)");
    infer->add_option("--out", infer_out, "output file (stdout when omitted)");

    // check
    auto* check = app.add_subcommand("check", "run the consistency rules");
    std::string check_in;
    check->add_option("--in", check_in, "input Turtle file (bundled ontology when omitted)");

    // cq
    auto* cq = app.add_subcommand("cq", "answer a bundled competency question");
    int cq_n = 0;
    std::string cq_emotion;
    cq->add_option("--n", cq_n, "competency question number (1-5)")->required();
    cq->add_option("--emotion", cq_emotion, "emotion argument (CQ3 optional, CQ5 required)");
    cq->add_option("--format", format, "tsv or json");

    // triggers
    auto* triggers = app.add_subcommand("triggers", "expand and materialize a trigger KG");
    std::string trig_emotion, trig_out, trig_endpoint, trig_cache = "cache";
    unsigned trig_timeout = 10000;
    triggers->add_option("--emotion", trig_emotion, "emotion local name, e.g. Disgust")->required();
    triggers->add_option("--out", trig_out, "output Turtle file (stdout when omitted)");
    triggers->add_option("--endpoint", trig_endpoint, "SPARQL endpoint (bundled snapshot when omitted)")
        ->envname("EMOFRAME_ENDPOINT");
    triggers->add_option("--cache", trig_cache, "response cache directory");
    triggers->add_option("--timeout", trig_timeout, "endpoint timeout in milliseconds");

    // detect
    auto* detect = app.add_subcommand("detect", "detect emotions in sentences, one per line");
    std::string det_in, det_dir;
    unsigned det_jobs = 1;
    detect->add_option("--in", det_in, "UTF-8 text file, one sentence per line")->required();
    detect->add_option("--out-dir", det_dir, "directory for per-sentence graphs");
    detect->add_option("--jobs", det_jobs, "parallel detection jobs");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate the detector on a labeled corpus");
    std::string eval_corpus, eval_emotion;
    unsigned eval_jobs = 1;
    eval->add_option("--corpus", eval_corpus, "TSV corpus (id, text, emotion, intensity)")->required();
    eval->add_option("--emotion", eval_emotion, "restrict to one gold label (anger/fear/sadness/joy)");
    eval->add_option("--jobs", eval_jobs, "parallel detection jobs");
    eval->add_option("--format", format, "tsv or json");

    // transpose
    auto* transpose_cmd = app.add_subcommand("transpose", "turn a dataset CSV into a graph");
    std::string tr_in, tr_out, tr_dataset;
    transpose_cmd->add_option("--in", tr_in, "dataset CSV")->required();
    transpose_cmd->add_option("--dataset", tr_dataset, "crema or ferplus")->required();
    transpose_cmd->add_option("--out", tr_out, "output Turtle file (stdout when omitted)");

    // filter-items
    auto* filter = app.add_subcommand("filter-items", "items exceeding per-emotion thresholds");
    std::string fi_in, fi_dataset;
    std::vector<std::string> fi_constraints;
    filter->add_option("--in", fi_in, "dataset CSV")->required();
    filter->add_option("--dataset", fi_dataset, "crema or ferplus")->required();
    filter->add_option("--constraint", fi_constraints, "Emotion:min pair, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*load) {
            Graph g = parse_turtle_file(load_in);
            SerializeFormat sf =
                load_format == "ntriples" ? SerializeFormat::NTriples : SerializeFormat::Turtle;
            write_output(serialize(g, sf), load_out);
        } else if (*query) {
            Graph g = parse_turtle_file(query_in);
            QueryAST q = parse_query_file(query_file);
            ResultTable table = evaluate(q, g);
            PrefixMap prefixes = load_prefix_manifest(assets + "/prefixes.tsv");
            std::cout << (format == "json" ? table_json(table, prefixes) : to_tsv(table, prefixes));
        } else if (*infer) {
            Graph g = infer_in.empty() ? load_bundled_ontology(assets, OntologyModule::All)
                                       : parse_turtle_file(infer_in);
            write_output(serialize(infer_closures(g), SerializeFormat::Turtle), infer_out);
        } else if (*check) {
            Graph g = check_in.empty() ? load_bundled_ontology(assets, OntologyModule::All)
                                       : parse_turtle_file(check_in);
            ConsistencyReport report = check_consistency(infer_closures(g));
            PrefixMap prefixes = load_prefix_manifest(assets + "/prefixes.tsv");
            std::cout << report.violations.size() << " violations\n"
                      << consistency_report_jsonl(report, prefixes);
            return report.pass ? 0 : 1;
        } else if (*cq) {
            Graph closure = infer_closures(load_bundled_ontology(assets, OntologyModule::All));
            std::optional<Term> argument;
            if (!cq_emotion.empty()) argument = emotion_term(cq_emotion);
            ResultTable table = answer_cq(closure, cq_n, assets, argument);
            PrefixMap prefixes = load_prefix_manifest(assets + "/prefixes.tsv");
            std::cout << (format == "json" ? table_json(table, prefixes) : to_tsv(table, prefixes));
        } else if (*triggers) {
            Graph closure = infer_closures(load_bundled_ontology(assets, OntologyModule::All));
            Term emotion = emotion_term(trig_emotion);
            auto slm = starting_lexical_material(closure, emotion);
            Graph snapshot =
                trig_endpoint.empty()
                    ? load_snapshot(assets, lower(trig_emotion))
                    : fetch_remote(trig_endpoint, emotion, slm,
                                   std::chrono::milliseconds(trig_timeout), assets, trig_cache);
            write_output(serialize(materialize(expand(slm, snapshot)), SerializeFormat::Turtle),
                         trig_out);
        } else if (*detect) {
            std::ifstream in(det_in);
            if (!in) throw Error("cli/io", "cannot read " + det_in);
            Lexicon lexicon = load_lexicon(assets);
            Graph kg = build_trigger_kg(assets);
            if (!det_dir.empty()) std::filesystem::create_directories(det_dir);
            std::vector<std::string> lines;
            for (std::string line; std::getline(in, line);) lines.push_back(line);

            std::vector<std::optional<SentenceGraph>> graphs(lines.size());
            std::vector<std::string> errors(lines.size());
            auto worker = [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                    std::string sid = "s" + std::to_string(i + 1);
                    try {
                        graphs[i] = annotate(build_sentence_graph(sid, lines[i], lexicon), kg);
                    } catch (const Error& e) {
                        errors[i] = e.code();
                    }
                }
            };
            unsigned workers = std::max(1u, std::min<unsigned>(det_jobs,
                                                               static_cast<unsigned>(lines.size())));
            if (workers <= 1) {
                worker(0, lines.size());
            } else {
                std::vector<std::thread> pool;
                std::size_t chunk = (lines.size() + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    std::size_t begin = w * chunk;
                    std::size_t end = std::min(lines.size(), begin + chunk);
                    if (begin < end) pool.emplace_back(worker, begin, end);
                }
                for (std::thread& t : pool) t.join();
            }

            std::cout << "id\temotion\tcount\n";
            for (std::size_t i = 0; i < lines.size(); ++i) {
                std::string sid = "s" + std::to_string(i + 1);
                if (!graphs[i]) {
                    std::cerr << sid << ": no graph (" << errors[i] << ")\n";
                    continue;
                }
                if (!det_dir.empty())
                    serialize_file(graphs[i]->graph, det_dir + "/" + sid + ".ttl",
                                   SerializeFormat::Turtle);
                for (const auto& [emotion, nodes] : profile(*graphs[i]).evocations)
                    std::cout << sid << '\t' << emotion.local_name() << '\t' << nodes.size() << '\n';
            }
        } else if (*eval) {
            Lexicon lexicon = load_lexicon(assets);
            Graph kg = build_trigger_kg(assets);
            auto instances = load_corpus(eval_corpus);
            std::vector<std::string> labels =
                eval_emotion.empty() ? std::vector<std::string>{"anger", "fear", "sadness", "joy"}
                                     : std::vector<std::string>{eval_emotion};
            std::vector<EmotionMetrics> rows;
            for (const std::string& label : labels) {
                Term target = corpus_emotion(label);
                std::vector<LabeledInstance> slice;
                for (const auto& inst : instances)
                    if (inst.gold == target) slice.push_back(inst);
                if (slice.empty()) continue;
                rows.push_back(evaluate_corpus(slice, kg, lexicon, target, eval_jobs));
            }
            std::cout << (format == "json" ? metrics_json(rows) : metrics_table(rows));
        } else if (*transpose_cmd) {
            Dataset dataset = tr_dataset == "crema" ? Dataset::Crema : Dataset::Ferplus;
            Graph g = transpose(load_annotations(tr_in, dataset), dataset);
            write_output(serialize(g, SerializeFormat::Turtle), tr_out);
        } else if (*filter) {
            Dataset dataset = fi_dataset == "crema" ? Dataset::Crema : Dataset::Ferplus;
            Graph g = transpose(load_annotations(fi_in, dataset), dataset);
            std::vector<std::pair<Term, double>> constraints;
            for (const std::string& c : fi_constraints) {
                auto colon = c.find(':');
                if (colon == std::string::npos)
                    throw Error("cli/usage", "constraint must be Emotion:min, got " + c);
                constraints.emplace_back(emotion_term(c.substr(0, colon)),
                                         std::stod(c.substr(colon + 1)));
            }
            for (const std::string& id : query_multi_emotion(g, constraints)) std::cout << id << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
