#include "emoframe/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "emoframe/errors.hpp"
#include "emoframe/vocab.hpp"

namespace emoframe {

Term corpus_emotion(const std::string& label) {
    if (label == "anger") return vocab::be_anger;
    if (label == "fear") return vocab::be_fear;
    if (label == "sadness") return vocab::be_sadness;
    if (label == "joy" || label == "enjoyment") return vocab::be_enjoyment;
    throw Error("evaluation/label", "unknown corpus emotion label: " + label);
}

std::vector<LabeledInstance> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("evaluation/io", "cannot read " + path);

    std::vector<LabeledInstance> instances;
    std::size_t skipped = 0;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, '\t')) fields.push_back(field);

        auto skip = [&](const std::string& why) {
            ++skipped;
            std::cerr << "warning: " << path << ":" << lineno << ": " << why << ", row skipped\n";
        };
        if (fields.size() != 4) {
            skip("expected 4 columns, got " + std::to_string(fields.size()));
            continue;
        }
        double intensity;
        try {
            intensity = std::stod(fields[3]);
        } catch (const std::exception&) {
            skip("unparsable intensity '" + fields[3] + "'");
            continue;
        }
        if (intensity < 0.0 || intensity > 1.0) {
            skip("intensity " + fields[3] + " outside [0,1]");
            continue;
        }
        instances.push_back({fields[0], fields[1], corpus_emotion(fields[2]), intensity});
    }
    if (skipped) std::cerr << "warning: " << skipped << " malformed rows skipped in " << path << "\n";
    return instances;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw Error("evaluation/length-mismatch", "pearson inputs differ in length");
    const std::size_t n = xs.size();
    if (n < 2) throw Error("evaluation/undefined-correlation", "need at least two points");

    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error("evaluation/undefined-correlation", "zero variance input");
    return sxy / std::sqrt(sxx * syy);
}

double f1_score(double precision, double recall) {
    if (precision + recall <= 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

EmotionMetrics evaluate_corpus(const std::vector<LabeledInstance>& instances,
                               const Graph& trigger_kg, const Lexicon& lexicon,
                               const Term& target, unsigned jobs) {
    for (const LabeledInstance& inst : instances)
        if (inst.gold != target)
            throw Error("evaluation/mixed-gold",
                        "instance " + inst.id + " has gold " + inst.gold.value +
                            ", expected " + target.value);

    std::vector<LabeledInstance> ordered = instances;
    std::sort(ordered.begin(), ordered.end(),
              [](const LabeledInstance& a, const LabeledInstance& b) { return a.id < b.id; });

    // -1 marks a failed graph; otherwise the target-emotion evocation count.
    std::vector<long> counts(ordered.size(), -1);
    auto detect = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                SentenceGraph g = build_sentence_graph(ordered[i].id, ordered[i].text, lexicon);
                g = annotate(std::move(g), trigger_kg);
                counts[i] = static_cast<long>(profile(g).count(target));
            } catch (const Error&) {
                counts[i] = -1;
            }
        }
    };
    if (jobs <= 1 || ordered.size() < 2) {
        detect(0, ordered.size());
    } else {
        unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(ordered.size()));
        std::vector<std::thread> pool;
        std::size_t chunk = (ordered.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(ordered.size(), begin + chunk);
            if (begin < end) pool.emplace_back(detect, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    EmotionMetrics m;
    m.emotion = target.local_name();
    m.instances = ordered.size();
    std::vector<double> scores, intensities;
    long max_count = 0;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (counts[i] < 0) {
            ++m.failures;
            continue;
        }
        ++m.graphs_built;
        if (counts[i] >= 1) ++m.detections;
        scores.push_back(static_cast<double>(counts[i]));
        intensities.push_back(ordered[i].intensity);
        max_count = std::max(max_count, counts[i]);
    }

    m.precision = m.detections > 0 ? 100.0 : 0.0;
    m.recall = m.graphs_built > 0
                   ? 100.0 * static_cast<double>(m.detections) / static_cast<double>(m.graphs_built)
                   : 0.0;
    m.f1 = f1_score(m.precision, m.recall);
    if (max_count > 0)
        for (double& s : scores) s /= static_cast<double>(max_count); // min is always 0 or irrelevant to r
    m.pearson_r = pearson(scores, intensities);
    return m;
}

namespace {

std::string round2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string metrics_json(const std::vector<EmotionMetrics>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const EmotionMetrics& m : rows) {
        out.push_back({{"emotion", m.emotion},
                       {"instances", m.instances},
                       {"graphs_built", m.graphs_built},
                       {"failures", m.failures},
                       {"detections", m.detections},
                       {"precision", round2(m.precision)},
                       {"recall", round2(m.recall)},
                       {"f1", round2(m.f1)},
                       {"pearson_r", round2(m.pearson_r)},
                       {"score_construction", "detection count, min-max normalized per file"}});
    }
    return out.dump(2) + "\n";
}

std::string metrics_table(const std::vector<EmotionMetrics>& rows) {
    std::ostringstream out;
    out << "Emotion     Graphs  Detected  Precision  Recall   F1      r\n";
    for (const EmotionMetrics& m : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-11s %6zu  %8zu  %9.2f  %6.2f  %6.2f  %5.2f\n",
                      m.emotion.c_str(), m.graphs_built, m.detections, m.precision, m.recall,
                      m.f1, m.pearson_r);
        out << line;
    }
    out << "(scores for r: detection counts, min-max normalized per file)\n";
    return out.str();
}

} // namespace emoframe
