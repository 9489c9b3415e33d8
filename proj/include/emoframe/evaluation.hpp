#ifndef EMOFRAME_EVALUATION_HPP
#define EMOFRAME_EVALUATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "emoframe/detector.hpp"
#include "emoframe/graph.hpp"

namespace emoframe {

struct LabeledInstance {
    std::string id;
    std::string text;
    Term gold;              // be:Anger, be:Fear, be:Sadness or be:Enjoyment
    double intensity = 0.0; // in [0, 1]
};

/// Map a corpus emotion label (anger/fear/sadness/joy) to its class term.
Term corpus_emotion(const std::string& label);

/// Parse a TSV corpus (id, text, emotion, intensity). Malformed rows are
/// skipped with a counted warning on the diagnostic stream.
std::vector<LabeledInstance> load_corpus(const std::string& path);

/// Sample Pearson correlation. Throws on length mismatch, empty input or
/// zero variance (never silently 0).
double pearson(std::span<const double> xs, std::span<const double> ys);

/// F1 from precision/recall percentages.
double f1_score(double precision, double recall);

struct EmotionMetrics {
    std::string emotion;         // corpus label
    std::size_t instances = 0;
    std::size_t graphs_built = 0;
    std::size_t failures = 0;    // sentences producing no graph
    std::size_t detections = 0;
    double precision = 0.0;      // percent
    double recall = 0.0;         // percent
    double f1 = 0.0;             // percent
    double pearson_r = 0.0;
};

/// Run the detector over a single-emotion corpus slice. A detection is a
/// profile count >= 1 for the target; every gold label equals the target, so
/// precision is 100 whenever at least one detection occurs. Pearson r is
/// computed between min-max normalized detection counts and gold intensities
/// over the instances that produced a graph (an explicit construction; see
/// the report output). `jobs` parallelizes per-sentence detection.
EmotionMetrics evaluate_corpus(const std::vector<LabeledInstance>& instances,
                               const Graph& trigger_kg, const Lexicon& lexicon,
                               const Term& target, unsigned jobs = 1);

/// Render reports as JSON and as a text table (Emotion / P / R / F1 / r).
std::string metrics_json(const std::vector<EmotionMetrics>& rows);
std::string metrics_table(const std::vector<EmotionMetrics>& rows);

} // namespace emoframe

#endif
