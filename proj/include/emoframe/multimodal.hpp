#ifndef EMOFRAME_MULTIMODAL_HPP
#define EMOFRAME_MULTIMODAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "emoframe/graph.hpp"

namespace emoframe {

enum class Dataset { Crema, Ferplus };
enum class Modality { Audio, Image };

struct AnnotatedItem {
    std::string id;   // e.g. "1001_DFA_ANG_XX" or zero-padded "0014735"
    Modality modality = Modality::Audio;
    std::vector<std::pair<Term, double>> values; // emotion class -> score >= 0
};

/// Parse a dataset CSV. CREMA rows use the summary layout
/// (FileName,Anger,Disgust,Fear,Happy,Neutral,Sad); FER+ rows use the
/// published annotator-tally layout. FER+ contempt/unknown/NF tallies are
/// dropped with a logged count.
std::vector<AnnotatedItem> load_annotations(const std::string& path, Dataset dataset);

/// One typed efo:EmotionSituation individual per item; for every positive
/// value one has<Emotion>Value triple and one be:includesSignalOf triple.
Graph transpose(const std::vector<AnnotatedItem>& items, Dataset dataset);

/// Ids of individuals whose value exceeds the threshold for every
/// constraint, sorted lexicographically. An empty constraint list returns
/// all situation individuals.
std::vector<std::string> query_multi_emotion(const Graph& graph,
                                             const std::vector<std::pair<Term, double>>& constraints);

} // namespace emoframe

#endif
