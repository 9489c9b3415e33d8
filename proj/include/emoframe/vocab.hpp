#ifndef EMOFRAME_VOCAB_HPP
#define EMOFRAME_VOCAB_HPP

#include <string>

#include "emoframe/term.hpp"

namespace emoframe {

/// Namespace IRIs. The bundled prefix manifest (assets/prefixes.tsv) is the
/// single source of truth; these constants mirror it and a unit test keeps
/// the two in sync.
namespace ns {
inline const std::string rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owl = "http://www.w3.org/2002/07/owl#";
inline const std::string xsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string skos = "http://www.w3.org/2004/02/skos/core#";
inline const std::string dul = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#";
inline const std::string efo = "https://w3id.org/emoframe/efo/";
inline const std::string be = "https://w3id.org/emoframe/be/";
inline const std::string fs = "https://w3id.org/emoframe/fs/";
inline const std::string fer = "https://w3id.org/emoframe/fer/";
inline const std::string cr = "https://w3id.org/emoframe/crema/";
inline const std::string wn = "https://w3id.org/emoframe/wn/";
inline const std::string vn = "https://w3id.org/emoframe/vn/";
inline const std::string fscore = "https://w3id.org/emoframe/fscore/";
inline const std::string fe = "https://w3id.org/emoframe/fe/";
inline const std::string cn = "https://w3id.org/emoframe/cn/";
inline const std::string pb = "https://w3id.org/emoframe/pb/";
inline const std::string yago = "https://w3id.org/emoframe/yago/";
inline const std::string premon = "https://w3id.org/emoframe/premon/";
inline const std::string babel = "https://w3id.org/emoframe/babel/";
inline const std::string wd = "https://w3id.org/emoframe/wd/";
inline const std::string wikt = "https://w3id.org/emoframe/wikt/";
inline const std::string dbp = "https://w3id.org/emoframe/dbp/";
inline const std::string umbel = "https://w3id.org/emoframe/umbel/";
inline const std::string sn = "https://w3id.org/emoframe/snapshot/";
inline const std::string sg = "https://w3id.org/emoframe/sg/";
} // namespace ns

namespace vocab {

inline const Term rdf_type = Term::iri(ns::rdf + "type");
inline const Term rdf_statement = Term::iri(ns::rdf + "Statement");
inline const Term rdf_subject = Term::iri(ns::rdf + "subject");
inline const Term rdf_predicate = Term::iri(ns::rdf + "predicate");
inline const Term rdf_object = Term::iri(ns::rdf + "object");
inline const Term rdfs_subclass_of = Term::iri(ns::rdfs + "subClassOf");
inline const Term rdfs_label = Term::iri(ns::rdfs + "label");
inline const Term rdfs_comment = Term::iri(ns::rdfs + "comment");
inline const Term owl_class = Term::iri(ns::owl + "Class");
inline const Term owl_object_property = Term::iri(ns::owl + "ObjectProperty");
inline const Term owl_inverse_of = Term::iri(ns::owl + "inverseOf");
inline const Term xsd_float = Term::iri(ns::xsd + "float");

// EmoCore
inline const Term efo_emotion = Term::iri(ns::efo + "Emotion");
inline const Term efo_emotion_situation = Term::iri(ns::efo + "EmotionSituation");
inline const Term efo_triggers = Term::iri(ns::efo + "triggers");
inline const Term efo_triggered_by = Term::iri(ns::efo + "triggeredBy");
inline const Term efo_model_note = Term::iri(ns::efo + "modelNote");
inline const Term fs_conceptual_frame = Term::iri(ns::fs + "ConceptualFrame");
inline const Term fs_frame_occurrence = Term::iri(ns::fs + "FrameOccurrence");
inline const Term fs_emotion_active = Term::iri(ns::fs + "EmotionActive");
inline const Term fs_emotion_directed = Term::iri(ns::fs + "EmotionDirected");
inline const Term fs_feeling = Term::iri(ns::fs + "Feeling");
inline const Term fs_mental_property = Term::iri(ns::fs + "MentalProperty");
inline const Term dul_description = Term::iri(ns::dul + "Description");
inline const Term dul_situation = Term::iri(ns::dul + "Situation");

// BE classes
inline const Term be_emotion = Term::iri(ns::be + "BE_Emotion");
inline const Term be_pre_condition = Term::iri(ns::be + "PreCondition");
inline const Term be_post_condition = Term::iri(ns::be + "PostCondition");
inline const Term be_emotion_counter = Term::iri(ns::be + "EmotionCounter");
inline const Term be_emotion_antidote = Term::iri(ns::be + "EmotionAntidote");
inline const Term be_emotion_impediment = Term::iri(ns::be + "EmotionImpediment");
inline const Term be_mood = Term::iri(ns::be + "Mood");
inline const Term be_perception_database = Term::iri(ns::be + "PerceptionDatabase");
inline const Term be_trigger = Term::iri(ns::be + "Trigger");
inline const Term be_personality_trait = Term::iri(ns::be + "PersonalityTrait");
inline const Term be_physical_change = Term::iri(ns::be + "PhysicalChange");
inline const Term be_physiological_change = Term::iri(ns::be + "PhysiologicalChange");
inline const Term be_psychopathology = Term::iri(ns::be + "Psychopathology");
inline const Term be_selective_filter_period = Term::iri(ns::be + "SelectiveFilterPeriod");
inline const Term be_signal = Term::iri(ns::be + "Signal");

// BE properties
inline const Term be_emotional_tendency_towards = Term::iri(ns::be + "emotionalTendencyTowards");
inline const Term be_has_antidote = Term::iri(ns::be + "hasAntidote");
inline const Term be_has_impediment = Term::iri(ns::be + "hasImpediment");
inline const Term be_has_pre_condition = Term::iri(ns::be + "hasPreCondition");
inline const Term be_more_intense_than = Term::iri(ns::be + "moreIntenseThan");
inline const Term be_less_intense_than = Term::iri(ns::be + "lessIntenseThan");
inline const Term be_has_polarity = Term::iri(ns::be + "hasPolarity");
inline const Term be_has_personality_trait = Term::iri(ns::be + "hasPersonalityTrait");
inline const Term be_has_action = Term::iri(ns::be + "hasAction");
inline const Term be_includes_signal_of = Term::iri(ns::be + "includesSignalOf");

// Polarity individuals
inline const Term be_negative_polarity = Term::iri(ns::be + "NegativePolarity");
inline const Term be_positive_polarity = Term::iri(ns::be + "PositivePolarity");
inline const Term be_neutral_polarity = Term::iri(ns::be + "NeutralPolarity");

// Top-level BE emotions
inline const Term be_anger = Term::iri(ns::be + "Anger");
inline const Term be_disgust = Term::iri(ns::be + "Disgust");
inline const Term be_enjoyment = Term::iri(ns::be + "Enjoyment");
inline const Term be_fear = Term::iri(ns::be + "Fear");
inline const Term be_sadness = Term::iri(ns::be + "Sadness");
inline const Term be_surprise = Term::iri(ns::be + "Surprise");

// Snapshot schema (trigger expansion input) and provenance
inline const Term sn_has_lexical_unit = Term::iri(ns::sn + "hasLexicalUnit");
inline const Term sn_has_frame_element = Term::iri(ns::sn + "hasFrameElement");
inline const Term sn_subsumes = Term::iri(ns::sn + "subsumes");
inline const Term sn_close_match = Term::iri(ns::sn + "closeMatch");
inline const Term sn_has_label = Term::iri(ns::sn + "hasLabel");
inline const Term sn_source_resource = Term::iri(ns::sn + "sourceResource");
inline const Term sn_expansion_step = Term::iri(ns::sn + "expansionStep");
inline const Term sn_matched_unit = Term::iri(ns::sn + "matchedUnit");
inline const Term efo_has_frame_element = Term::iri(ns::efo + "hasFrameElement");

// Sentence graph vocabulary
inline const Term sg_sentence = Term::iri(ns::sg + "Sentence");
inline const Term sg_token = Term::iri(ns::sg + "Token");
inline const Term sg_has_token = Term::iri(ns::sg + "hasToken");
inline const Term sg_surface = Term::iri(ns::sg + "surface");
inline const Term sg_lemma = Term::iri(ns::sg + "lemma");
inline const Term sg_pos = Term::iri(ns::sg + "pos");
inline const Term sg_sense = Term::iri(ns::sg + "sense");
inline const Term sg_begin = Term::iri(ns::sg + "beginIndex");
inline const Term sg_end = Term::iri(ns::sg + "endIndex");
inline const Term sg_text = Term::iri(ns::sg + "text");

} // namespace vocab

} // namespace emoframe

#endif
