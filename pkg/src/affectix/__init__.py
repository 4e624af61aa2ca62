"""Emotion intensity scoring over text.

Scores sentences by the share of their words falling in the extreme
pleasantness tails of an affect lexicon, summarizes documents by the
mean and spread of that series, and provides the statistics and
cross-validated classifiers used to compare corpora and label subjects.
"""

__version__ = "0.1.0"

from .classify import (
    EvalReport,
    FeatureVector,
    FoldPlan,
    IMPLEMENTED_CLASSIFIERS,
    LabeledDataset,
    UNIMPLEMENTED_CLASSIFIERS,
    cross_validate,
    f1_score,
    features_from_profiles,
    fit_predict,
    roc_auc,
    stratified_kfold,
)
from .corpus import CorpusManifest, CorpusRun, load_manifest, run_corpus
from .errors import AffectixError
from .intensity import (
    AdjectiveLexicon,
    DocumentProfile,
    SentenceScore,
    adjective_rate,
    ei_sentence,
    profile_document,
)
from .lexicon import (
    AffectLexicon,
    DalEntry,
    EmotionWordList,
    build_emotion_list,
    is_emotional,
    load_lexicon,
    parse_dal,
)
from .stats import (
    SampleSummary,
    TTestResult,
    regularized_incomplete_beta,
    student_t_cdf,
    summarize,
    two_sample_ttest,
)
from .textproc import Document, Sentence, segment_document, split_sentences, tokenize

__all__ = [
    "AffectLexicon",
    "AffectixError",
    "AdjectiveLexicon",
    "CorpusManifest",
    "CorpusRun",
    "DalEntry",
    "Document",
    "DocumentProfile",
    "EmotionWordList",
    "EvalReport",
    "FeatureVector",
    "FoldPlan",
    "IMPLEMENTED_CLASSIFIERS",
    "LabeledDataset",
    "SampleSummary",
    "Sentence",
    "SentenceScore",
    "TTestResult",
    "UNIMPLEMENTED_CLASSIFIERS",
    "adjective_rate",
    "build_emotion_list",
    "cross_validate",
    "ei_sentence",
    "f1_score",
    "features_from_profiles",
    "fit_predict",
    "is_emotional",
    "load_lexicon",
    "load_manifest",
    "parse_dal",
    "profile_document",
    "regularized_incomplete_beta",
    "roc_auc",
    "run_corpus",
    "segment_document",
    "split_sentences",
    "stratified_kfold",
    "student_t_cdf",
    "summarize",
    "tokenize",
    "two_sample_ttest",
]
