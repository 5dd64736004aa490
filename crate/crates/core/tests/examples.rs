#[allow(dead_code)]
mod ingest_corpus {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ingest_corpus.rs"));
}

#[allow(dead_code)]
mod preprocess_tweets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/preprocess_tweets.rs"));
}

#[allow(dead_code)]
mod lexicon_labeling {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lexicon_labeling.rs"));
}

#[allow(dead_code)]
mod transformer_probabilities {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/transformer_probabilities.rs"
    ));
}

#[allow(dead_code)]
mod tfidf_features {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tfidf_features.rs"));
}

#[allow(dead_code)]
mod naive_bayes {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/naive_bayes.rs"));
}

#[allow(dead_code)]
mod logistic_regression {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/logistic_regression.rs"));
}

#[allow(dead_code)]
mod evaluation_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/evaluation_report.rs"));
}

#[allow(dead_code)]
mod corpus_analytics {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/corpus_analytics.rs"));
}

#[allow(dead_code)]
mod compare_corpora {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/compare_corpora.rs"));
}

#[allow(dead_code)]
mod full_pipeline {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/full_pipeline.rs"));
}

#[test]
fn ingest_corpus_example_runs() {
    ingest_corpus::run_example().expect("ingest_corpus example should run");
}

#[test]
fn preprocess_tweets_example_runs() {
    preprocess_tweets::run_example().expect("preprocess_tweets example should run");
}

#[test]
fn lexicon_labeling_example_runs() {
    lexicon_labeling::run_example().expect("lexicon_labeling example should run");
}

#[test]
fn transformer_probabilities_example_runs() {
    transformer_probabilities::run_example().expect("transformer_probabilities example should run");
}

#[test]
fn tfidf_features_example_runs() {
    tfidf_features::run_example().expect("tfidf_features example should run");
}

#[test]
fn naive_bayes_example_runs() {
    naive_bayes::run_example().expect("naive_bayes example should run");
}

#[test]
fn logistic_regression_example_runs() {
    logistic_regression::run_example().expect("logistic_regression example should run");
}

#[test]
fn evaluation_report_example_runs() {
    evaluation_report::run_example().expect("evaluation_report example should run");
}

#[test]
fn corpus_analytics_example_runs() {
    corpus_analytics::run_example().expect("corpus_analytics example should run");
}

#[test]
fn compare_corpora_example_runs() {
    compare_corpora::run_example().expect("compare_corpora example should run");
}

#[test]
fn full_pipeline_example_runs() {
    full_pipeline::run_example().expect("full_pipeline example should run");
}
